#pragma once

// Fourier transform on Q_p for step functions.
//
// For f at resolution (m, k) the transform is supported on p^{-k} Z_p and
// constant on cosets of p^m Z_p, so it is a step function at (k, m).  With
// x_n = n p^{-m} and gamma_j = j p^{-k} one has {x_n gamma_j}_p = (nj mod N)/N
// for N = p^{m+k}, hence
//
//   fhat_j = p^{-k} sum_n f_n e^{-2 pi i nj / N}
//
// and the inverse is the conjugate DFT weighted by p^{-m}.

#include <span>
#include <vector>

#include "padic_frames/stepfn.hpp"

namespace padic_frames {

namespace dft {

enum class Direction { forward = -1, backward = +1 };

/// Unnormalized O(N^2) DFT: X_j = sum_n x_n e^{sign 2 pi i nj / N}.
std::vector<Complex> naive(std::span<const Complex> x, Direction dir);

/// Radix-p decimation-in-time DFT for N = p^L; same contract as naive().
std::vector<Complex> radix(std::span<const Complex> x, std::int64_t p, Direction dir);

}  // namespace dft

/// Reference transform via the naive DFT.
StepFunction fourier(const StepFunction& f);
StepFunction inverse_fourier(const StepFunction& transform);

/// Same contracts, radix-p kernel.
StepFunction fourier_fast(const StepFunction& f);
StepFunction inverse_fourier_fast(const StepFunction& transform);

}  // namespace padic_frames
