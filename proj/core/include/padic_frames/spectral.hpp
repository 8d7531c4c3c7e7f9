#pragma once

// Spectral symbol of a system of translates and the resulting frame test.
//
//   Phi_{C,f}(g)(eta) = sum_{sigma in C} ghat(eta + sigma) conj(fhat(eta + sigma)),
//   eta in Z_p (the annihilator of Z_p under the standard pairing).
//
// {tau_{[x],C} f} is a frame for its closed span with bounds A, B exactly when
// A <= Phi_C(f) <= B off the zero set of Phi_C(f).  At finite resolution Phi
// is a step function on Z_p, so the essential bounds are a min and a max.

#include <map>
#include <vector>

#include "padic_frames/stepfn.hpp"

namespace padic_frames {

/// A step function on Z_p constant on cosets of p^level Z_p; value(e) is the
/// value on the class e + p^level Z_p, e in [0, p^level).
class SpectralSymbol {
 public:
  explicit SpectralSymbol(StepFunction values);

  int level() const { return values_.constancy_level(); }
  std::int64_t p() const { return values_.p(); }
  std::size_t size() const { return values_.size(); }
  Complex value(std::size_t eta_class) const { return values_[eta_class]; }
  std::span<const Complex> values() const { return values_.coeffs(); }
  const StepFunction& as_step_function() const { return values_; }

  /// Integral over Z_p (Haar measure of total mass 1).
  Complex integral() const { return padic_frames::integral(values_); }

 private:
  StepFunction values_;
};

/// Phi_C(f), real and nonnegative.
SpectralSymbol spectral_symbol(const StepFunction& f, const Section& section);

/// Phi_{C,f}(g), complex valued.
SpectralSymbol cross_symbol(const StepFunction& g, const StepFunction& f, const Section& section);

/// c_{[x]} = integral over Z_p of Phi(eta) (x, eta), for the p^level cosets
/// [x] of level <= level(Phi); all other coefficients vanish.
std::map<PrueferElement, Complex> fourier_coefficients(const SpectralSymbol& phi);

struct FrameReport {
  double lower = 0.0;         // A
  double upper = 0.0;         // B
  double zero_measure = 0.0;  // measure of the zero set N, mu(Z_p) = 1
  bool is_frame = false;
  bool is_tight = false;
  bool is_parseval = false;
  double tol = 0.0;
};

inline constexpr double kDefaultTolRel = 1e-9;

/// Classes with value <= tol_rel * max(Phi) form the zero set.  Tight and
/// Parseval are decided with the same relative tolerance.  Throws when
/// Phi vanishes identically.
FrameReport frame_report(const SpectralSymbol& phi, double tol_rel = kDefaultTolRel);

}  // namespace padic_frames
