#include "padic_frames/fourier.hpp"

namespace padic_frames {

namespace dft {

namespace {

// Twiddle table w[t] = e^{sign 2 pi i t / N}, each entry from the exact
// integer t; products are indexed modulo N, never accumulated.
std::vector<Complex> twiddles(std::int64_t n, Direction dir) {
  std::vector<Complex> w(static_cast<std::size_t>(n));
  const std::int64_t sign = static_cast<std::int64_t>(dir);
  for (std::int64_t t = 0; t < n; ++t) w[static_cast<std::size_t>(t)] = unit_root(sign * t, n);
  return w;
}

}  // namespace

std::vector<Complex> naive(std::span<const Complex> x, Direction dir) {
  const auto n = static_cast<std::int64_t>(x.size());
  std::vector<Complex> out(x.size());
  if (n == 0) return out;
  const auto w = twiddles(n, dir);
  for (std::int64_t j = 0; j < n; ++j) {
    Complex s{};
    for (std::int64_t i = 0; i < n; ++i) {
      s += x[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>((i * j) % n)];
    }
    out[static_cast<std::size_t>(j)] = s;
  }
  return out;
}

std::vector<Complex> radix(std::span<const Complex> x, std::int64_t p, Direction dir) {
  const auto n = static_cast<std::int64_t>(x.size());
  int levels = 0;
  for (std::int64_t q = 1; q < n; q *= p) ++levels;
  if (n == 0 || checked_pow(p, levels) != n) {
    throw Error("radix DFT: length " + std::to_string(n) + " is not a power of " +
                std::to_string(p));
  }
  if (n == 1) return {x.begin(), x.end()};

  // Base-p digit reversal.
  std::vector<Complex> a(x.size());
  for (std::int64_t i = 0; i < n; ++i) {
    std::int64_t r = 0;
    std::int64_t v = i;
    for (int d = 0; d < levels; ++d) {
      r = r * p + v % p;
      v /= p;
    }
    a[static_cast<std::size_t>(r)] = x[static_cast<std::size_t>(i)];
  }

  const auto w = twiddles(n, dir);
  const auto up = static_cast<std::size_t>(p);
  std::vector<Complex> v(up);
  std::vector<Complex> y(up);
  for (std::int64_t len = p; len <= n; len *= p) {
    const std::int64_t sub = len / p;
    const std::int64_t step = n / len;  // w[step] is the primitive len-th root
    const std::int64_t pstep = n / p;   // w[pstep] is the primitive p-th root
    for (std::int64_t base = 0; base < n; base += len) {
      for (std::int64_t q = 0; q < sub; ++q) {
        for (std::int64_t t = 0; t < p; ++t) {
          v[static_cast<std::size_t>(t)] =
              a[static_cast<std::size_t>(base + q + t * sub)] *
              w[static_cast<std::size_t>((t * q * step) % n)];
        }
        if (p == 2) {
          y[0] = v[0] + v[1];
          y[1] = v[0] - v[1];
        } else {
          for (std::int64_t u = 0; u < p; ++u) {
            Complex s{};
            for (std::int64_t t = 0; t < p; ++t) {
              s += v[static_cast<std::size_t>(t)] * w[static_cast<std::size_t>(((t * u) % p) * pstep)];
            }
            y[static_cast<std::size_t>(u)] = s;
          }
        }
        for (std::int64_t u = 0; u < p; ++u) {
          a[static_cast<std::size_t>(base + q + u * sub)] = y[static_cast<std::size_t>(u)];
        }
      }
    }
  }
  return a;
}

}  // namespace dft

namespace {

template <typename Kernel>
StepFunction transform(const StepFunction& f, dft::Direction dir, Kernel kernel) {
  auto out = kernel(f.coeffs(), dir);
  // Forward weight p^{-k}: each coset of p^k Z_p has Haar measure p^{-k}.
  // Backward weight p^{-k} of the input, which is the measure of the dual coset.
  const double weight = 1.0 / static_cast<double>(f.context().pow(f.constancy_level()));
  for (auto& z : out) z *= weight;
  return {f.context(), f.constancy_level(), f.support_level(), std::move(out)};
}

auto naive_kernel = [](std::span<const Complex> x, dft::Direction d) { return dft::naive(x, d); };

}  // namespace

StepFunction fourier(const StepFunction& f) {
  return transform(f, dft::Direction::forward, naive_kernel);
}

StepFunction inverse_fourier(const StepFunction& transform_in) {
  return transform(transform_in, dft::Direction::backward, naive_kernel);
}

StepFunction fourier_fast(const StepFunction& f) {
  return transform(f, dft::Direction::forward, [&](std::span<const Complex> x, dft::Direction d) {
    return dft::radix(x, f.p(), d);
  });
}

StepFunction inverse_fourier_fast(const StepFunction& transform_in) {
  return transform(transform_in, dft::Direction::backward,
                   [&](std::span<const Complex> x, dft::Direction d) {
                     return dft::radix(x, transform_in.p(), d);
                   });
}

}  // namespace padic_frames
