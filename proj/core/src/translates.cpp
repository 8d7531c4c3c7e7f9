#include "padic_frames/translates.hpp"

#include <algorithm>

#include "padic_frames/fourier.hpp"

namespace padic_frames {

Complex w_symbol(const PrueferElement& b, const Section& section, const PAdicRational& gamma) {
  if (b.p() != gamma.p()) throw Error("prime mismatch in w_symbol");
  if (b.level() == 0) return {1.0, 0.0};
  const auto [sigma, eta] = section_decompose(gamma, section);
  return std::conj(character(b.representative(), eta));
}

StepFunction translate(const StepFunction& f, const PrueferElement& b, const Section& section) {
  if (f.p() != b.p() || f.p() != section.context().p()) {
    throw Error("prime mismatch in translate");
  }
  if (b.level() == 0) return f;

  // w is constant on cosets of p^{level(b)} Z_p: eta_gamma mod p^level(b) only
  // depends on gamma mod p^level(b), since the fractional part does not move.
  const int m = std::max(f.support_level(), b.level());
  const StepFunction fhat = fourier_fast(f).refine(f.constancy_level(), m);

  std::vector<Complex> prod(fhat.coeffs().begin(), fhat.coeffs().end());
  for (std::int64_t j = 0; j < static_cast<std::int64_t>(prod.size()); ++j) {
    prod[static_cast<std::size_t>(j)] *= w_symbol(b, section, fhat.point(j));
  }
  return inverse_fourier_fast(
      StepFunction(fhat.context(), fhat.support_level(), fhat.constancy_level(), std::move(prod)));
}

StepFunction pointwise_shift(const StepFunction& f, const PAdicRational& b) {
  if (f.p() != b.p()) throw Error("prime mismatch in pointwise_shift");
  if (b.is_zero()) return f;
  const int m = std::max(f.support_level(), b.exponent());
  const StepFunction g = f.refine(m, f.constancy_level());
  const auto n = static_cast<std::int64_t>(g.size());
  const std::int64_t shift = mod_floor(b.numerator_at(m), n);
  std::vector<Complex> out(g.size());
  // x_i - b = (i - shift) p^{-m}
  for (std::int64_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = g[static_cast<std::size_t>(mod_floor(i - shift, n))];
  }
  return {g.context(), m, g.constancy_level(), std::move(out)};
}

}  // namespace padic_frames
