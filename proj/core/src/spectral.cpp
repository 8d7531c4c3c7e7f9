#include "padic_frames/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "padic_frames/fourier.hpp"

namespace padic_frames {

SpectralSymbol::SpectralSymbol(StepFunction values) : values_(std::move(values)) {
  if (values_.support_level() != 0) {
    throw Error("a spectral symbol lives on Z_p (support level 0)");
  }
}

namespace {

// Accumulates term(ghat, fhat) over the section elements meeting the common
// Fourier support p^{-k} Z_p, for each eta class modulo p^m.
template <typename Term>
SpectralSymbol accumulate(const StepFunction& ghat, const StepFunction& fhat,
                          const Section& section, Term term) {
  const GroupContext& ctx = fhat.context();
  const int k = fhat.support_level();
  const int m = fhat.constancy_level();
  const std::int64_t pk = ctx.pow(k);
  const std::int64_t pm = ctx.pow(m);
  std::vector<Complex> phi(static_cast<std::size_t>(pm));
  for (std::int64_t j = 0; j < pk; ++j) {
    // sigma = j p^{-k} + delta(j p^{-k}); eta + sigma has index
    // ((e + delta) mod p^m) p^k + j.
    const PAdicRational delta = section.offset(PAdicRational(ctx.p(), j, k));
    const std::int64_t shift = mod_floor(delta.numerator(), pm);
    for (std::int64_t e = 0; e < pm; ++e) {
      const auto idx = static_cast<std::size_t>(((e + shift) % pm) * pk + j);
      phi[static_cast<std::size_t>(e)] += term(ghat[idx], fhat[idx]);
    }
  }
  return SpectralSymbol(StepFunction(ctx, 0, m, std::move(phi)));
}

}  // namespace

SpectralSymbol spectral_symbol(const StepFunction& f, const Section& section) {
  if (f.p() != section.context().p()) throw Error("prime mismatch in spectral_symbol");
  const StepFunction fhat = fourier_fast(f);
  return accumulate(fhat, fhat, section, [](Complex a, Complex) { return Complex{std::norm(a), 0.0}; });
}

SpectralSymbol cross_symbol(const StepFunction& g, const StepFunction& f, const Section& section) {
  if (f.p() != g.p() || f.p() != section.context().p()) {
    throw Error("prime mismatch in cross_symbol");
  }
  auto [gr, fr] = common_refinement(g, f);
  return accumulate(fourier_fast(gr), fourier_fast(fr), section,
                    [](Complex a, Complex b) { return a * std::conj(b); });
}

std::map<PrueferElement, Complex> fourier_coefficients(const SpectralSymbol& phi) {
  auto c = dft::radix(phi.values(), phi.p(), dft::Direction::backward);
  const double weight = 1.0 / static_cast<double>(c.size());
  std::map<PrueferElement, Complex> out;
  for (std::size_t r = 0; r < c.size(); ++r) {
    out.emplace(PrueferElement(phi.p(), static_cast<std::int64_t>(r), phi.level()), c[r] * weight);
  }
  return out;
}

FrameReport frame_report(const SpectralSymbol& phi, double tol_rel) {
  if (!(tol_rel >= 0.0)) throw Error("tolerance must be nonnegative");
  double max_value = 0.0;
  double max_abs = 0.0;
  for (auto z : phi.values()) {
    max_value = std::max(max_value, z.real());
    max_abs = std::max(max_abs, std::abs(z));
  }
  if (max_abs == 0.0) throw Error("zero function generates the zero system");
  for (auto z : phi.values()) {
    if (std::abs(z.imag()) > 1e-9 * max_abs || z.real() < -1e-9 * max_abs) {
      throw Error("frame_report requires a real nonnegative symbol");
    }
  }

  const double cutoff = tol_rel * max_value;
  FrameReport r;
  r.tol = tol_rel;
  r.upper = max_value;
  r.lower = max_value;
  std::size_t zeros = 0;
  for (auto z : phi.values()) {
    if (z.real() <= cutoff) {
      ++zeros;
    } else {
      r.lower = std::min(r.lower, z.real());
    }
  }
  r.zero_measure = static_cast<double>(zeros) / static_cast<double>(phi.size());
  r.is_frame = r.lower > cutoff;
  r.is_tight = r.is_frame && std::abs(r.upper - r.lower) <= tol_rel * r.upper;
  r.is_parseval = r.is_tight && std::abs(r.lower - 1.0) <= tol_rel && std::abs(r.upper - 1.0) <= tol_rel;
  return r;
}

}  // namespace padic_frames
