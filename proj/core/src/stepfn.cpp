#include "padic_frames/stepfn.hpp"

#include <algorithm>
#include <cmath>

namespace padic_frames {

namespace {

void check_resolution(const GroupContext& ctx, int m, int k) {
  if (m < 0 || k < 0) throw Error("resolution levels must be nonnegative");
  if (m + k > ctx.max_level()) {
    throw Error("resolution overflow: requires m+k = " + std::to_string(m + k) +
                " but max_level = " + std::to_string(ctx.max_level()));
  }
}

void check_same_prime(const StepFunction& f, const StepFunction& g) {
  if (f.p() != g.p()) {
    throw Error("prime mismatch: " + std::to_string(f.p()) + " vs " + std::to_string(g.p()));
  }
}

}  // namespace

StepFunction::StepFunction(GroupContext context, int support_level, int constancy_level,
                           std::vector<Complex> coeffs)
    : ctx_(context), m_(support_level), k_(constancy_level), coeffs_(std::move(coeffs)) {
  check_resolution(ctx_, m_, k_);
  const auto n = static_cast<std::size_t>(ctx_.pow(m_ + k_));
  if (coeffs_.size() != n) {
    throw Error("StepFunction at resolution (" + std::to_string(m_) + ", " + std::to_string(k_) +
                ") needs " + std::to_string(n) + " coefficients, got " +
                std::to_string(coeffs_.size()));
  }
}

StepFunction StepFunction::zero(GroupContext context, int support_level, int constancy_level) {
  check_resolution(context, support_level, constancy_level);
  return {context, support_level, constancy_level,
          std::vector<Complex>(static_cast<std::size_t>(context.pow(support_level + constancy_level)))};
}

Complex StepFunction::at(const PAdicRational& x) const {
  if (x.p() != p()) throw Error("prime mismatch in StepFunction::at");
  if (x.exponent() > m_) return {};
  const std::int64_t n = static_cast<std::int64_t>(coeffs_.size());
  return coeffs_[static_cast<std::size_t>(mod_floor(x.numerator_at(m_), n))];
}

StepFunction StepFunction::refine(int support_level, int constancy_level) const {
  if (support_level < m_ || constancy_level < k_) {
    throw Error("refine: coarsening requested from (" + std::to_string(m_) + ", " +
                std::to_string(k_) + ") to (" + std::to_string(support_level) + ", " +
                std::to_string(constancy_level) + ")");
  }
  if (support_level == m_ && constancy_level == k_) return *this;
  check_resolution(ctx_, support_level, constancy_level);

  const std::int64_t n_new = ctx_.pow(support_level + constancy_level);
  const std::int64_t n_old = static_cast<std::int64_t>(coeffs_.size());
  const std::int64_t stride = ctx_.pow(support_level - m_);
  std::vector<Complex> out(static_cast<std::size_t>(n_new));
  // x_{n'} = n' p^{-m'} lies in p^{-m} Z_p iff p^{m'-m} divides n'.
  for (std::int64_t n = 0; n < n_new; n += stride) {
    out[static_cast<std::size_t>(n)] = coeffs_[static_cast<std::size_t>((n / stride) % n_old)];
  }
  return {ctx_, support_level, constancy_level, std::move(out)};
}

StepFunction StepFunction::compact() const {
  std::vector<Complex> c = coeffs_;
  int m = m_;
  int k = k_;
  const auto p = static_cast<std::size_t>(ctx_.p());
  while (m > 0) {
    bool ok = true;
    for (std::size_t n = 0; n < c.size() && ok; ++n) {
      if (n % p != 0 && c[n] != Complex{}) ok = false;
    }
    if (!ok) break;
    std::vector<Complex> next(c.size() / p);
    for (std::size_t n = 0; n < next.size(); ++n) next[n] = c[n * p];
    c = std::move(next);
    --m;
  }
  while (k > 0) {
    const std::size_t block = c.size() / p;
    bool ok = true;
    for (std::size_t n = 0; n < block && ok; ++n) {
      for (std::size_t t = 1; t < p; ++t) {
        if (c[n + t * block] != c[n]) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) break;
    c.resize(block);
    --k;
  }
  return {ctx_, m, k, std::move(c)};
}

bool StepFunction::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Complex z) { return z == Complex{}; });
}

StepFunction& StepFunction::operator+=(const StepFunction& g) {
  auto [a, b] = common_refinement(*this, g);
  for (std::size_t n = 0; n < a.coeffs_.size(); ++n) a.coeffs_[n] += b.coeffs_[n];
  *this = std::move(a);
  return *this;
}

StepFunction& StepFunction::operator-=(const StepFunction& g) {
  auto [a, b] = common_refinement(*this, g);
  for (std::size_t n = 0; n < a.coeffs_.size(); ++n) a.coeffs_[n] -= b.coeffs_[n];
  *this = std::move(a);
  return *this;
}

StepFunction& StepFunction::operator*=(Complex s) {
  for (auto& z : coeffs_) z *= s;
  return *this;
}

StepFunction operator+(StepFunction f, const StepFunction& g) { return f += g; }
StepFunction operator-(StepFunction f, const StepFunction& g) { return f -= g; }
StepFunction operator*(Complex s, StepFunction f) { return f *= s; }
StepFunction operator*(StepFunction f, Complex s) { return f *= s; }

StepFunction multiply(const StepFunction& f, const StepFunction& g) {
  auto [a, b] = common_refinement(f, g);
  std::vector<Complex> out(a.size());
  for (std::size_t n = 0; n < out.size(); ++n) out[n] = a[n] * b[n];
  return {a.context(), a.support_level(), a.constancy_level(), std::move(out)};
}

std::pair<StepFunction, StepFunction> common_refinement(const StepFunction& f,
                                                        const StepFunction& g) {
  check_same_prime(f, g);
  const int m = std::max(f.support_level(), g.support_level());
  const int k = std::max(f.constancy_level(), g.constancy_level());
  // The wider cap of the two contexts governs the result.
  const GroupContext& ctx =
      f.context().max_level() >= g.context().max_level() ? f.context() : g.context();
  StepFunction a(ctx, f.support_level(), f.constancy_level(),
                 std::vector<Complex>(f.coeffs().begin(), f.coeffs().end()));
  StepFunction b(ctx, g.support_level(), g.constancy_level(),
                 std::vector<Complex>(g.coeffs().begin(), g.coeffs().end()));
  return {a.refine(m, k), b.refine(m, k)};
}

StepFunction indicator(const GroupContext& context, const PAdicRational& a, int level,
                       const std::optional<PAdicRational>& beta) {
  if (level < 0) throw Error("indicator: level must be nonnegative");
  if (a.p() != context.p() || (beta && beta->p() != context.p())) {
    throw Error("prime mismatch in indicator");
  }
  const int m = a.exponent();
  const int k = std::max(level, beta ? beta->exponent() : 0);
  check_resolution(context, m, k);

  StepFunction f = StepFunction::zero(context, m, k);
  std::vector<Complex> c(f.size());
  for (std::int64_t n = 0; n < static_cast<std::int64_t>(c.size()); ++n) {
    const PAdicRational x = f.point(n);
    const PAdicRational d = x - a;
    // x - a in p^level Z_p
    const bool inside = d.is_zero() || valuation(d) >= level;
    if (inside) c[static_cast<std::size_t>(n)] = beta ? character(x, *beta) : Complex{1.0, 0.0};
  }
  return {context, m, k, std::move(c)};
}

Complex inner(const StepFunction& f, const StepFunction& g) {
  auto [a, b] = common_refinement(f, g);
  Complex s{};
  for (std::size_t n = 0; n < a.size(); ++n) s += a[n] * std::conj(b[n]);
  return s / static_cast<double>(a.context().pow(a.constancy_level()));
}

double norm_squared(const StepFunction& f) {
  double s = 0.0;
  for (auto z : f.coeffs()) s += std::norm(z);
  return s / static_cast<double>(f.context().pow(f.constancy_level()));
}

double norm(const StepFunction& f) { return std::sqrt(norm_squared(f)); }

Complex integral(const StepFunction& f) {
  Complex s{};
  for (auto z : f.coeffs()) s += z;
  return s / static_cast<double>(f.context().pow(f.constancy_level()));
}

double sup_distance(const StepFunction& f, const StepFunction& g) {
  auto [a, b] = common_refinement(f, g);
  double d = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n) d = std::max(d, std::abs(a[n] - b[n]));
  return d;
}

std::map<PrueferElement, Complex> weil_periodize(const StepFunction& f) {
  const std::int64_t cosets = f.context().pow(f.support_level());
  const double weight = 1.0 / static_cast<double>(f.context().pow(f.constancy_level()));
  std::vector<Complex> mass(static_cast<std::size_t>(cosets));
  // x_n + Z_p = [r p^{-m}] iff n = r (mod p^m).
  for (std::size_t n = 0; n < f.size(); ++n) {
    mass[n % static_cast<std::size_t>(cosets)] += f[n];
  }
  std::map<PrueferElement, Complex> out;
  for (std::int64_t r = 0; r < cosets; ++r) {
    out.emplace(PrueferElement(f.p(), r, f.support_level()),
                mass[static_cast<std::size_t>(r)] * weight);
  }
  return out;
}

}  // namespace padic_frames
