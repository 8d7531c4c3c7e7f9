#include "padic_frames/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "padic_frames/translates.hpp"

namespace padic_frames {

// ---------------------------------------------------------------------------
// Trigonometric polynomials on Z_p

TrigPolynomial::TrigPolynomial(GroupContext context, std::map<PrueferElement, Complex> coeffs)
    : ctx_(context) {
  for (const auto& [x, c] : coeffs) set(x, c);
}

TrigPolynomial& TrigPolynomial::set(const PrueferElement& x, Complex c) {
  if (x.p() != ctx_.p()) throw Error("prime mismatch in TrigPolynomial");
  coeffs_.insert_or_assign(x, c);
  return *this;
}

int TrigPolynomial::level() const {
  int level = 0;
  for (const auto& [x, c] : coeffs_) level = std::max(level, x.level());
  return level;
}

Complex TrigPolynomial::evaluate(const PAdicRational& eta) const {
  Complex s{};
  for (const auto& [x, c] : coeffs_) s += c * std::conj(character(x.representative(), eta));
  return s;
}

std::vector<Complex> TrigPolynomial::values(int level) const {
  if (level < this->level()) throw Error("TrigPolynomial::values: level below polynomial level");
  const std::int64_t n = ctx_.pow(level);
  std::vector<Complex> out(static_cast<std::size_t>(n));
  for (std::int64_t e = 0; e < n; ++e) {
    out[static_cast<std::size_t>(e)] = evaluate(PAdicRational(ctx_.p(), e, 0));
  }
  return out;
}

TrigPolynomial TrigPolynomial::class_indicator(GroupContext context, int level,
                                               std::int64_t eta_class) {
  TrigPolynomial t(context);
  const std::int64_t n = context.pow(level);
  for (std::int64_t r = 0; r < n; ++r) {
    t.set(PrueferElement(context.p(), r, level),
          unit_root(r * eta_class, n) / static_cast<double>(n));
  }
  return t;
}

// ---------------------------------------------------------------------------
// Synthesis and frame sums

StepFunction synthesize(const StepFunction& f, const TrigPolynomial& theta,
                        const Section& section) {
  StepFunction g = StepFunction::zero(f.context(), f.support_level(), f.constancy_level());
  for (const auto& [x, c] : theta.coeffs()) g += c * translate(f, x, section);
  return g;
}

double frame_sum(const StepFunction& g, const StepFunction& f, const Section& section) {
  double s = 0.0;
  for (const auto& [x, c] : fourier_coefficients(cross_symbol(g, f, section))) s += std::norm(c);
  return s;
}

double frame_sum_direct(const StepFunction& g, const StepFunction& f, const Section& section) {
  // <g, tau_x f> vanishes for every [x] of level above both support levels.
  const int level = std::max(g.support_level(), f.support_level());
  const std::int64_t n = f.context().pow(level);
  double s = 0.0;
  for (std::int64_t r = 0; r < n; ++r) {
    s += std::norm(inner(g, translate(f, PrueferElement(f.p(), r, level), section)));
  }
  return s;
}

// ---------------------------------------------------------------------------
// Matrices

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

double ComplexMatrix::hermitian_defect() const {
  double d = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i; j < dim_; ++j) {
      d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    }
  }
  return d;
}

double ComplexMatrix::max_abs() const {
  double d = 0.0;
  for (auto z : data_) d = std::max(d, std::abs(z));
  return d;
}

double GramMatrix::circulant_defect() const {
  const std::size_t n = entries.dim();
  double d = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      d = std::max(d, std::abs(entries(i, j) - entries((i + n - j) % n, 0)));
    }
  }
  return d;
}

GramMatrix gram_matrix(const StepFunction& f, const Section& section, int level,
                       std::int64_t cap) {
  if (level < f.support_level()) {
    throw Error("gram_matrix: level " + std::to_string(level) +
                " is below the support level " + std::to_string(f.support_level()));
  }
  const std::int64_t n = f.context().pow(level);
  if (n > cap) {
    throw Error("gram_matrix: dimension " + std::to_string(n) + " exceeds matrix cap " +
                std::to_string(cap));
  }
  std::vector<StepFunction> translates;
  translates.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    translates.push_back(translate(f, PrueferElement(f.p(), i, level), section));
  }
  GramMatrix g{level, ComplexMatrix(static_cast<std::size_t>(n))};
  for (std::size_t i = 0; i < translates.size(); ++i) {
    for (std::size_t j = i; j < translates.size(); ++j) {
      const Complex z = inner(translates[j], translates[i]);
      g.entries(i, j) = z;
      g.entries(j, i) = std::conj(z);
    }
  }
  return g;
}

HermitianEigen hermitian_eigensystem(const ComplexMatrix& input) {
  const std::size_t n = input.dim();
  const double scale = std::max(1.0, input.max_abs());
  if (input.hermitian_defect() > 1e-10 * scale) {
    throw Error("hermitian_eigenvalues: matrix is not Hermitian");
  }

  ComplexMatrix a = input;
  for (std::size_t i = 0; i < n; ++i) a(i, i) = a(i, i).real();
  ComplexMatrix v = ComplexMatrix::identity(n);

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) s += std::norm(a(i, j));
      }
    }
    return std::sqrt(s);
  };

  HermitianEigen out;
  constexpr int kMaxSweeps = 100;
  const double eps = std::numeric_limits<double>::epsilon();
  for (; out.sweeps < kMaxSweeps; ++out.sweeps) {
    if (off_norm() <= eps * scale) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double r = std::abs(apq);
        if (r <= eps * eps * scale) continue;
        const Complex phase = apq / r;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        // Real Jacobi rotation on the phase-rotated 2x2 block.
        const double theta = (aqq - app) / (2.0 * r);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex upp = c;
        const Complex upq = s;
        const Complex uqp = -s * std::conj(phase);
        const Complex uqq = c * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {  // A <- A U
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * upp + akq * uqp;
          a(k, q) = akp * upq + akq * uqq;
        }
        for (std::size_t k = 0; k < n; ++k) {  // A <- U^H A
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
          a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {  // V <- V U
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * upp + vkq * uqp;
          v(k, q) = vkp * upq + vkq * uqq;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });
  out.values.resize(n);
  out.vectors = ComplexMatrix(n);
  for (std::size_t col = 0; col < n; ++col) {
    out.values[col] = a(order[col], order[col]).real();
    for (std::size_t k = 0; k < n; ++k) out.vectors(k, col) = v(k, order[col]);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a) {
  return hermitian_eigensystem(a).values;
}

std::vector<double> hermitian_eigenvalues(const GramMatrix& gram) {
  return hermitian_eigenvalues(gram.entries);
}

// ---------------------------------------------------------------------------
// Identity checks

double weighted_integral(const TrigPolynomial& theta, const SpectralSymbol& phi, int power) {
  const int level = std::max(theta.level(), phi.level());
  const auto values = theta.values(level);
  const auto classes = static_cast<std::size_t>(phi.size());
  double s = 0.0;
  for (std::size_t e = 0; e < values.size(); ++e) {
    s += std::norm(values[e]) * std::pow(phi.value(e % classes).real(), power);
  }
  return s / static_cast<double>(values.size());
}

namespace {

CheckReport compare(double lhs, double rhs, double tol) {
  CheckReport r;
  r.lhs = lhs;
  r.rhs = rhs;
  const double denom = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
  r.rel_error = std::abs(lhs - rhs) / denom;
  if (lhs == rhs) r.rel_error = 0.0;
  r.pass = r.rel_error <= tol;
  return r;
}

}  // namespace

CheckReport check_norm_identity(const StepFunction& f, const TrigPolynomial& theta,
                           const Section& section, double tol) {
  const double lhs = norm_squared(synthesize(f, theta, section));
  const double rhs = weighted_integral(theta, spectral_symbol(f, section), 1);
  return compare(lhs, rhs, tol);
}

CheckReport check_frame_sum_identity(const StepFunction& f, const TrigPolynomial& theta,
                           const Section& section, double tol) {
  const double lhs = frame_sum(synthesize(f, theta, section), f, section);
  const double rhs = weighted_integral(theta, spectral_symbol(f, section), 2);
  return compare(lhs, rhs, tol);
}

InequalityReport check_frame_inequality(const StepFunction& f, const Section& section, int trials,
                                        std::uint64_t seed, double tol) {
  const SpectralSymbol phi = spectral_symbol(f, section);
  InequalityReport out;
  out.frame = frame_report(phi);
  out.trials = trials;
  out.seed = seed;
  const double a = out.frame.lower;
  const double b = out.frame.upper;
  const GroupContext& ctx = f.context();

  Rng rng(seed);
  const int max_level = std::min(phi.level() + 1, ctx.max_level() - f.constancy_level());
  for (int t = 0; t < trials; ++t) {
    const TrigPolynomial theta = random_trig_polynomial(ctx, std::max(0, max_level), 9, rng);
    const double i1 = weighted_integral(theta, phi, 1);
    const double i2 = weighted_integral(theta, phi, 2);
    const double slack = tol * b * i1 + 1e-300;
    bool ok = a * i1 <= i2 + slack && i2 <= b * i1 + slack;

    const StepFunction g = synthesize(f, theta, section);
    const double g2 = norm_squared(g);
    const double fs = frame_sum(g, f, section);
    const double slack_g = tol * b * g2 + 1e-300;
    ok = ok && a * g2 <= fs + slack_g && fs <= b * g2 + slack_g;
    if (!ok) ++out.violations;
  }

  // Class-concentrated polynomials attain Phi on each class; evaluate the
  // ratio through the translate system rather than through Phi.
  const int m = phi.level();
  const std::int64_t classes = ctx.pow(m);
  std::vector<StepFunction> translates;
  for (std::int64_t r = 0; r < classes; ++r) {
    translates.push_back(translate(f, PrueferElement(ctx.p(), r, m), section));
  }
  const double cutoff = out.frame.tol * b;
  bool first = true;
  for (std::int64_t e = 0; e < classes; ++e) {
    if (phi.value(static_cast<std::size_t>(e)).real() <= cutoff) continue;
    StepFunction g = StepFunction::zero(ctx, f.support_level(), f.constancy_level());
    for (std::int64_t r = 0; r < classes; ++r) {
      g += (unit_root(r * e, classes) / static_cast<double>(classes)) *
           translates[static_cast<std::size_t>(r)];
    }
    const double ratio = frame_sum(g, f, section) / norm_squared(g);
    if (first) {
      out.attained_lower = out.attained_upper = ratio;
      first = false;
    }
    out.attained_lower = std::min(out.attained_lower, ratio);
    out.attained_upper = std::max(out.attained_upper, ratio);
  }
  const double scale = std::max(1.0, b);
  out.lower_attained = std::abs(out.attained_lower - a) <= tol * scale;
  out.upper_attained = std::abs(out.attained_upper - b) <= tol * scale;
  out.pass = out.violations == 0 && out.lower_attained && out.upper_attained;
  return out;
}

// ---------------------------------------------------------------------------
// Generators

namespace {

Complex random_complex(Rng& rng) {
  std::normal_distribution<double> d(0.0, 1.0);
  const double re = d(rng);
  const double im = d(rng);
  return {re, im};
}

}  // namespace

StepFunction random_step_function(const GroupContext& context, int support_level,
                                  int constancy_level, Rng& rng) {
  StepFunction f = StepFunction::zero(context, support_level, constancy_level);
  std::vector<Complex> c(f.size());
  for (auto& z : c) z = random_complex(rng);
  return {context, support_level, constancy_level, std::move(c)};
}

PrueferElement random_pruefer(std::int64_t p, int max_level, Rng& rng) {
  std::uniform_int_distribution<int> lv(0, max_level);
  const int level = lv(rng);
  std::uniform_int_distribution<std::int64_t> res(0, checked_pow(p, level) - 1);
  return {p, res(rng), level};
}

TrigPolynomial random_trig_polynomial(const GroupContext& context, int max_level, int max_terms,
                                      Rng& rng) {
  std::uniform_int_distribution<int> count(1, std::max(1, max_terms));
  TrigPolynomial t(context);
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    const PrueferElement x = random_pruefer(context.p(), max_level, rng);
    t.set(x, random_complex(rng));
  }
  return t;
}

Section random_section(const GroupContext& context, int max_level, int count, Rng& rng) {
  Section s(context);
  std::uniform_int_distribution<int> lv(1, std::max(1, max_level));
  std::uniform_int_distribution<std::int64_t> delta(-20, 20);
  for (int i = 0; i < count; ++i) {
    const int level = lv(rng);
    std::uniform_int_distribution<std::int64_t> res(0, context.pow(level) - 1);
    const std::int64_t r = res(rng);
    const std::int64_t d = delta(rng);
    s.set_offset(PAdicRational(context.p(), r, level), PAdicRational(context.p(), d, 0));
  }
  // The trivial coset representative gets an offset too, when drawn.
  if (std::uniform_int_distribution<int>(0, 1)(rng) == 1) {
    const std::int64_t d = delta(rng);
    s.set_offset(PAdicRational::zero(context.p()), PAdicRational(context.p(), d, 0));
  }
  return s;
}

}  // namespace padic_frames
