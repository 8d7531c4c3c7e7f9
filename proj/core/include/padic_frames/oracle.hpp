#pragma once

// Brute-force verification layer.
//
// Recomputes quantities that the spectral module reads off Phi, this time from
// explicit translates and their Gram matrices. Trigonometric polynomials are
// Theta_F(eta) = sum_{[x] in F} c_[x] conj((x, eta)).

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "padic_frames/spectral.hpp"
#include "padic_frames/stepfn.hpp"

namespace padic_frames {

class TrigPolynomial {
 public:
  explicit TrigPolynomial(GroupContext context) : ctx_(context) {}
  TrigPolynomial(GroupContext context, std::map<PrueferElement, Complex> coeffs);

  const GroupContext& context() const { return ctx_; }
  const std::map<PrueferElement, Complex>& coeffs() const { return coeffs_; }
  TrigPolynomial& set(const PrueferElement& x, Complex c);

  /// Largest level among the frequencies in F (0 when empty).
  int level() const;

  Complex evaluate(const PAdicRational& eta) const;

  /// Values on the classes e + p^level Z_p, e in [0, p^level).
  std::vector<Complex> values(int level) const;

  /// The polynomial equal to 1 on e + p^level Z_p and 0 elsewhere on Z_p.
  static TrigPolynomial class_indicator(GroupContext context, int level, std::int64_t eta_class);

 private:
  GroupContext ctx_;
  std::map<PrueferElement, Complex> coeffs_;
};

/// g_F = sum_{[x] in F} c_[x] tau_{[x],C} f.
StepFunction synthesize(const StepFunction& f, const TrigPolynomial& theta, const Section& section);

/// sum over [x] in Q_p/Z_p of |<g, tau_{[x],C} f>|^2 via the Fourier
/// coefficients of the cross symbol.
double frame_sum(const StepFunction& g, const StepFunction& f, const Section& section);

/// Same sum by explicit enumeration of translates and inner products.
double frame_sum_direct(const StepFunction& g, const StepFunction& f, const Section& section);

/// Dense row-major complex square matrix.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
  static ComplexMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  Complex operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

  /// max |a_ij - conj(a_ji)|.
  double hermitian_defect() const;
  double max_abs() const;

 private:
  std::size_t dim_;
  std::vector<Complex> data_;
};

/// Gram matrix of the translates tau_{[x_i],C} f, [x_i] = i p^{-M},
/// entry (i, j) = <tau_{x_j} f, tau_{x_i} f>.
struct GramMatrix {
  int level = 0;
  ComplexMatrix entries{0};

  /// max deviation from a circulant over Z / p^M.
  double circulant_defect() const;
};

inline constexpr std::int64_t kDefaultMatrixCap = 243;

/// Requires M >= support level of f and p^M <= cap.
GramMatrix gram_matrix(const StepFunction& f, const Section& section, int level,
                       std::int64_t cap = kDefaultMatrixCap);

struct HermitianEigen {
  std::vector<double> values;   // ascending
  ComplexMatrix vectors{0};     // column j belongs to values[j]
  int sweeps = 0;
};

/// Cyclic Jacobi on a Hermitian matrix; throws if the input is not
/// Hermitian within 1e-10 (relative to its largest entry).
HermitianEigen hermitian_eigensystem(const ComplexMatrix& a);
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a);
std::vector<double> hermitian_eigenvalues(const GramMatrix& gram);

struct CheckReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double rel_error = 0.0;
  bool pass = false;
  std::uint64_t seed = 0;
};

inline constexpr double kIdentityTol = 1e-10;

/// integral over Z_p of |Theta|^2 Phi^power, on the common level of Theta and Phi.
double weighted_integral(const TrigPolynomial& theta, const SpectralSymbol& phi, int power);

/// ||g_F||^2 against integral |Theta_F|^2 Phi_C(f).
CheckReport check_norm_identity(const StepFunction& f, const TrigPolynomial& theta,
                           const Section& section, double tol = kIdentityTol);

/// frame_sum(g_F, f) against integral |Theta_F|^2 Phi_C(f)^2.
CheckReport check_frame_sum_identity(const StepFunction& f, const TrigPolynomial& theta,
                           const Section& section, double tol = kIdentityTol);

struct InequalityReport {
  FrameReport frame;
  int trials = 0;
  int violations = 0;
  /// Smallest and largest ratio integral |T|^2 Phi^2 / integral |T|^2 Phi over
  /// the class-concentrated polynomials.
  double attained_lower = 0.0;
  double attained_upper = 0.0;
  bool lower_attained = false;
  bool upper_attained = false;
  std::uint64_t seed = 0;
  bool pass = false;
};

/// A int |T|^2 Phi <= int |T|^2 Phi^2 <= B int |T|^2 Phi for random
/// trigonometric polynomials T, and the equivalent A ||g||^2 <= frame_sum(g, f)
/// <= B ||g||^2 for g = g_F.
InequalityReport check_frame_inequality(const StepFunction& f, const Section& section, int trials,
                                        std::uint64_t seed, double tol = 1e-9);

// Seeded generators for property tests and the verify command.

using Rng = std::mt19937_64;

StepFunction random_step_function(const GroupContext& context, int support_level,
                                  int constancy_level, Rng& rng);

/// Up to max_terms frequencies drawn from levels <= max_level.
TrigPolynomial random_trig_polynomial(const GroupContext& context, int max_level, int max_terms,
                                      Rng& rng);

/// Random Z_p offsets on canonical representatives of level <= max_level.
Section random_section(const GroupContext& context, int max_level, int count, Rng& rng);

PrueferElement random_pruefer(std::int64_t p, int max_level, Rng& rng);

}  // namespace padic_frames
