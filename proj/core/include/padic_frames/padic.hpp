#pragma once

// Exact arithmetic on the p-adic points used throughout the library.
//
// Every point of Q_p that appears in a step-function computation lives in
// Z[1/p], so points are stored as num / p^exp with exact 64-bit integers.
// Floating point enters only in unit_root(), after the phase has been
// reduced modulo 1 as an exact integer fraction.

#include <compare>
#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace padic_frames {

using Complex = std::complex<double>;

/// Raised on any contract violation, including resolution overflow.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool is_prime(std::int64_t n);

/// p^e, throwing Error if the result does not fit in int64.
std::int64_t checked_pow(std::int64_t p, int e);

/// Mathematical modulo: result in [0, m).
std::int64_t mod_floor(std::int64_t a, std::int64_t m);

/// e^{2 pi i r / d} with r reduced into [0, d) first.
Complex unit_root(std::int64_t r, std::int64_t d);

/// The prime p together with the resolution cap.  A step function at
/// resolution (m, k) has p^{m+k} coefficients and needs m + k <= max_level.
class GroupContext {
 public:
  /// max_level <= 0 selects default_max_level(p).
  explicit GroupContext(std::int64_t p, int max_level = 0);

  std::int64_t p() const { return p_; }
  int max_level() const { return max_level_; }
  std::int64_t pow(int e) const { return checked_pow(p_, e); }

  /// Largest L >= 1 with p^L <= 4096 (12 for p = 2).
  static int default_max_level(std::int64_t p);

  bool operator==(const GroupContext&) const = default;

 private:
  std::int64_t p_;
  int max_level_;
};

/// x = numerator / p^exponent, reduced so that p does not divide the
/// numerator unless exponent == 0.
class PAdicRational {
 public:
  PAdicRational(std::int64_t p, std::int64_t numerator, int exponent = 0);

  static PAdicRational zero(std::int64_t p) { return {p, 0, 0}; }

  std::int64_t p() const { return p_; }
  std::int64_t numerator() const { return num_; }
  int exponent() const { return exp_; }

  bool is_zero() const { return num_ == 0; }
  /// True iff the point lies in Z_p.
  bool is_integral() const { return exp_ == 0; }

  /// Numerator after scaling to denominator p^e (requires e >= exponent()).
  std::int64_t numerator_at(int e) const;

  PAdicRational operator-() const { return {p_, -num_, exp_}; }
  friend PAdicRational operator+(const PAdicRational& a, const PAdicRational& b);
  friend PAdicRational operator-(const PAdicRational& a, const PAdicRational& b) {
    return a + (-b);
  }

  bool operator==(const PAdicRational&) const = default;
  /// Arbitrary total order, used only for map keys.
  std::strong_ordering operator<=>(const PAdicRational& o) const {
    if (auto c = p_ <=> o.p_; c != 0) return c;
    if (auto c = exp_ <=> o.exp_; c != 0) return c;
    return num_ <=> o.num_;
  }

  /// "num/p^e", e.g. "3/2^2"; integers print as "num".
  std::string to_string() const;

 private:
  std::int64_t p_;
  std::int64_t num_;
  int exp_;
};

/// ord_p(x); throws on zero.
int valuation(const PAdicRational& x);

/// {x}_p in [0, 1) with x - {x}_p in Z_p.
PAdicRational fractional_part(const PAdicRational& x);

/// The standard character pairing (x, gamma) = e^{2 pi i {x gamma}_p}.
Complex character(const PAdicRational& x, const PAdicRational& gamma);

/// A coset [b] = residue * p^{-level} + Z_p of Q_p / Z_p.
class PrueferElement {
 public:
  PrueferElement(std::int64_t p, std::int64_t residue, int level);

  static PrueferElement zero(std::int64_t p) { return {p, 0, 0}; }
  static PrueferElement from_rational(const PAdicRational& x);

  std::int64_t p() const { return p_; }
  std::int64_t residue() const { return res_; }
  int level() const { return level_; }

  /// The canonical representative residue / p^level in [0, 1).
  PAdicRational representative() const { return {p_, res_, level_}; }

  PrueferElement operator-() const;

  bool operator==(const PrueferElement&) const = default;
  std::strong_ordering operator<=>(const PrueferElement& o) const {
    if (auto c = p_ <=> o.p_; c != 0) return c;
    if (auto c = level_ <=> o.level_; c != 0) return c;
    return res_ <=> o.res_;
  }

  std::string to_string() const;

 private:
  std::int64_t p_;
  std::int64_t res_;
  int level_;
};

PrueferElement pruefer_add(const PrueferElement& a, const PrueferElement& b);
inline PrueferElement operator+(const PrueferElement& a, const PrueferElement& b) {
  return pruefer_add(a, b);
}

/// A set C of coset representatives of Q_p / Z_p on the dual side.
///
/// The canonical section is the set of fractional parts Z[1/p] cap [0, 1).
/// A non-canonical section replaces selected canonical representatives
/// sigma by sigma + delta(sigma) with delta(sigma) in Z_p.
class Section {
 public:
  explicit Section(GroupContext context) : ctx_(context) {}

  static Section canonical(GroupContext context) { return Section(context); }

  const GroupContext& context() const { return ctx_; }
  bool is_canonical() const { return offsets_.empty(); }
  const std::map<PAdicRational, PAdicRational>& offsets() const { return offsets_; }

  /// Registers sigma -> sigma + delta.  sigma must be a canonical
  /// representative (in [0, 1), level <= max_level) and delta must lie in Z_p.
  Section& set_offset(const PAdicRational& sigma, const PAdicRational& delta);

  /// delta(sigma) for a canonical representative; zero when unset.
  PAdicRational offset(const PAdicRational& sigma) const;

 private:
  GroupContext ctx_;
  std::map<PAdicRational, PAdicRational> offsets_;
};

struct Decomposition {
  PAdicRational sigma;
  PAdicRational eta;
};

/// gamma = sigma + eta with sigma in C and eta in Z_p.
Decomposition section_decompose(const PAdicRational& gamma, const Section& section);

}  // namespace padic_frames
