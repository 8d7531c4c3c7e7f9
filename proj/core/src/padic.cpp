#include "padic_frames/padic.hpp"

#include <cmath>
#include <numbers>

namespace padic_frames {

namespace {
__extension__ using int128 = __int128;
}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::int64_t checked_pow(std::int64_t p, int e) {
  if (e < 0) throw Error("negative exponent " + std::to_string(e));
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (__builtin_mul_overflow(r, p, &r)) {
      throw Error(std::to_string(p) + "^" + std::to_string(e) + " overflows int64");
    }
  }
  return r;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

Complex unit_root(std::int64_t r, std::int64_t d) {
  r = mod_floor(r, d);
  if (r == 0) return {1.0, 0.0};
  // Quarter turns are exact.
  if ((4 * static_cast<int128>(r)) % d == 0) {
    switch (static_cast<int>((4 * static_cast<int128>(r)) / d)) {
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      case 3: return {0.0, -1.0};
      default: break;
    }
  }
  // Use the angle of smallest magnitude for accuracy.
  const double frac = 2 * r > d ? static_cast<double>(r - d) / static_cast<double>(d)
                                : static_cast<double>(r) / static_cast<double>(d);
  const double angle = 2.0 * std::numbers::pi * frac;
  return {std::cos(angle), std::sin(angle)};
}

// ---------------------------------------------------------------------------

int GroupContext::default_max_level(std::int64_t p) {
  int level = 0;
  std::int64_t n = 1;
  while (n * p <= 4096) {
    n *= p;
    ++level;
  }
  return level < 1 ? 1 : level;
}

GroupContext::GroupContext(std::int64_t p, int max_level) : p_(p) {
  if (!is_prime(p)) throw Error("p = " + std::to_string(p) + " is not prime");
  max_level_ = max_level <= 0 ? default_max_level(p) : max_level;
  // The largest index p^{max_level} must fit, with headroom for products of
  // two such indices in the DFT twiddle computation.
  checked_pow(p, 2 * max_level_);
}

// ---------------------------------------------------------------------------

PAdicRational::PAdicRational(std::int64_t p, std::int64_t numerator, int exponent)
    : p_(p), num_(numerator), exp_(exponent) {
  if (p < 2) throw Error("invalid prime " + std::to_string(p));
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  while (exp_ > 0 && num_ % p_ == 0) {
    num_ /= p_;
    --exp_;
  }
  // A negative exponent denotes p^{|e|} * num; fold it into the numerator.
  while (exp_ < 0) {
    if (__builtin_mul_overflow(num_, p_, &num_)) throw Error("PAdicRational overflow");
    ++exp_;
  }
}

std::int64_t PAdicRational::numerator_at(int e) const {
  if (e < exp_) throw Error("numerator_at: exponent below reduced exponent");
  std::int64_t r;
  if (__builtin_mul_overflow(num_, checked_pow(p_, e - exp_), &r)) {
    throw Error("PAdicRational overflow");
  }
  return r;
}

PAdicRational operator+(const PAdicRational& a, const PAdicRational& b) {
  if (a.p_ != b.p_) throw Error("prime mismatch in PAdicRational addition");
  const int e = std::max(a.exp_, b.exp_);
  std::int64_t sum;
  if (__builtin_add_overflow(a.numerator_at(e), b.numerator_at(e), &sum)) {
    throw Error("PAdicRational overflow");
  }
  return {a.p_, sum, e};
}

std::string PAdicRational::to_string() const {
  if (exp_ == 0) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(p_) + "^" + std::to_string(exp_);
}

int valuation(const PAdicRational& x) {
  if (x.is_zero()) throw Error("valuation of zero undefined");
  if (x.exponent() > 0) return -x.exponent();
  int v = 0;
  std::int64_t n = x.numerator();
  while (n % x.p() == 0) {
    n /= x.p();
    ++v;
  }
  return v;
}

PAdicRational fractional_part(const PAdicRational& x) {
  if (x.exponent() == 0) return PAdicRational::zero(x.p());
  const std::int64_t d = checked_pow(x.p(), x.exponent());
  return {x.p(), mod_floor(x.numerator(), d), x.exponent()};
}

Complex character(const PAdicRational& x, const PAdicRational& gamma) {
  if (x.p() != gamma.p()) throw Error("prime mismatch in character");
  const int e = x.exponent() + gamma.exponent();
  if (e == 0) return {1.0, 0.0};
  const std::int64_t d = checked_pow(x.p(), e);
  const auto prod = static_cast<int128>(x.numerator()) * gamma.numerator();
  auto r = static_cast<std::int64_t>(prod % d);
  return unit_root(r, d);
}

// ---------------------------------------------------------------------------

PrueferElement::PrueferElement(std::int64_t p, std::int64_t residue, int level)
    : p_(p), res_(residue), level_(level) {
  if (level < 0) throw Error("PrueferElement level must be nonnegative");
  if (p < 2) throw Error("invalid prime " + std::to_string(p));
  res_ = mod_floor(res_, checked_pow(p_, level_));
  if (res_ == 0) {
    level_ = 0;
    return;
  }
  while (level_ > 0 && res_ % p_ == 0) {
    res_ /= p_;
    --level_;
  }
}

PrueferElement PrueferElement::from_rational(const PAdicRational& x) {
  return {x.p(), x.numerator(), x.exponent()};
}

PrueferElement PrueferElement::operator-() const { return {p_, -res_, level_}; }

std::string PrueferElement::to_string() const {
  return "[" + representative().to_string() + "]";
}

PrueferElement pruefer_add(const PrueferElement& a, const PrueferElement& b) {
  if (a.p() != b.p()) throw Error("prime mismatch in pruefer_add");
  const int level = std::max(a.level(), b.level());
  const std::int64_t ra = a.residue() * checked_pow(a.p(), level - a.level());
  const std::int64_t rb = b.residue() * checked_pow(b.p(), level - b.level());
  return {a.p(), ra + rb, level};
}

// ---------------------------------------------------------------------------

Section& Section::set_offset(const PAdicRational& sigma, const PAdicRational& delta) {
  if (sigma.p() != ctx_.p() || delta.p() != ctx_.p()) {
    throw Error("prime mismatch in section offset");
  }
  if (!(fractional_part(sigma) == sigma)) {
    throw Error("section key " + sigma.to_string() + " is not a canonical representative");
  }
  if (sigma.exponent() > ctx_.max_level()) {
    throw Error("section key " + sigma.to_string() + " exceeds max_level");
  }
  if (!delta.is_integral()) {
    throw Error("section offset " + delta.to_string() + " does not lie in Z_p");
  }
  if (delta.is_zero()) {
    offsets_.erase(sigma);
  } else {
    offsets_.insert_or_assign(sigma, delta);
  }
  return *this;
}

PAdicRational Section::offset(const PAdicRational& sigma) const {
  auto it = offsets_.find(sigma);
  return it == offsets_.end() ? PAdicRational::zero(ctx_.p()) : it->second;
}

Decomposition section_decompose(const PAdicRational& gamma, const Section& section) {
  if (gamma.p() != section.context().p()) throw Error("prime mismatch in section_decompose");
  const PAdicRational canonical = fractional_part(gamma);
  const PAdicRational sigma = canonical + section.offset(canonical);
  return {sigma, gamma - sigma};
}

}  // namespace padic_frames
