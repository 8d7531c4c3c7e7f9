#pragma once

// Complex step functions on Q_p at finite resolution.
//
// A function at resolution (m, k) is supported on p^{-m} Z_p and constant on
// cosets of p^k Z_p.  Coefficient n holds the value on x_n + p^k Z_p with
// x_n = n p^{-m}, n = 0 .. p^{m+k} - 1.  Haar measure is normalized so that
// mu(Z_p) = 1, hence each coset carries weight p^{-k}.

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "padic_frames/padic.hpp"

namespace padic_frames {

class StepFunction {
 public:
  StepFunction(GroupContext context, int support_level, int constancy_level,
               std::vector<Complex> coeffs);

  static StepFunction zero(GroupContext context, int support_level = 0,
                           int constancy_level = 0);

  const GroupContext& context() const { return ctx_; }
  std::int64_t p() const { return ctx_.p(); }
  int support_level() const { return m_; }
  int constancy_level() const { return k_; }
  std::size_t size() const { return coeffs_.size(); }

  std::span<const Complex> coeffs() const { return coeffs_; }
  Complex operator[](std::size_t n) const { return coeffs_[n]; }

  /// x_n = n p^{-m}.
  PAdicRational point(std::int64_t n) const { return {p(), n, m_}; }

  /// Pointwise value f(x).
  Complex at(const PAdicRational& x) const;

  /// Same function at the finer resolution (m2, k2).
  StepFunction refine(int support_level, int constancy_level) const;

  /// Coarsest resolution representing the same function exactly.
  StepFunction compact() const;

  bool is_zero() const;

  StepFunction& operator+=(const StepFunction& g);
  StepFunction& operator-=(const StepFunction& g);
  StepFunction& operator*=(Complex s);

 private:
  GroupContext ctx_;
  int m_;
  int k_;
  std::vector<Complex> coeffs_;
};

StepFunction operator+(StepFunction f, const StepFunction& g);
StepFunction operator-(StepFunction f, const StepFunction& g);
StepFunction operator*(Complex s, StepFunction f);
StepFunction operator*(StepFunction f, Complex s);

/// Pointwise product f * g.
StepFunction multiply(const StepFunction& f, const StepFunction& g);

/// Both functions refined to (max m, max k).
std::pair<StepFunction, StepFunction> common_refinement(const StepFunction& f,
                                                        const StepFunction& g);

/// x -> (x, beta) 1_{a + p^level Z_p}(x) at the minimal exact resolution.
StepFunction indicator(const GroupContext& context, const PAdicRational& a, int level,
                       const std::optional<PAdicRational>& beta = std::nullopt);

/// <f, g> = integral of f conj(g) d mu.
Complex inner(const StepFunction& f, const StepFunction& g);
double norm_squared(const StepFunction& f);
double norm(const StepFunction& f);

/// Integral of f over Q_p.
Complex integral(const StepFunction& f);

/// sup |f - g| at the common refinement.
double sup_distance(const StepFunction& f, const StepFunction& g);

/// P([x]) = integral over Z_p of f(x + y), for every coset [x] meeting the
/// support level of f.  Summing P against counting measure on Q_p / Z_p
/// recovers the integral of f.
std::map<PrueferElement, Complex> weil_periodize(const StepFunction& f);

}  // namespace padic_frames
