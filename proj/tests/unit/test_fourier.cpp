#include <array>
#include <cmath>

#include "doctest.h"
#include "padic_frames/fourier.hpp"
#include "padic_frames/oracle.hpp"

using namespace padic_frames;

namespace {

// The Fourier integral evaluated coset by coset from the character pairing,
// without any DFT index bookkeeping: the integral of conj((x, gamma)) over
// x_n + p^k Z_p is p^{-k} conj((x_n, gamma)) when gamma is in p^{-k} Z_p.
Complex fourier_at(const StepFunction& f, const PAdicRational& gamma) {
  if (gamma.exponent() > f.constancy_level()) return {};
  Complex s{};
  for (std::int64_t n = 0; n < static_cast<std::int64_t>(f.size()); ++n) {
    s += f[static_cast<std::size_t>(n)] * std::conj(character(f.point(n), gamma));
  }
  return s / static_cast<double>(f.context().pow(f.constancy_level()));
}

double sup_diff(std::span<const Complex> a, std::span<const Complex> b) {
  REQUIRE(a.size() == b.size());
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace

TEST_CASE("DFT index identification matches the character pairing") {
  for (std::int64_t p : {2, 3, 5}) {
    const GroupContext ctx(p);
    for (int m = 0; m <= 2; ++m) {
      for (int k = 0; k <= 2; ++k) {
        const std::int64_t n = ctx.pow(m + k);
        for (std::int64_t i = 0; i < n; ++i) {
          for (std::int64_t j = 0; j < n; ++j) {
            const Complex pairing = character(PAdicRational(p, i, m), PAdicRational(p, j, k));
            CHECK(std::abs(pairing - unit_root(i * j, n)) <= 1e-14);
          }
        }
      }
    }
  }
}

TEST_CASE("fourier agrees with the coset-by-coset integral") {
  Rng rng(4);
  for (std::int64_t p : {2, 3, 5}) {
    const GroupContext ctx(p);
    for (int t = 0; t < 6; ++t) {
      std::uniform_int_distribution<int> lv(0, 2);
      const auto f = random_step_function(ctx, lv(rng), lv(rng), rng);
      const auto fhat = fourier(f);
      CHECK(fhat.support_level() == f.constancy_level());
      CHECK(fhat.constancy_level() == f.support_level());
      for (std::int64_t j = 0; j < static_cast<std::int64_t>(fhat.size()); ++j) {
        CHECK(std::abs(fhat[static_cast<std::size_t>(j)] - fourier_at(f, fhat.point(j))) <= 1e-12);
      }
      // Outside p^{-k} Z_p the transform vanishes.
      CHECK(std::abs(fourier_at(f, PAdicRational(p, 1, f.constancy_level() + 1))) == 0.0);
      CHECK(fhat.at(PAdicRational(p, 1, f.constancy_level() + 1)) == Complex{});
    }
  }
}

TEST_CASE("transforms of indicators") {
  for (std::int64_t p : {2, 3, 7}) {
    const GroupContext ctx(p);
    const auto one = indicator(ctx, PAdicRational::zero(p), 0);
    CHECK(sup_distance(fourier(one), one) == 0.0);
    CHECK(sup_distance(inverse_fourier(one), one) == 0.0);
    CHECK(sup_distance(fourier_fast(one), one) == 0.0);
  }

  const GroupContext c2(2);
  const auto shifted = fourier(indicator(c2, PAdicRational(2, 1, 1), 0));
  CHECK(shifted.support_level() == 0);
  CHECK(shifted.constancy_level() == 1);
  CHECK(std::abs(shifted[0] - Complex(1.0)) <= 1e-15);
  CHECK(std::abs(shifted[1] - Complex(-1.0)) <= 1e-15);

  const auto ch = fourier(std::sqrt(2.0) * indicator(c2, PAdicRational::zero(2), 1));
  CHECK(ch.support_level() == 1);
  CHECK(ch.constancy_level() == 0);
  CHECK(std::abs(ch[0] - Complex(1.0 / std::sqrt(2.0))) <= 1e-15);
  CHECK(std::abs(ch[1] - Complex(1.0 / std::sqrt(2.0))) <= 1e-15);

  // Modulated indicator: fhat(gamma) = (a, beta - gamma) 1_{beta + Z_p}(gamma).
  const GroupContext c3(3);
  const PAdicRational a(3, 2, 1);
  const PAdicRational beta(3, 1, 2);
  const auto f = indicator(c3, a, 0, beta);
  const auto fhat = fourier(f);
  for (std::int64_t j = 0; j < static_cast<std::int64_t>(fhat.size()); ++j) {
    const PAdicRational gamma = fhat.point(j);
    const PAdicRational d = gamma - beta;
    const Complex expected = d.is_integral() ? character(a, beta - gamma) : Complex{};
    CHECK(std::abs(fhat[static_cast<std::size_t>(j)] - expected) <= 1e-12);
  }
}

TEST_CASE("Plancherel and inversion on random functions") {
  Rng rng(8);
  for (int t = 0; t < 100; ++t) {
    const std::int64_t p = std::array<std::int64_t, 3>{2, 3, 5}[t % 3];
    const GroupContext ctx(p);
    std::uniform_int_distribution<int> lv(0, p == 2 ? 4 : 2);
    const auto f = random_step_function(ctx, lv(rng), lv(rng), rng);
    const auto fhat = fourier_fast(f);
    CHECK(std::abs(norm(fhat) - norm(f)) <= 1e-12 * norm(f));
    CHECK(sup_distance(inverse_fourier(fourier(f)), f) <= 1e-12);
    CHECK(sup_distance(inverse_fourier_fast(fhat), f) <= 1e-12);
  }
}

TEST_CASE("radix DFT agrees with the naive DFT") {
  Rng rng(50);
  int trials = 0;
  for (std::int64_t p : {2, 3, 5}) {
    const GroupContext ctx(p);
    for (int t = 0; t < 17; ++t, ++trials) {
      std::uniform_int_distribution<int> lv(0, p == 5 ? 2 : 3);
      const auto f = random_step_function(ctx, lv(rng), lv(rng), rng);
      CHECK(sup_distance(fourier_fast(f), fourier(f)) <= 1e-10);
      CHECK(sup_distance(inverse_fourier_fast(f), inverse_fourier(f)) <= 1e-10);
    }
  }
  CHECK(trials >= 50);

  const auto x = random_step_function(GroupContext(3), 2, 1, rng);
  REQUIRE(x.size() == 27);
  for (auto dir : {dft::Direction::forward, dft::Direction::backward}) {
    CHECK(sup_diff(dft::radix(x.coeffs(), 3, dir), dft::naive(x.coeffs(), dir)) <= 1e-10);
  }
  CHECK_THROWS_AS(dft::radix(x.coeffs().first(26), 3, dft::Direction::forward), Error);
}
