#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "padic_frames/oracle.hpp"
#include "padic_frames/padic.hpp"

using namespace padic_frames;

namespace {

Complex cis(double turns) {
  return std::polar(1.0, 2.0 * std::numbers::pi * turns);
}

}  // namespace

TEST_CASE("valuation") {
  CHECK(valuation(PAdicRational(2, 3, 2)) == -2);
  CHECK(valuation(PAdicRational(3, 9)) == 2);
  CHECK(valuation(PAdicRational(5, 7)) == 0);
  CHECK(valuation(PAdicRational(2, -12)) == 2);
  CHECK_THROWS_WITH_AS(valuation(PAdicRational::zero(3)), "valuation of zero undefined", Error);
}

TEST_CASE("reduced form") {
  const PAdicRational x(2, 6, 3);  // 6/8 = 3/4
  CHECK(x.numerator() == 3);
  CHECK(x.exponent() == 2);
  CHECK(PAdicRational(3, 0, 5).exponent() == 0);
  CHECK(PAdicRational(2, 1, 1) + PAdicRational(2, 1, 1) == PAdicRational(2, 1));
  CHECK(PAdicRational(3, 10, 2).to_string() == "10/3^2");
}

TEST_CASE("fractional_part") {
  CHECK(fractional_part(PAdicRational(2, 3, 2)) == PAdicRational(2, 3, 2));
  CHECK(fractional_part(PAdicRational(7, 123)) == PAdicRational::zero(7));
  CHECK(fractional_part(PAdicRational(3, 10, 2)) == PAdicRational(3, 1, 2));
  CHECK(fractional_part(PAdicRational(2, -1, 1)) == PAdicRational(2, 1, 1));
}

TEST_CASE("fractional_part is invariant under integer shifts") {
  Rng rng(11);
  std::uniform_int_distribution<std::int64_t> num(-5000, 5000);
  std::uniform_int_distribution<int> ex(0, 6);
  for (std::int64_t p : {2, 3, 5}) {
    for (int t = 0; t < 200; ++t) {
      const PAdicRational x(p, num(rng), ex(rng));
      const PAdicRational n(p, num(rng));
      CHECK(fractional_part(x + n) == fractional_part(x));
      const PAdicRational fx = fractional_part(x);
      CHECK((x - fx).is_integral());
      CHECK(fx.numerator() >= 0);
    }
  }
}

TEST_CASE("character") {
  CHECK(character(PAdicRational(5, 17), PAdicRational(5, -3)) == Complex(1.0, 0.0));
  CHECK(std::abs(character(PAdicRational(2, 1, 1), PAdicRational(2, 1)) - Complex(-1.0, 0.0)) < 1e-15);
  CHECK(std::abs(character(PAdicRational(3, 1, 1), PAdicRational(3, 1)) - cis(1.0 / 3.0)) < 1e-15);
  // {(5/9)(7/3)}_3 = {35/27} = 8/27
  CHECK(std::abs(character(PAdicRational(3, 5, 2), PAdicRational(3, 7, 1)) - cis(8.0 / 27.0)) < 1e-14);
}

TEST_CASE("character is a homomorphism in the second argument") {
  Rng rng(5);
  std::uniform_int_distribution<std::int64_t> num(-1000, 1000);
  std::uniform_int_distribution<int> ex(0, 5);
  for (std::int64_t p : {2, 3, 5, 7}) {
    for (int t = 0; t < 200; ++t) {
      const PAdicRational x(p, num(rng), ex(rng));
      const PAdicRational g1(p, num(rng), ex(rng));
      const PAdicRational g2(p, num(rng), ex(rng));
      CHECK(std::abs(character(x, g1 + g2) - character(x, g1) * character(x, g2)) <= 1e-12);
      CHECK(std::abs(character(x, g1) - character(g1, x)) <= 1e-15);
    }
  }
}

TEST_CASE("section_decompose") {
  const GroupContext ctx(2);
  const Section canonical(ctx);
  {
    const auto [sigma, eta] = section_decompose(PAdicRational(2, 7), canonical);
    CHECK(sigma.is_zero());
    CHECK(eta == PAdicRational(2, 7));
  }
  {
    const auto [sigma, eta] = section_decompose(PAdicRational(2, 5, 2), canonical);
    CHECK(sigma == PAdicRational(2, 1, 2));
    CHECK(eta == PAdicRational(2, 1));
  }
  Section offset(ctx);
  offset.set_offset(PAdicRational(2, 1, 2), PAdicRational(2, 1));
  {
    const auto [sigma, eta] = section_decompose(PAdicRational(2, 5, 2), offset);
    CHECK(sigma == PAdicRational(2, 5, 2));
    CHECK(eta.is_zero());
  }
}

TEST_CASE("section offsets are validated") {
  Section s(GroupContext(3));
  CHECK_THROWS_AS(s.set_offset(PAdicRational(3, 4, 1), PAdicRational(3, 1)), Error);  // 4/3 not canonical
  CHECK_THROWS_AS(s.set_offset(PAdicRational(3, 1, 1), PAdicRational(3, 1, 1)), Error);  // delta not in Z_3
  CHECK_THROWS_AS(s.set_offset(PAdicRational(2, 1, 1), PAdicRational(2, 1)), Error);  // prime mismatch
  s.set_offset(PAdicRational(3, 2, 1), PAdicRational(3, -4));
  CHECK(s.offset(PAdicRational(3, 2, 1)) == PAdicRational(3, -4));
  CHECK(s.offset(PAdicRational(3, 1, 1)).is_zero());
}

TEST_CASE("section_decompose returns eta in Z_p for random sections") {
  Rng rng(17);
  std::uniform_int_distribution<std::int64_t> num(-3000, 3000);
  std::uniform_int_distribution<int> ex(0, 4);
  for (std::int64_t p : {2, 3, 5}) {
    const GroupContext ctx(p);
    for (int s = 0; s < 10; ++s) {
      const Section section = random_section(ctx, 3, 6, rng);
      for (int t = 0; t < 50; ++t) {
        const PAdicRational gamma(p, num(rng), ex(rng));
        const auto [sigma, eta] = section_decompose(gamma, section);
        CHECK((eta.is_zero() || valuation(eta) >= 0));
        CHECK(sigma + eta == gamma);
        CHECK(fractional_part(sigma) == fractional_part(gamma));
      }
    }
  }
}

TEST_CASE("pruefer_add") {
  CHECK(PrueferElement(3, 1, 1) + PrueferElement(3, 1, 1) == PrueferElement(3, 2, 1));
  CHECK(PrueferElement(3, 1, 1) + PrueferElement(3, 2, 1) == PrueferElement::zero(3));
  CHECK(PrueferElement(2, 1, 1) + PrueferElement(2, 1, 2) == PrueferElement(2, 3, 2));
  CHECK(PrueferElement(2, 2, 2) == PrueferElement(2, 1, 1));
  CHECK(PrueferElement(2, 4, 2).level() == 0);
  CHECK_THROWS_AS(pruefer_add(PrueferElement(2, 1, 1), PrueferElement(3, 1, 1)), Error);
}

TEST_CASE("Q_p/Z_p group axioms by exhaustive enumeration") {
  for (std::int64_t p : {2, 3}) {
    std::vector<PrueferElement> all;
    for (std::int64_t r = 0; r < checked_pow(p, 3); ++r) all.emplace_back(p, r, 3);
    for (const auto& a : all) {
      CHECK(a + (-a) == PrueferElement::zero(p));
      CHECK(a + PrueferElement::zero(p) == a);
      for (const auto& b : all) {
        CHECK(a + b == b + a);
        for (std::size_t c = 0; c < all.size(); c += 3) {
          CHECK((a + b) + all[c] == a + (b + all[c]));
        }
      }
    }
  }
}

TEST_CASE("group context") {
  CHECK(GroupContext(2).max_level() == 12);
  CHECK(GroupContext(3).max_level() == 7);
  CHECK(GroupContext(5, 3).max_level() == 3);
  CHECK_THROWS_WITH_AS(GroupContext(4), "p = 4 is not prime", Error);
  CHECK_THROWS_AS(GroupContext(2, 40), Error);
}
