#include <doctest.h>

#include <twinsieve/bounds.hpp>

#include <cmath>
#include <random>

using namespace twinsieve;

namespace {
constexpr double kLn2 = 0.6931471805599453;
}

TEST_CASE("x >= 2 bound pair") {
  BoundPair b10 = pnt_bounds(10);
  double lo10 = kLn2 * 10 / std::log(10.0) - 2.0;  // 1.01030...
  double hi10 = 4 * kLn2 * 10 / std::log(10.0) + std::log2(10.0);  // 15.3631...
  CHECK(b10.lower.to_float() == doctest::Approx(lo10).epsilon(1e-12));
  CHECK(b10.upper.to_float() == doctest::Approx(hi10).epsilon(1e-12));
  // pi(10) = 4 sits inside
  auto pi10 = ExtendedReal::from_integer(4);
  CHECK(b10.lower < pi10);
  CHECK(pi10 < b10.upper);

  // cancellation at x = 2: 2 ln2/ln2 - 2, zero to working precision
  auto lo2 = pnt_bounds(2).lower;
  CHECK((lo2.is_zero() ||
         (lo2.sign() > 0 ? lo2 : -lo2) < ExtendedReal::from_decimal(1.0, -60)));

  BoundPair b1m = pnt_bounds(1'000'000);
  auto pi1m = ExtendedReal::from_integer(78498);
  CHECK(b1m.lower < pi1m);
  CHECK(pi1m < b1m.upper);

  CHECK_THROWS_AS(pnt_bounds(1), std::domain_error);
  CHECK_THROWS_AS(pnt_bounds(0), std::domain_error);

  std::mt19937_64 rng(21);
  for (int t = 0; t < 200; ++t) {
    std::uint64_t x = 2 + rng() % 1'000'000'000;
    BoundPair b = pnt_bounds(x);
    CHECK(b.lower < b.upper);
  }
}

TEST_CASE("constant-factor bounds are evaluated, not asserted") {
  BoundPair c = chebyshev_bounds(100);
  CHECK(c.lower.to_float() == doctest::Approx(0.89 * 100 / std::log(100.0)).epsilon(1e-12));
  CHECK(c.upper.to_float() == doctest::Approx(1.11 * 100 / std::log(100.0)).epsilon(1e-12));
  // pi(100) = 25 actually lies above this upper bound at small x; the pair
  // is reported as-is.
  CHECK(c.upper < ExtendedReal::from_integer(25));

  BoundPair s = sylvester_bounds(100);
  CHECK(c.lower < s.lower);
  CHECK(s.upper < c.upper);
  CHECK_THROWS_AS(chebyshev_bounds(1), std::domain_error);
}

TEST_CASE("row-prime lower estimate") {
  // frozen: 85.2350904258035239727062808871655603327841...
  auto v = row_prime_lower_estimate(9, 403);
  CHECK(v.to_float() == doctest::Approx(85.23509042580352).epsilon(1e-12));

  CHECK_NOTHROW(row_prime_lower_estimate(9, 63));  // smallest admissible b = 7a
  CHECK_THROWS_AS(row_prime_lower_estimate(8, 100), std::domain_error);
  CHECK_THROWS_AS(row_prime_lower_estimate(9, 62), std::domain_error);
}

TEST_CASE("lemma instances reproduce the known decimals") {
  LemmaVerdict v3 = lemma_sides(3);
  CHECK(v3.lhs.to_float() == doctest::Approx(88.04667863038542).epsilon(1e-12));
  CHECK(v3.rhs.to_float() == doctest::Approx(63.54360419932386).epsilon(1e-12));
  CHECK(v3.holds);
  CHECK(v3.margin > ExtendedReal::zero());

  LemmaVerdict v4 = lemma_sides(4);
  CHECK(v4.lhs.to_float() == doctest::Approx(2135665453.5787373).epsilon(1e-12));
  CHECK(v4.rhs.to_float() == doctest::Approx(1103713354.8386791).epsilon(1e-12));
  CHECK(v4.holds);

  LemmaVerdict v5 = lemma_sides(5);
  CHECK(v5.lhs.to_float() == doctest::Approx(2.2267252794565498e50).epsilon(1e-12));
  CHECK(v5.rhs.to_float() == doctest::Approx(1.0868173986613602e50).epsilon(1e-12));
  CHECK(v5.holds);

  CHECK_THROWS_AS(lemma_sides(2), std::domain_error);
}

TEST_CASE("lemma inequality holds across the whole verification window") {
  for (int i = 3; i <= 20; ++i) {
    LemmaVerdict v = lemma_sides(i);
    REQUIRE(v.holds);
    REQUIRE(v.margin > ExtendedReal::zero());
  }
}

TEST_CASE("strengthened inequality") {
  for (int i = 6; i <= 20; ++i) {
    REQUIRE(strengthened_inequality(i).holds);
  }
  // evaluable (and reported) below the claimed range too
  for (int i = 3; i <= 5; ++i) CHECK_NOTHROW(strengthened_inequality(i));
  // lhs grows without bound
  for (int i = 3; i < 12; ++i) {
    CHECK(strengthened_inequality(i + 1).lhs > strengthened_inequality(i).lhs);
  }
  CHECK_THROWS_AS(strengthened_inequality(2), std::domain_error);
}

TEST_CASE("reduction steps hold numerically from i = 6") {
  for (int i = 6; i <= 20; ++i) {
    for (const StepCheck& s : derivation_steps(i)) {
      CAPTURE(i);
      CAPTURE(s.name);
      REQUIRE(s.holds);
    }
  }
  // the 1.009 density step is exactly the one that needs i > 5
  auto steps5 = derivation_steps(5);
  bool found = false;
  for (const StepCheck& s : steps5) {
    if (s.name == "density_ratio_1009") {
      CHECK_FALSE(s.holds);
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("floor-rounding gap between real and integer column bounds") {
  // frozen: 2.8115882045818991... and 0.5978811149365055...
  CHECK(column_rounding_gap(3).to_float() ==
        doctest::Approx(2.811588204581899).epsilon(1e-9));
  CHECK(column_rounding_gap(4).to_float() ==
        doctest::Approx(0.5978811149365055).epsilon(1e-9));
  // within one prime of the real-boundary value only for interval 4
  CHECK(column_rounding_gap(4) < ExtendedReal::one());
  CHECK_THROWS_AS(column_rounding_gap(5), std::domain_error);
}

TEST_CASE("no bound violations up to 1e5") {
  CHECK(pnt_violations(2, 100'000) == 0);
}
