#include <doctest.h>

#include <twinsieve/placement.hpp>

#include "oracles.hpp"

#include <random>

using namespace twinsieve;

TEST_CASE("binomial coefficients") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 5) == 1);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(60, 30) == BigInt("118264581564861424"));
  CHECK(binomial(100, 50) == BigInt("100891344545564193334812497256"));
}

TEST_CASE("joint placement counts") {
  CHECK(t_count(5, 2, 2, 2) == 10);  // C(5,2) C(2,2) C(3,0)
  CHECK(t_count(5, 2, 2, 1) == 60);  // C(5,2) C(2,1) C(3,1)
  CHECK(t_count(5, 2, 2, 0) == 30);  // C(5,2) C(2,0) C(3,2)
  CHECK(t_count(7, 3, 0, 0) == binomial(7, 3));  // empty second row
  // combinatorially impossible parameters count zero
  CHECK(t_count(5, 2, 2, 3) == 0);
  CHECK(t_count(5, 4, 4, 0) == 0);  // 4 units cannot avoid 4 units in 5 cells
  CHECK(t_count(5, 6, 2, 1) == 0);
}

TEST_CASE("counts match exhaustive enumeration") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 30; ++t) {
    unsigned n = 1 + rng() % 10;
    unsigned m1 = rng() % (n + 1);
    unsigned m2 = rng() % (n + 1);
    auto truth = oracle::enumerate_overlaps(n, m1, m2);
    BigInt total = 0;
    for (unsigned s = 0; s <= std::min(m1, m2); ++s) {
      BigInt c = t_count(n, m1, m2, s);
      auto it = truth.by_overlap.find(s);
      unsigned long long want = it == truth.by_overlap.end() ? 0 : it->second;
      CHECK(c == want);
      total += c;
    }
    CHECK(total == truth.total);
  }
}

TEST_CASE("summation identity, exhaustive then random") {
  for (std::uint64_t n = 1; n <= 12; ++n) {
    for (std::uint64_t m1 = 0; m1 <= n; ++m1) {
      for (std::uint64_t m2 = 0; m2 <= n; ++m2) {
        REQUIRE(identity_check(n, m1, m2));
      }
    }
  }
  std::mt19937_64 rng(23);
  for (int t = 0; t < 100; ++t) {
    std::uint64_t n = 1 + rng() % 60;
    CHECK(identity_check(n, rng() % (n + 1), rng() % (n + 1)));
  }
  CHECK_THROWS_AS(identity_check(4, 5, 1), std::domain_error);
}

TEST_CASE("expected overlap is m1 m2 / n, both routes") {
  CHECK(expected_overlap(5, 2, 2) == BigRational(4, 5));
  CHECK(expected_overlap(7, 7, 4) == BigRational(4));   // full first row
  CHECK(expected_overlap(9, 1, 1) == BigRational(1, 9));
  CHECK(expected_overlap(6, 0, 4) == BigRational(0));
  CHECK_THROWS_AS(expected_overlap(0, 0, 0), std::domain_error);
  CHECK_THROWS_AS(expected_overlap(4, 5, 1), std::domain_error);

  // exhaustive small cases (the definitional route is re-verified inside)
  for (std::uint64_t n = 1; n <= 12; ++n) {
    for (std::uint64_t m1 = 0; m1 <= n; ++m1) {
      for (std::uint64_t m2 = 0; m2 <= n; ++m2) {
        REQUIRE(expected_overlap(n, m1, m2) == BigRational(BigInt(m1) * m2, BigInt(n)));
      }
    }
  }

  // and against the raw enumeration
  std::mt19937_64 rng(31);
  for (int t = 0; t < 20; ++t) {
    unsigned n = 1 + rng() % 10;
    unsigned m1 = rng() % (n + 1);
    unsigned m2 = rng() % (n + 1);
    auto truth = oracle::enumerate_overlaps(n, m1, m2);
    CHECK(BigRational(BigInt(truth.weighted), BigInt(truth.total)) ==
          expected_overlap(n, m1, m2));
  }
}

TEST_CASE("monte carlo sampler") {
  auto r = monte_carlo_overlap(5, 2, 2, 1'000'000, 1);
  CHECK(r.std_error > 1e-4);
  CHECK(r.std_error < 1e-2);
  CHECK(std::fabs(r.mean - 0.8) <= 4 * r.std_error);

  SUBCASE("deterministic for a fixed seed") {
    auto again = monte_carlo_overlap(5, 2, 2, 1'000'000, 1);
    CHECK(r.mean == again.mean);
    CHECK(r.std_error == again.std_error);
  }

  SUBCASE("independent of thread count") {
    auto one = monte_carlo_overlap(11, 4, 3, 200'000, 42, 0, 1);
    auto four = monte_carlo_overlap(11, 4, 3, 200'000, 42, 0, 4);
    CHECK(one.mean == four.mean);
    CHECK(one.std_error == four.std_error);
  }

  SUBCASE("different seed, same distribution") {
    auto other = monte_carlo_overlap(5, 2, 2, 1'000'000, 999);
    CHECK(other.mean != r.mean);  // astronomically unlikely to tie
    CHECK(std::fabs(other.mean - 0.8) <= 4 * other.std_error);
  }

  SUBCASE("empty row gives exactly zero") {
    auto zero = monte_carlo_overlap(9, 0, 5, 10'000, 7);
    CHECK(zero.mean == 0.0);
    CHECK(zero.std_error == 0.0);
  }

  SUBCASE("rotating the second row leaves the expectation alone") {
    auto shifted = monte_carlo_overlap(5, 2, 2, 1'000'000, 1, 3);
    CHECK(std::fabs(shifted.mean - 0.8) <= 4 * shifted.std_error);
  }

  SUBCASE("larger configuration against the exact value") {
    // 17 * 11 / 59 = 3.1694...
    auto big = monte_carlo_overlap(59, 17, 11, 400'000, 5);
    double exact = 17.0 * 11.0 / 59.0;
    CHECK(std::fabs(big.mean - exact) <= 4 * big.std_error);
  }

  CHECK_THROWS_AS(monte_carlo_overlap(5, 2, 2, 0, 1), std::domain_error);
  CHECK_THROWS_AS(monte_carlo_overlap(5, 6, 2, 10, 1), std::domain_error);
  CHECK_THROWS_AS(monte_carlo_overlap(0, 0, 0, 10, 1), std::domain_error);
}
