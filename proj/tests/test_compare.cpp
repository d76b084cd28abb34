#include <doctest.h>

#include <twinsieve/compare.hpp>
#include <twinsieve/reports.hpp>

#include "oracles.hpp"

using namespace twinsieve;

TEST_CASE("interval 3 sieved in full") {
  EmpiricalReport r = interval_report(3, 2419);
  CHECK(r.col_lo == 9);
  CHECK(r.col_hi == 403);
  CHECK_FALSE(r.truncated);
  CHECK(r.row4_primes == 175);
  CHECK(r.row6_primes == 169);
  CHECK(r.twin_pairs == 66);
  CHECK(r.eq2_applicable);
  CHECK(r.eq2_lower.to_float() == doctest::Approx(85.23509042580352).epsilon(1e-12));
  CHECK(r.model_expectation.to_float() ==
        doctest::Approx(10.195415392434040).epsilon(1e-12));

  // the sieved reality dominates both analytic columns
  CHECK(ExtendedReal::from_integer(static_cast<long long>(r.twin_pairs)) >
        r.model_expectation);
  CHECK(ExtendedReal::from_integer(static_cast<long long>(r.row4_primes + r.row6_primes)) >
        r.eq2_lower);

  // a larger limit changes nothing once the interval is complete
  EmpiricalReport r2 = interval_report(3, 1'000'000);
  CHECK(r2.col_hi == r.col_hi);
  CHECK(r2.twin_pairs == r.twin_pairs);
  CHECK_FALSE(r2.truncated);
}

TEST_CASE("truncated interval 4") {
  EmpiricalReport r = interval_report(4, 1'000'000);
  CHECK(r.col_lo == 404);
  CHECK(r.col_hi == 166'666);  // (1e6 - 1) / 6
  CHECK(r.truncated);
  CHECK(r.row4_primes > 0);
  CHECK(r.row6_primes > 0);
  CHECK(r.twin_pairs > 0);
  CHECK(r.twin_pairs <= std::min(r.row4_primes, r.row6_primes));
  CHECK(r.eq2_applicable);  // 166666 >= 7 * 404
  // counts dominate the estimate over the truncated window too
  CHECK(ExtendedReal::from_integer(static_cast<long long>(r.row4_primes + r.row6_primes)) >
        r.eq2_lower);
}

TEST_CASE("estimate marked inapplicable when its preconditions fail") {
  // truncation to columns [404, 470]: 470 < 7 * 404
  EmpiricalReport r = interval_report(4, 2824);
  CHECK(r.col_hi == 470);
  CHECK_FALSE(r.eq2_applicable);
}

TEST_CASE("error paths") {
  CHECK_THROWS_AS(interval_report(5, 1'000'000), not_enumerable_error);
  CHECK_THROWS_AS(interval_report(2, 1'000'000), std::domain_error);
  CHECK_THROWS_AS(interval_report(3, 40), std::domain_error);  // below num_lo = 50
  // limit reaches the interval start but not one full column (6*404+1 = 2425)
  CHECK_THROWS_AS(interval_report(4, 2422), std::domain_error);
  // full_report degrades to a model-only row instead
  auto rows = full_report(4, 2422);
  CHECK(rows[0].empirical.has_value());
  CHECK_FALSE(rows[1].empirical.has_value());
}

TEST_CASE("row-prime counts dominate the estimate on admissible subranges") {
  for (std::uint64_t b : {std::uint64_t(63), std::uint64_t(100), std::uint64_t(250),
                          std::uint64_t(403)}) {
    auto [r4, r6] = count_row_primes(9, b);
    auto est = row_prime_lower_estimate(9, b);
    CAPTURE(b);
    CHECK(ExtendedReal::from_integer(static_cast<long long>(r4 + r6)) > est);
  }
}

TEST_CASE("...exhaustively over interval 3") {
  // prefix row-prime counts by column, then every (a, b) with a >= 9, b >= 7a
  std::vector<int> prefix(404, 0);
  for (int k = 1; k <= 403; ++k) {
    prefix[k] = prefix[k - 1] + oracle::is_prime(6ull * k - 1) +
                oracle::is_prime(6ull * k + 1);
  }
  const double ln2 = 0.6931471805599453;
  auto estimate = [&](double a, double b) {
    double th = 6 * b + 1, tl = 6 * a - 1;
    return ln2 / 2 * th / std::log(th) - 1 - 2 * ln2 * tl / std::log(tl) -
           std::log2(tl) / 2;
  };
  int checked = 0;
  for (std::uint64_t a = 9; 7 * a <= 403; ++a) {
    for (std::uint64_t b = 7 * a; b <= 403; ++b) {
      double count = prefix[b] - prefix[a - 1];
      double est = estimate(static_cast<double>(a), static_cast<double>(b));
      ++checked;
      if (count < est + 1e-6) {
        // close call or miss: settle it in extended precision
        auto exact_count = ExtendedReal::from_integer(prefix[b] - prefix[a - 1]);
        REQUIRE(compare(exact_count, row_prime_lower_estimate(a, b)) !=
                std::strong_ordering::less);
      }
    }
  }
  CHECK(checked == 8477);
}

TEST_CASE("full report mixes empirical and model-only rows") {
  auto rows = full_report(5, 10'000'000);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].model.i == 3);
  REQUIRE(rows[0].empirical.has_value());
  CHECK_FALSE(rows[0].empirical->truncated);
  REQUIRE(rows[1].empirical.has_value());
  CHECK(rows[1].empirical->truncated);
  CHECK_FALSE(rows[2].empirical.has_value());  // interval 5: model only

  auto one = full_report(3, 2419);
  REQUIRE(one.size() == 1);
  CHECK(one[0].empirical.has_value());
  CHECK_THROWS_AS(full_report(2, 1000), std::domain_error);
}

TEST_CASE("csv rendering") {
  auto rows = full_report(5, 100'000);
  std::string csv = compare_csv(rows, 12);
  CHECK(csv.find("i,col_lo,col_hi,truncated,row4_primes,row6_primes,twin_pairs,"
                 "eq2_lower,model_expectation,density,ratio_to_prev\n") == 0);
  CHECK(csv.find("3,9,403,false,175,169,66,") != std::string::npos);
  // model-only rows carry empty empirical cells
  CHECK(csv.find("5,,,,,,,,") != std::string::npos);
  // line count: header + one row per interval
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
}

TEST_CASE("csv output is identical for any thread count") {
  SieveConfig serial;
  serial.threads = 1;
  SieveConfig quad;
  quad.threads = 4;
  quad.segment_numbers = 1 << 18;
  std::string a = compare_csv(full_report(4, 10'000'000, serial));
  std::string b = compare_csv(full_report(4, 10'000'000, quad));
  CHECK(a == b);
}

TEST_CASE("json rendering carries the documented fields") {
  auto rows = full_report(5, 100'000);
  Json j = to_json(rows[0]);
  REQUIRE(j.contains("model"));
  REQUIRE(j.contains("empirical"));
  for (const char* key :
       {"i", "density", "twin_prob", "expectation", "ratio_to_prev", "partial_sum"}) {
    REQUIRE(j["model"].contains(key));
  }
  for (const char* key : {"i", "col_lo", "col_hi", "truncated", "row4_primes",
                          "row6_primes", "twin_pairs", "eq2_lower", "model_expectation"}) {
    REQUIRE(j["empirical"].contains(key));
  }
  CHECK(j["model"]["ratio_to_prev"].is_null());
  CHECK(j["empirical"]["i"] == 3);
  CHECK(to_json(rows[2])["empirical"].is_null());

  Json lemma = to_json(lemma_sides(3));
  for (const char* key : {"i", "lhs", "rhs", "holds", "margin"}) {
    REQUIRE(lemma.contains(key));
  }
  CHECK(lemma["holds"] == true);
  CHECK(lemma["lhs"].is_string());

  Json spec3 = to_json(interval_spec(3));
  for (const char* key : {"i", "col_lo", "col_hi", "num_lo", "num_hi", "exact"}) {
    REQUIRE(spec3.contains(key));
  }
  CHECK(spec3["exact"] == true);
  CHECK(spec3["col_lo"] == 9);
  CHECK_FALSE(spec3.contains("floor_col_hi"));
  Json spec2 = to_json(interval_spec(2));
  CHECK(spec2["floor_col_hi"] == 7);
  Json spec5 = to_json(interval_spec(5));
  CHECK(spec5["exact"] == false);
  CHECK(spec5["col_hi"].is_string());
}
