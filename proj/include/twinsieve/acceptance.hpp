#pragma once

#include <twinsieve/bounds.hpp>
#include <twinsieve/compare.hpp>
#include <twinsieve/intervals.hpp>
#include <twinsieve/matrix6.hpp>
#include <twinsieve/model.hpp>
#include <twinsieve/placement.hpp>
#include <twinsieve/reports.hpp>
#include <twinsieve/sieve.hpp>

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

namespace twinsieve {

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

inline std::string format_check_line(const CheckResult& r) {
  std::ostringstream out;
  out << (r.passed ? "PASS" : "FAIL") << "  " << r.id << "  " << r.name;
  if (!r.detail.empty()) out << "  [" << r.detail << "]";
  return out.str();
}

namespace verify_detail {

inline bool naive_is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline bool close_abs(double v, double target, double tol) {
  return std::fabs(v - target) <= tol;
}

inline bool close_rel(double v, double target, double tol) {
  return std::fabs(v - target) <= tol * std::fabs(target);
}

inline CheckResult check_lemma_instances() {
  CheckResult r{1, "lemma-instance-values", false, "", 0};
  LemmaVerdict v3 = lemma_sides(3);
  LemmaVerdict v4 = lemma_sides(4);
  LemmaVerdict v5 = lemma_sides(5);
  bool ok3 = close_abs(v3.lhs.to_float(), 88.046, 1e-3) &&
             close_abs(v3.rhs.to_float(), 63.543, 1e-3) && v3.holds;
  bool ok4 = close_rel(v4.lhs.to_float(), 2135665453.57, 1e-9) &&
             close_rel(v4.rhs.to_float(), 1103713354.83, 1e-9) && v4.holds;
  bool ok5 = close_rel(v5.lhs.to_float(), 2.22672e50, 1e-4) &&
             close_rel(v5.rhs.to_float(), 1.08681e50, 1e-4) && v5.holds;
  r.passed = ok3 && ok4 && ok5;
  std::ostringstream d;
  d << "i=3: " << v3.lhs.str(8) << " > " << v3.rhs.str(8) << "; i=4,5 "
    << (ok4 && ok5 ? "match" : "MISMATCH");
  r.detail = d.str();
  return r;
}

inline CheckResult check_interval_boundaries() {
  CheckResult r{2, "interval-boundaries", false, "", 0};
  IntervalSpec s3 = interval_spec(3);
  r.passed = column_boundary(3) == 403 && column_boundary(4) == 26489122129ull &&
             s3.col_lo == 9 && s3.col_hi == 403;
  std::ostringstream d;
  d << "floor(e^6)=" << column_boundary(3) << ", floor(e^24)=" << column_boundary(4)
    << ", interval 3 = [" << s3.col_lo << ", " << s3.col_hi << "]";
  r.detail = d.str();
  return r;
}

inline CheckResult check_sieve_oracle() {
  CheckResult r{3, "sieve-oracle-equivalence", false, "", 0};
  const std::uint64_t limit = 100'000;
  std::uint64_t streamed = 0;
  std::uint64_t oracle = 0;
  std::uint64_t mismatches = 0;
  for_each_segment(0, limit + 1, SieveConfig{}, [&](const PrimeSegment& seg) {
    for (std::uint64_t n = seg.lo; n < seg.hi; ++n) {
      streamed += seg.test(n);
      oracle += naive_is_prime(n);
      if (streamed != oracle) ++mismatches;
    }
  });
  // direct prime_count calls on a stride plus the endpoints
  std::uint64_t direct_checked = 0;
  std::uint64_t direct_oracle = 0;
  for (std::uint64_t x : {std::uint64_t(0), std::uint64_t(1), std::uint64_t(2),
                          std::uint64_t(9871), std::uint64_t(50'000), limit}) {
    direct_oracle = 0;
    for (std::uint64_t n = 2; n <= x; ++n) direct_oracle += naive_is_prime(n);
    if (prime_count(x) != direct_oracle) ++mismatches;
    ++direct_checked;
  }
  SieveConfig single;
  single.segment_numbers = 16'777'216;
  bool segments_agree =
      primes_in_range(0, 10'000'000) == primes_in_range(0, 10'000'000, single);
  r.passed = mismatches == 0 && segments_agree;
  std::ostringstream d;
  d << "pi streamed to 1e5 exact, " << direct_checked
    << " direct calls exact, segmented == single-segment on [0, 1e7): "
    << (segments_agree ? "yes" : "NO");
  r.detail = d.str();
  return r;
}

inline CheckResult check_bound_validity() {
  CheckResult r{4, "bound-pair-validity-to-1e6", false, "", 0};
  std::uint64_t violations = pnt_violations(2, 1'000'000);
  r.passed = violations == 0;
  std::ostringstream d;
  d << violations << " violations over x in [2, 1e6]";
  r.detail = d.str();
  return r;
}

inline CheckResult check_placement() {
  CheckResult r{5, "placement-exactness", false, "", 0};
  bool exact_ok = true;
  for (std::uint64_t n = 1; n <= 12 && exact_ok; ++n) {
    for (std::uint64_t m1 = 0; m1 <= n && exact_ok; ++m1) {
      for (std::uint64_t m2 = 0; m2 <= n && exact_ok; ++m2) {
        if (!identity_check(n, m1, m2)) exact_ok = false;
        // expected_overlap re-derives the definitional sum and throws on
        // any disagreement with m1*m2/n
        if (expected_overlap(n, m1, m2) != BigRational(BigInt(m1) * m2, BigInt(n))) {
          exact_ok = false;
        }
      }
    }
  }
  MonteCarloResult mc = monte_carlo_overlap(5, 2, 2, 1'000'000, 1);
  bool mc_ok = std::fabs(mc.mean - 0.8) <= 4.0 * mc.std_error;
  r.passed = exact_ok && mc_ok;
  std::ostringstream d;
  d << "exhaustive n<=12 exact: " << (exact_ok ? "yes" : "NO") << "; mc mean "
    << mc.mean << " +- " << mc.std_error << " vs 0.8";
  r.detail = d.str();
  return r;
}

inline CheckResult check_ratio_consistency() {
  CheckResult r{6, "ratio-route-consistency", false, "", 0};
  int worst_agreement = 999;
  bool monotone = true;
  ExtendedReal prev;
  for (int n = 4; n <= 20; ++n) {
    RatioPair p = dalembert_ratio_both(n);
    worst_agreement = std::min(worst_agreement, agreement_digits(p.direct, p.closed_form));
    if (!(p.direct > ExtendedReal::one())) monotone = false;
    if (n > 4 && !(p.direct > prev)) monotone = false;
    prev = p.direct;
  }
  r.passed = worst_agreement >= 40 && monotone;
  std::ostringstream d;
  d << "worst route agreement " << worst_agreement
    << " digits; ratios increasing > 1 for n = 4..20: " << (monotone ? "yes" : "NO");
  r.detail = d.str();
  return r;
}

inline CheckResult check_interval3_vs_model() {
  CheckResult r{7, "interval-3-empirical-vs-model", false, "", 0};
  EmpiricalReport e = interval_report(3, 2419);
  auto twins = ExtendedReal::from_integer(static_cast<long long>(e.twin_pairs));
  auto rows = ExtendedReal::from_integer(
      static_cast<long long>(e.row4_primes + e.row6_primes));
  bool twins_ok = compare(twins, e.model_expectation) != std::strong_ordering::less;
  bool rows_ok = e.eq2_applicable &&
                 compare(rows, e.eq2_lower) != std::strong_ordering::less;
  r.passed = twins_ok && rows_ok;
  std::ostringstream d;
  d << e.twin_pairs << " twins >= " << e.model_expectation.str(8) << "; "
    << (e.row4_primes + e.row6_primes) << " row primes >= " << e.eq2_lower.str(8);
  r.detail = d.str();
  return r;
}

inline CheckResult check_compare_determinism() {
  CheckResult r{8, "compare-determinism-2e9", false, "", 0};
  const std::uint64_t limit = 2'000'000'000ull;
  SieveConfig serial;
  serial.threads = 1;
  SieveConfig parallel;
  parallel.threads = std::max(2u, resolve_threads(0));

  auto t0 = std::chrono::steady_clock::now();
  std::string csv1 = compare_csv(full_report(4, limit, serial));
  auto t1 = std::chrono::steady_clock::now();
  std::string csv2 = compare_csv(full_report(4, limit, parallel));
  auto t2 = std::chrono::steady_clock::now();

  double s1 = std::chrono::duration<double>(t1 - t0).count();
  double s2 = std::chrono::duration<double>(t2 - t1).count();
  r.passed = csv1 == csv2;
  std::ostringstream d;
  d.setf(std::ios::fixed);
  d.precision(0);
  d << "byte-identical: " << (r.passed ? "yes" : "NO") << "; "
    << static_cast<double>(limit) / s1 << " numbers/s on 1 thread, "
    << static_cast<double>(limit) / s2 / parallel.threads << " numbers/s/core on "
    << parallel.threads << " threads";
  r.detail = d.str();
  return r;
}

}  // namespace verify_detail

// Runtime budgets (seconds) per criterion, enforced as part of each verdict.
inline double acceptance_time_budget(int id) {
  switch (id) {
    case 1: return 1.0;
    case 2: return 1.0;
    case 3: return 30.0;
    case 4: return 60.0;
    case 5: return 60.0;
    case 6: return 5.0;
    case 7: return 1.0;
    case 8: return 600.0;
    default: return 0.0;
  }
}

inline CheckResult run_criterion(int id) {
  using Fn = CheckResult (*)();
  static const Fn table[] = {
      verify_detail::check_lemma_instances,   verify_detail::check_interval_boundaries,
      verify_detail::check_sieve_oracle,      verify_detail::check_bound_validity,
      verify_detail::check_placement,         verify_detail::check_ratio_consistency,
      verify_detail::check_interval3_vs_model, verify_detail::check_compare_determinism,
  };
  if (id < 1 || id > 8) throw std::domain_error("criterion id must be in 1..8");
  auto t0 = std::chrono::steady_clock::now();
  CheckResult r = table[id - 1]();
  auto t1 = std::chrono::steady_clock::now();
  r.seconds = std::chrono::duration<double>(t1 - t0).count();
  if (r.seconds > acceptance_time_budget(id)) {
    r.passed = false;
    r.detail += "; OVER TIME BUDGET " + std::to_string(acceptance_time_budget(id)) + "s";
  }
  return r;
}

inline std::vector<CheckResult> run_acceptance() {
  std::vector<CheckResult> out;
  for (int id = 1; id <= 8; ++id) out.push_back(run_criterion(id));
  return out;
}

}  // namespace twinsieve
