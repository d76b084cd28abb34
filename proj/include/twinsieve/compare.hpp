#pragma once

#include <twinsieve/bounds.hpp>
#include <twinsieve/intervals.hpp>
#include <twinsieve/matrix6.hpp>
#include <twinsieve/model.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace twinsieve {

// Raised when an interval has no materialized integer bounds and therefore
// cannot be sieved; callers should fall back to the model-only table.
class not_enumerable_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EmpiricalReport {
  int i = 0;
  std::uint64_t col_lo = 0;
  std::uint64_t col_hi = 0;  // last column actually counted
  bool truncated = false;    // sieve limit cut the interval; counts are lower bounds
  std::uint64_t row4_primes = 0;
  std::uint64_t row6_primes = 0;
  std::uint64_t twin_pairs = 0;
  bool eq2_applicable = false;  // lower-estimate preconditions held
  ExtendedReal eq2_lower;
  ExtendedReal model_expectation;
};

// Sieved counts for interval i (3 or 4), truncated to columns whose row-6
// value stays within sieve_limit.
inline EmpiricalReport interval_report(int i, std::uint64_t sieve_limit,
                                       const SieveConfig& cfg = {}) {
  if (i < 3) throw std::domain_error("empirical reports start at i = 3");
  if (i > 4) {
    throw not_enumerable_error(
        "interval " + std::to_string(i) +
        " has no integer column bounds; use the model-only table");
  }
  IntervalSpec spec = interval_spec(i);
  if (sieve_limit < spec.num_lo) {
    throw std::domain_error("sieve limit is below the interval start");
  }
  EmpiricalReport r;
  r.i = i;
  r.col_lo = spec.col_lo;
  std::uint64_t col_cap = (sieve_limit - 1) / 6;  // 6k + 1 <= limit
  if (col_cap < spec.col_lo) {
    throw std::domain_error("sieve limit covers no full column of the interval");
  }
  r.col_hi = std::min(spec.col_hi, col_cap);
  r.truncated = r.col_hi < spec.col_hi;

  RowCounts counts = count_rows(r.col_lo, r.col_hi, cfg);
  r.row4_primes = counts.row4;
  r.row6_primes = counts.row6;
  r.twin_pairs = counts.twins;

  r.eq2_applicable = r.col_lo >= 9 && r.col_hi >= 7 * r.col_lo;
  if (r.eq2_applicable) {
    r.eq2_lower = row_prime_lower_estimate(r.col_lo, r.col_hi);
  }
  r.model_expectation = expectation(i);
  return r;
}

struct ReportRow {
  ModelReport model;
  std::optional<EmpiricalReport> empirical;
};

// Model rows for i = 3..i_max with empirical rows wherever the interval is
// enumerable under the sieve limit.
inline std::vector<ReportRow> full_report(int i_max, std::uint64_t sieve_limit,
                                          const SieveConfig& cfg = {}) {
  if (i_max < 3) throw std::domain_error("reports start at i = 3");
  std::vector<ReportRow> rows;
  rows.reserve(static_cast<std::size_t>(i_max - 2));
  for (int i = 3; i <= i_max; ++i) {
    ReportRow row{model_report(i), std::nullopt};
    if (i <= 4) {
      IntervalSpec spec = interval_spec(i);
      bool enumerable = spec.num_lo <= sieve_limit && (sieve_limit - 1) / 6 >= spec.col_lo;
      if (enumerable) row.empirical = interval_report(i, sieve_limit, cfg);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace twinsieve
