#pragma once

#include <twinsieve/sieve.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace twinsieve {

// Coordinates in the six-row matrix that arranges the integers >= 2 into
// columns of six consecutive values: value(k, r) = 6k - 5 + r. Rows 1, 3, 5
// are even, row 2 is divisible by 3, so every prime >= 5 sits in row 4
// (6k - 1) or row 6 (6k + 1).
struct MatrixCoord {
  std::uint64_t k;  // column, >= 1
  int r;            // row, 1..6
};

inline std::uint64_t value_at(std::uint64_t k, int r) {
  if (k < 1) throw std::domain_error("column index must be >= 1");
  if (r < 1 || r > 6) throw std::domain_error("row index must be in 1..6");
  if (k > (std::numeric_limits<std::uint64_t>::max() - 1) / 6) {
    throw std::out_of_range("column index exceeds the supported width");
  }
  return 6 * k - 5 + static_cast<std::uint64_t>(r);
}

inline MatrixCoord coord_of(std::uint64_t n) {
  if (n < 2) throw std::domain_error("the matrix starts at 2");
  std::uint64_t t = n - 2;
  return {t / 6 + 1, static_cast<int>(t % 6) + 1};
}

// The candidate pair (6k - 1, 6k + 1) of column k.
struct TwinPair {
  std::uint64_t k;
  std::uint64_t lo;  // 6k - 1
  std::uint64_t hi;  // 6k + 1
  bool both_prime;
};

struct RowCounts {
  std::uint64_t row4 = 0;   // primes of the form 6k - 1 in the column range
  std::uint64_t row6 = 0;   // primes of the form 6k + 1
  std::uint64_t twins = 0;  // columns where both are prime
};

namespace detail {

inline void check_columns(std::uint64_t col_lo, std::uint64_t col_hi) {
  if (col_lo < 1 || col_lo > col_hi) {
    throw std::domain_error("column range must satisfy 1 <= col_lo <= col_hi");
  }
  if (col_hi > (std::numeric_limits<std::uint64_t>::max() - 2) / 6) {
    throw std::out_of_range("column range exceeds the supported width");
  }
}

// Scans rows 4 and 6 of columns [col_lo, col_hi_excl) against a shared base
// prime table, one locally sieved window at a time.
inline RowCounts scan_columns(std::uint64_t col_lo, std::uint64_t col_hi_excl,
                              const std::vector<std::uint32_t>& base,
                              std::uint64_t segment_numbers) {
  RowCounts rc;
  std::uint64_t cols_per_seg = std::max<std::uint64_t>(1, segment_numbers / 6);
  for (std::uint64_t c = col_lo; c < col_hi_excl; c += cols_per_seg) {
    std::uint64_t c_end = std::min(col_hi_excl, c + cols_per_seg);
    PrimeSegment seg = sieve_segment(6 * c - 1, 6 * (c_end - 1) + 2, base);
    for (std::uint64_t k = c; k < c_end; ++k) {
      bool p4 = seg.test(6 * k - 1);
      bool p6 = seg.test(6 * k + 1);
      rc.row4 += p4;
      rc.row6 += p6;
      rc.twins += p4 && p6;
    }
  }
  return rc;
}

}  // namespace detail

// Prime counts over rows 4 and 6 (and twin columns) of [col_lo, col_hi],
// parallel over column chunks with a deterministic ordered fold.
inline RowCounts count_rows(std::uint64_t col_lo, std::uint64_t col_hi,
                            const SieveConfig& cfg = {}) {
  detail::check_columns(col_lo, col_hi);
  std::uint64_t num_hi = 6 * col_hi + 2;
  detail::check_range(num_hi, cfg);
  auto base = small_primes(static_cast<std::uint32_t>(isqrt(num_hi - 1)));
  std::uint64_t chunk_cols = std::max<std::uint64_t>(1, cfg.segment_numbers / 6);
  auto parts = run_chunked<RowCounts>(
      col_lo, col_hi + 1, chunk_cols, cfg.threads,
      [&](std::uint64_t a, std::uint64_t b) {
        return detail::scan_columns(a, b, base, cfg.segment_numbers);
      });
  RowCounts total;
  for (const RowCounts& p : parts) {
    total.row4 += p.row4;
    total.row6 += p.row6;
    total.twins += p.twins;
  }
  return total;
}

inline std::pair<std::uint64_t, std::uint64_t> count_row_primes(
    std::uint64_t col_lo, std::uint64_t col_hi, const SieveConfig& cfg = {}) {
  RowCounts rc = count_rows(col_lo, col_hi, cfg);
  return {rc.row4, rc.row6};
}

inline std::uint64_t count_twin_primes(std::uint64_t col_lo, std::uint64_t col_hi,
                                       const SieveConfig& cfg = {}) {
  return count_rows(col_lo, col_hi, cfg).twins;
}

// One TwinPair per column, primality filled from the sieve. Materializes the
// whole range; counting functions cover ranges too large to list.
inline std::vector<TwinPair> twin_candidates(std::uint64_t col_lo, std::uint64_t col_hi,
                                             const SieveConfig& cfg = {}) {
  detail::check_columns(col_lo, col_hi);
  constexpr std::uint64_t kMaxListed = 10'000'000;
  if (col_hi - col_lo + 1 > kMaxListed) {
    throw std::out_of_range("column range too large to list; use count_twin_primes");
  }
  std::uint64_t num_hi = 6 * col_hi + 2;
  detail::check_range(num_hi, cfg);
  auto base = small_primes(static_cast<std::uint32_t>(isqrt(num_hi - 1)));
  std::vector<TwinPair> out;
  out.reserve(col_hi - col_lo + 1);
  std::uint64_t cols_per_seg = std::max<std::uint64_t>(1, cfg.segment_numbers / 6);
  for (std::uint64_t c = col_lo; c <= col_hi; c += cols_per_seg) {
    std::uint64_t c_end = std::min(col_hi, c + cols_per_seg - 1);
    PrimeSegment seg = sieve_segment(6 * c - 1, 6 * c_end + 2, base);
    for (std::uint64_t k = c; k <= c_end; ++k) {
      bool both = seg.test(6 * k - 1) && seg.test(6 * k + 1);
      out.push_back({k, 6 * k - 1, 6 * k + 1, both});
    }
  }
  return out;
}

}  // namespace twinsieve
