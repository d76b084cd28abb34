#pragma once

#include <twinsieve/sieve.hpp>  // run_chunked, resolve_threads

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace twinsieve {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// C(n, k) as an exact integer; 0 outside 0 <= k <= n.
inline BigInt binomial(std::uint64_t n, std::int64_t k) {
  if (k < 0 || static_cast<std::uint64_t>(k) > n) return 0;
  std::uint64_t kk = static_cast<std::uint64_t>(k);
  if (kk > n - kk) kk = n - kk;
  BigInt r = 1;
  for (std::uint64_t j = 1; j <= kk; ++j) {
    r *= n - kk + j;
    r /= j;  // exact at every step
  }
  return r;
}

struct PlacementConfig {
  std::uint64_t n = 0;   // positions per row
  std::uint64_t m1 = 0;  // units in row 1
  std::uint64_t m2 = 0;  // units in row 2
};

// Number of joint placements of m1 and m2 units in two length-n rows that
// share exactly s positions: C(n,m1) C(m1,s) C(n-m1,m2-s). Combinatorially
// impossible parameters give 0.
inline BigInt t_count(std::uint64_t n, std::uint64_t m1, std::uint64_t m2,
                      std::uint64_t s) {
  if (m1 > n || m2 > n) return 0;
  BigInt c1 = binomial(n, static_cast<std::int64_t>(m1));
  BigInt c2 = binomial(m1, static_cast<std::int64_t>(s));
  BigInt c3 = binomial(n - m1, static_cast<std::int64_t>(m2) - static_cast<std::int64_t>(s));
  return c1 * c2 * c3;
}

// sum_s T(s) == C(n,m1) C(n,m2), exactly.
inline bool identity_check(std::uint64_t n, std::uint64_t m1, std::uint64_t m2) {
  if (m1 > n || m2 > n) throw std::domain_error("unit counts cannot exceed row length");
  BigInt total = 0;
  std::uint64_t s_max = std::min(m1, m2);
  for (std::uint64_t s = 0; s <= s_max; ++s) total += t_count(n, m1, m2, s);
  return total == binomial(n, static_cast<std::int64_t>(m1)) *
                      binomial(n, static_cast<std::int64_t>(m2));
}

// Mean number of shared unit positions under uniform random placement:
// m1*m2/n, also derived from the definitional sum sum_s s*T(s) over all
// placements. The two routes are compared exactly before returning.
inline BigRational expected_overlap(std::uint64_t n, std::uint64_t m1, std::uint64_t m2) {
  if (n == 0) throw std::domain_error("row length must be >= 1");
  if (m1 > n || m2 > n) throw std::domain_error("unit counts cannot exceed row length");
  BigRational closed(BigInt(m1) * m2, BigInt(n));

  BigInt weighted = 0;
  std::uint64_t s_max = std::min(m1, m2);
  for (std::uint64_t s = 1; s <= s_max; ++s) weighted += s * t_count(n, m1, m2, s);
  BigInt total = binomial(n, static_cast<std::int64_t>(m1)) *
                 binomial(n, static_cast<std::int64_t>(m2));
  BigRational definitional(weighted, total);
  if (definitional != closed) {
    throw std::logic_error("definitional expectation disagrees with m1*m2/n");
  }
  return closed;
}

namespace detail {

struct SplitMix64 {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
};

inline std::uint64_t mix64(std::uint64_t x) {
  SplitMix64 s{x};
  return s.next();
}

// uniform in [0, n) by 128-bit multiply-shift
inline std::uint64_t bounded(std::uint64_t r, std::uint64_t n) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(r) * n) >> 64);
}

// m distinct positions uniform over [0, n): sparse partial Fisher-Yates.
inline std::vector<std::uint64_t> pick_positions(SplitMix64& rng, std::uint64_t n,
                                                 std::uint64_t m) {
  std::unordered_map<std::uint64_t, std::uint64_t> perm;
  auto value_at = [&](std::uint64_t idx) {
    auto it = perm.find(idx);
    return it == perm.end() ? idx : it->second;
  };
  std::vector<std::uint64_t> out(m);
  for (std::uint64_t j = 0; j < m; ++j) {
    std::uint64_t r = j + bounded(rng.next(), n - j);
    out[j] = value_at(r);
    perm[r] = value_at(j);
  }
  return out;
}

struct TrialSums {
  std::uint64_t count = 0;
  unsigned __int128 sq = 0;
};

}  // namespace detail

struct MonteCarloResult {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};

// Sample mean of the overlap count over `trials` uniformly random joint
// placements. Each trial is seeded from (seed, trial index), so results are
// identical for any thread count. `shift` rotates row 2 before counting.
inline MonteCarloResult monte_carlo_overlap(std::uint64_t n, std::uint64_t m1,
                                            std::uint64_t m2, std::uint64_t trials,
                                            std::uint64_t seed, std::uint64_t shift = 0,
                                            unsigned threads = 0) {
  if (n == 0) throw std::domain_error("row length must be >= 1");
  if (m1 > n || m2 > n) throw std::domain_error("unit counts cannot exceed row length");
  if (trials < 1) throw std::domain_error("at least one trial required");

  auto run = [&](std::uint64_t t_lo, std::uint64_t t_hi) {
    detail::TrialSums sums;
    std::unordered_set<std::uint64_t> row1;
    for (std::uint64_t t = t_lo; t < t_hi; ++t) {
      detail::SplitMix64 rng{detail::mix64(seed) ^ detail::mix64(t + 0x51ED5EEDull)};
      auto p1 = detail::pick_positions(rng, n, m1);
      auto p2 = detail::pick_positions(rng, n, m2);
      row1.clear();
      row1.insert(p1.begin(), p1.end());
      std::uint64_t overlap = 0;
      for (std::uint64_t p : p2) overlap += row1.count((p + shift) % n);
      sums.count += overlap;
      sums.sq += static_cast<unsigned __int128>(overlap) * overlap;
    }
    return sums;
  };

  std::uint64_t chunk = std::max<std::uint64_t>(1, trials / (resolve_threads(threads) * 8ull));
  auto parts = run_chunked<detail::TrialSums>(0, trials, chunk, threads, run);
  std::uint64_t count = 0;
  unsigned __int128 sq = 0;
  for (const auto& p : parts) {
    count += p.count;
    sq += p.sq;
  }

  MonteCarloResult r;
  r.trials = trials;
  r.seed = seed;
  r.mean = static_cast<double>(count) / static_cast<double>(trials);
  if (trials > 1) {
    double sum = static_cast<double>(count);
    double sum_sq = static_cast<double>(sq);
    double var = (sum_sq - sum * sum / static_cast<double>(trials)) /
                 static_cast<double>(trials - 1);
    if (var < 0) var = 0;
    r.std_error = std::sqrt(var / static_cast<double>(trials));
  }
  return r;
}

}  // namespace twinsieve
