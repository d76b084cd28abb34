#pragma once

// Brute-force oracles used only by tests. Deliberately naive and independent
// of the library implementations they check.

#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::uint64_t pi(std::uint64_t x) {
  std::uint64_t c = 0;
  for (std::uint64_t n = 2; n <= x; ++n) {
    if (is_prime(n)) ++c;
  }
  return c;
}

inline std::vector<std::uint64_t> primes(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = lo; n < hi; ++n) {
    if (is_prime(n)) out.push_back(n);
  }
  return out;
}

// Exhaustive enumeration of all joint unit placements in two rows of length
// n (n <= 20): every mask pair with popcounts m1 and m2, overlap = popcount
// of the AND. Ground truth for the placement combinatorics.
struct OverlapEnumeration {
  unsigned long long total = 0;        // number of joint placements
  unsigned long long weighted = 0;     // sum of overlaps over all placements
  std::map<unsigned, unsigned long long> by_overlap;  // s -> count
};

inline OverlapEnumeration enumerate_overlaps(unsigned n, unsigned m1, unsigned m2) {
  std::vector<std::uint32_t> masks1, masks2;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    unsigned pc = static_cast<unsigned>(__builtin_popcount(m));
    if (pc == m1) masks1.push_back(m);
    if (pc == m2) masks2.push_back(m);
  }
  OverlapEnumeration r;
  for (std::uint32_t a : masks1) {
    for (std::uint32_t b : masks2) {
      unsigned s = static_cast<unsigned>(__builtin_popcount(a & b));
      ++r.total;
      r.weighted += s;
      ++r.by_overlap[s];
    }
  }
  return r;
}

}  // namespace oracle
