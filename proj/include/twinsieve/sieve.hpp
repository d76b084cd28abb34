#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

namespace twinsieve {

struct SieveConfig {
  std::uint64_t segment_numbers = std::uint64_t(1) << 22;  // numbers per segment
  std::uint64_t hard_limit = std::uint64_t(1) << 41;       // runaway-enumeration guard
  unsigned threads = 0;                                    // 0 = hardware concurrency
};

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

inline std::uint64_t isqrt(std::uint64_t n) {
  if (n == 0) return 0;
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Plain sieve for the base primes (limit stays <= sqrt(hard_limit) ~ 1.5e6).
inline std::vector<std::uint32_t> small_primes(std::uint32_t limit) {
  std::vector<std::uint32_t> out;
  if (limit < 2) return out;
  std::vector<char> mark(limit + 1, 1);
  mark[0] = mark[1] = 0;
  for (std::uint32_t i = 2; std::uint64_t(i) * i <= limit; ++i) {
    if (!mark[i]) continue;
    for (std::uint64_t j = std::uint64_t(i) * i; j <= limit; j += i) mark[j] = 0;
  }
  for (std::uint32_t i = 2; i <= limit; ++i) {
    if (mark[i]) out.push_back(i);
  }
  return out;
}

// Primality bitmap over [lo, hi): bit j set <=> lo + j is prime.
struct PrimeSegment {
  std::uint64_t lo = 0;  // inclusive
  std::uint64_t hi = 0;  // exclusive
  std::vector<std::uint64_t> bits;

  bool test(std::uint64_t n) const {
    std::uint64_t j = n - lo;
    return (bits[j >> 6] >> (j & 63)) & 1;
  }
};

inline PrimeSegment sieve_segment(std::uint64_t lo, std::uint64_t hi,
                                  const std::vector<std::uint32_t>& base) {
  PrimeSegment seg;
  seg.lo = lo;
  seg.hi = hi;
  std::uint64_t len = hi - lo;
  seg.bits.assign((len + 63) / 64, ~std::uint64_t(0));

  // evens in one masking pass (2 itself is restored below)
  std::uint64_t odd_keep = (lo & 1) ? 0x5555555555555555ull : 0xAAAAAAAAAAAAAAAAull;
  for (auto& w : seg.bits) w &= odd_keep;

  auto clear_bit = [&](std::uint64_t j) { seg.bits[j >> 6] &= ~(std::uint64_t(1) << (j & 63)); };
  if (lo == 0) {
    if (len > 0) clear_bit(0);
    if (len > 1) clear_bit(1);
  } else if (lo == 1) {
    clear_bit(0);
  }
  if (lo <= 2 && 2 < hi) seg.bits[(2 - lo) >> 6] |= std::uint64_t(1) << ((2 - lo) & 63);

  for (std::uint32_t p : base) {
    if (p == 2) continue;
    std::uint64_t pp = std::uint64_t(p) * p;
    if (pp >= hi) break;
    std::uint64_t start = std::max(pp, ((lo + p - 1) / p) * std::uint64_t(p));
    if ((start & 1) == 0) start += p;  // even multiples are already gone
    for (std::uint64_t m = start; m < hi; m += 2 * std::uint64_t(p)) clear_bit(m - lo);
  }

  std::uint64_t tail = len & 63;
  if (tail) seg.bits.back() &= (std::uint64_t(1) << tail) - 1;
  return seg;
}

inline std::uint64_t count_bits(const PrimeSegment& seg) {
  std::uint64_t c = 0;
  for (std::uint64_t w : seg.bits) c += std::popcount(w);
  return c;
}

namespace detail {

inline void check_range(std::uint64_t hi, const SieveConfig& cfg) {
  if (hi > cfg.hard_limit) {
    throw std::out_of_range("sieve range end exceeds the configured limit");
  }
}

}  // namespace detail

// Applies fn to consecutive segments covering [lo, hi), in ascending order.
template <typename Fn>
inline void for_each_segment(std::uint64_t lo, std::uint64_t hi, const SieveConfig& cfg,
                             Fn&& fn) {
  if (lo >= hi) return;
  detail::check_range(hi, cfg);
  auto base = small_primes(static_cast<std::uint32_t>(isqrt(hi - 1)));
  for (std::uint64_t s = lo; s < hi; s += cfg.segment_numbers) {
    std::uint64_t e = std::min(hi, s + cfg.segment_numbers);
    fn(sieve_segment(s, e, base));
  }
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t d = 5; d <= n / d; d += 6) {  // overflow-safe d*d <= n
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

// Primes p with lo <= p < hi, ascending.
inline std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi,
                                                  const SieveConfig& cfg = {}) {
  if (lo > hi) throw std::domain_error("primes_in_range requires lo <= hi");
  std::vector<std::uint64_t> out;
  for_each_segment(lo, hi, cfg, [&](const PrimeSegment& seg) {
    for (std::uint64_t n = seg.lo; n < seg.hi; ++n) {
      if (seg.test(n)) out.push_back(n);
    }
  });
  return out;
}

// pi(x): number of primes <= x.
inline std::uint64_t prime_count(std::uint64_t x, const SieveConfig& cfg = {}) {
  if (x < 2) return 0;
  std::uint64_t c = 0;
  for_each_segment(0, x + 1, cfg, [&](const PrimeSegment& seg) { c += count_bits(seg); });
  return c;
}

// Splits [lo, hi) into fixed-size chunks, runs `work` on a small pool and
// returns per-chunk results in chunk order, so any fold over them is
// independent of the thread count.
template <typename Result, typename Work>
inline std::vector<Result> run_chunked(std::uint64_t lo, std::uint64_t hi,
                                       std::uint64_t chunk, unsigned threads, Work&& work) {
  std::vector<Result> out;
  if (lo >= hi) return out;
  if (chunk == 0) chunk = 1;
  std::uint64_t n_chunks = (hi - lo + chunk - 1) / chunk;
  out.resize(n_chunks);
  unsigned t = std::min<std::uint64_t>(resolve_threads(threads), n_chunks);
  if (t <= 1) {
    for (std::uint64_t c = 0; c < n_chunks; ++c) {
      std::uint64_t clo = lo + c * chunk;
      out[c] = work(clo, std::min(hi, clo + chunk));
    }
    return out;
  }
  std::atomic<std::uint64_t> next{0};
  auto runner = [&] {
    for (;;) {
      std::uint64_t c = next.fetch_add(1, std::memory_order_relaxed);
      if (c >= n_chunks) return;
      std::uint64_t clo = lo + c * chunk;
      out[c] = work(clo, std::min(hi, clo + chunk));
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(t);
  for (unsigned i = 0; i < t; ++i) pool.emplace_back(runner);
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace twinsieve
