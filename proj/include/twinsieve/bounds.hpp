#pragma once

#include <twinsieve/extreal.hpp>
#include <twinsieve/intervals.hpp>
#include <twinsieve/sieve.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace twinsieve {

struct BoundPair {
  std::uint64_t x = 0;
  ExtendedReal lower, upper;
};

namespace detail {

inline ExtendedReal ratio_x_over_lnx(std::uint64_t x) {
  BigFloat xb(x);
  return ExtendedReal::from_real(xb / log(xb));
}

inline void require_x_ge_2(std::uint64_t x) {
  if (x < 2) throw std::domain_error("bound formulas require x >= 2");
}

}  // namespace detail

// ln2 * x/ln x - 2  <=  pi(x)  <=  4 ln2 * x/ln x + log2 x, valid for x >= 2.
inline BoundPair pnt_bounds(std::uint64_t x) {
  detail::require_x_ge_2(x);
  BigFloat xb(x);
  BigFloat lx = log(xb);
  const BigFloat& l2 = detail::ln2_const();
  BoundPair b;
  b.x = x;
  b.lower = ExtendedReal::from_real(l2 * xb / lx - 2);
  b.upper = ExtendedReal::from_real(4 * l2 * xb / lx + lx / l2);
  return b;
}

// Asymptotic constant bounds c_lo, c_hi times x/ln x. Reported only: no
// validity range is attached to the constants.
inline BoundPair constant_bounds(std::uint64_t x, const BigFloat& c_lo,
                                 const BigFloat& c_hi) {
  detail::require_x_ge_2(x);
  BigFloat xb(x);
  BigFloat r = xb / log(xb);
  return {x, ExtendedReal::from_real(c_lo * r), ExtendedReal::from_real(c_hi * r)};
}

inline BoundPair chebyshev_bounds(std::uint64_t x) {
  return constant_bounds(x, BigFloat("0.89"), BigFloat("1.11"));
}

inline BoundPair sylvester_bounds(std::uint64_t x) {
  return constant_bounds(x, BigFloat("0.95"), BigFloat("1.05"));
}

namespace detail {

// Lower estimate for primes in rows 4 and 6 between column bounds
// (cols_lo, cols_hi), i.e. over the numbers (6*cols_lo - 1, 6*cols_hi + 1):
//   (ln2/2) * t_hi/ln t_hi - 1 - 2 ln2 * t_lo/ln t_lo - log2(t_lo)/2
// with t_hi = 6*cols_hi + 1 and t_lo = 6*cols_lo - 1.
inline ExtendedReal row_prime_kernel(const ExtendedReal& cols_lo,
                                     const ExtendedReal& cols_hi) {
  auto six = ExtendedReal::from_integer(6);
  auto one = ExtendedReal::one();
  auto two = ExtendedReal::from_integer(2);
  auto ln2x = ExtendedReal::from_real(ln2_const());

  auto t_hi = add(mul(six, cols_hi), one);
  auto t_lo = sub(mul(six, cols_lo), one);
  auto term_hi = div(mul(div(ln2x, two), t_hi), ln(t_hi));
  auto term_lo = mul(mul(two, ln2x), div(t_lo, ln(t_lo)));
  auto term_log = div(log2(t_lo), two);
  return sub(sub(sub(term_hi, one), term_lo), term_log);
}

}  // namespace detail

// Row-prime lower estimate at integer column bounds a, b (a >= 9, b >= 7a).
inline ExtendedReal row_prime_lower_estimate(std::uint64_t a, std::uint64_t b) {
  if (a < 9 || b < 7 * a) {
    throw std::domain_error("estimate requires a >= 9 and b >= 7a");
  }
  return detail::row_prime_kernel(ExtendedReal::from_integer(static_cast<long long>(a)),
                                  ExtendedReal::from_integer(static_cast<long long>(b)));
}

struct LemmaVerdict {
  int i = 0;
  ExtendedReal lhs, rhs, margin;
  bool holds = false;
};

// Row-prime estimate at the real boundaries e^((i-1)!), e^(i!) versus the
// undercount e^(i!)/i! - e^((i-1)!)/(i-1)!, for i >= 3.
inline LemmaVerdict lemma_sides(int i) {
  if (i < 3) throw std::domain_error("lemma instances start at i = 3");
  LemmaVerdict v;
  v.i = i;
  v.lhs = detail::row_prime_kernel(st(i - 1), st(i));
  v.rhs = sub(div(st(i), ExtendedReal::from_real(factorial_big(i))),
              div(st(i - 1), ExtendedReal::from_real(factorial_big(i - 1))));
  v.margin = sub(v.lhs, v.rhs);
  v.holds = compare(v.lhs, v.rhs) == std::strong_ordering::greater;
  return v;
}

// 2 e^(i!) / ln(6 e^(i!))  >  3 + 7 ln2 e^((i-1)!) / (i-1)!  — the reduced
// form of the inequality; evaluated from i = 3 although the reduction is
// claimed only for i > 5.
inline LemmaVerdict strengthened_inequality(int i) {
  if (i < 3) throw std::domain_error("strengthened form starts at i = 3");
  auto six = ExtendedReal::from_integer(6);
  auto ln2x = ExtendedReal::from_real(detail::ln2_const());
  LemmaVerdict v;
  v.i = i;
  v.lhs = div(mul(ExtendedReal::from_integer(2), st(i)), ln(mul(six, st(i))));
  v.rhs = add(ExtendedReal::from_integer(3),
              mul(mul(ExtendedReal::from_integer(7), ln2x),
                  div(st(i - 1), ExtendedReal::from_real(factorial_big(i - 1)))));
  v.margin = sub(v.lhs, v.rhs);
  v.holds = compare(v.lhs, v.rhs) == std::strong_ordering::greater;
  return v;
}

struct StepCheck {
  std::string name;
  ExtendedReal lhs, rhs;
  bool holds = false;
};

// The individual reduction steps between the full and the strengthened
// inequality, evaluated as stated. Checked numerically per i; the middle two
// only start holding around i = 6.
inline std::vector<StepCheck> derivation_steps(int i) {
  if (i < 3) throw std::domain_error("derivation steps start at i = 3");
  auto six = ExtendedReal::from_integer(6);
  auto one = ExtendedReal::one();
  auto two = ExtendedReal::from_integer(2);
  auto ln2x = ExtendedReal::from_real(detail::ln2_const());
  auto fac_i1 = ExtendedReal::from_real(factorial_big(i - 1));
  auto half_ln2 = div(ln2x, two);
  auto six_ei = mul(six, st(i));

  std::vector<StepCheck> steps;
  auto push = [&](std::string name, ExtendedReal lhs, ExtendedReal rhs, bool want_gt) {
    bool holds = want_gt ? compare(lhs, rhs) == std::strong_ordering::greater
                         : compare(lhs, rhs) != std::strong_ordering::less;
    steps.push_back({std::move(name), std::move(lhs), std::move(rhs), holds});
  };

  // (ln2/2) 6e^(i!)/ln(6e^(i!)+1)  >=  (ln2/2) 6e^(i!)/ln(6e^(i!)) - 1
  push("upper_log_shift",
       div(mul(half_ln2, six_ei), ln(add(six_ei, one))),
       sub(div(mul(half_ln2, six_ei), ln(six_ei)), one), false);
  // e^(i!)/ln(e^(i!))  <  1.009 e^(i!)/ln(6 e^(i!))   (stated with "<")
  push("density_ratio_1009",
       mul(ExtendedReal::from_real(BigFloat("1.009")), div(st(i), ln(six_ei))),
       div(st(i), ExtendedReal::from_real(factorial_big(i))), true);
  // ln2 e^((i-1)!)/(i-1)!  >  (i-1)!/(2 ln2)
  push("exp_dominates_factorial",
       mul(ln2x, div(st(i - 1), fac_i1)),
       div(fac_i1, mul(two, ln2x)), true);
  // e^((i-1)!) / ((i-1)!)^i * i  >  1
  push("power_excess",
       mul(div(st(i - 1), pow_int(fac_i1, i)), ExtendedReal::from_integer(i)),
       one, true);
  return steps;
}

// Difference between the estimate at the real boundaries and at the floored
// integer column bounds of interval i (3 or 4): the rounding effect alone.
inline ExtendedReal column_rounding_gap(int i) {
  if (i != 3 && i != 4) throw std::domain_error("rounding gap defined for i = 3, 4");
  IntervalSpec s = interval_spec(i);
  return sub(lemma_sides(i).lhs, row_prime_lower_estimate(s.col_lo, s.col_hi));
}

// Exhaustive scan of the x >= 2 bound pair against pi(x) over [x_lo, x_hi].
// Runs in machine floats and escalates to extended precision whenever a bound
// comes within 1e-6 of the count. Returns the number of violations.
inline std::uint64_t pnt_violations(std::uint64_t x_lo, std::uint64_t x_hi,
                                    const SieveConfig& cfg = {}) {
  if (x_lo < 2) x_lo = 2;
  if (x_hi < x_lo) return 0;
  const double l2 = 0.6931471805599453;
  std::uint64_t violations = 0;
  std::uint64_t pi = 0;
  for_each_segment(0, x_hi + 1, cfg, [&](const PrimeSegment& seg) {
    for (std::uint64_t n = seg.lo; n < seg.hi; ++n) {
      pi += seg.test(n);
      if (n < x_lo) continue;
      double x = static_cast<double>(n);
      double r = x / std::log(x);
      double lower = l2 * r - 2.0;
      double upper = 4.0 * l2 * r + std::log2(x);
      double p = static_cast<double>(pi);
      if (p - lower < 1e-6 || upper - p < 1e-6) {
        BoundPair b = pnt_bounds(n);
        auto pe = ExtendedReal::from_integer(static_cast<long long>(pi));
        if (compare(b.lower, pe) == std::strong_ordering::greater ||
            compare(pe, b.upper) == std::strong_ordering::greater) {
          ++violations;
        }
      }
    }
  });
  return violations;
}

}  // namespace twinsieve
