#pragma once

#include <twinsieve/extreal.hpp>

#include <cstdint>
#include <stdexcept>

namespace twinsieve {

// n!, exact in the working float type for n <= 69.
inline BigFloat factorial_big(int n) {
  if (n < 0) throw std::domain_error("factorial of a negative number");
  if (n > 69) throw std::domain_error("factorial exceeds exact working precision");
  BigFloat r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

// Interval boundary value: 1 for n = 0, e^(n!) for n >= 1, held exactly in
// log form (sign +1, log magnitude n!).
inline ExtendedReal st(int n) {
  if (n < 0) throw std::domain_error("boundary index must be >= 0");
  if (n == 0) return ExtendedReal::one();
  return ExtendedReal::from_log(1, factorial_big(n));
}

// Column partition induced by the boundaries: interval i covers columns
// (boundary(i-1), boundary(i)]. Endpoints for i >= 3 are floor(e^(i!)); the
// first two are the fixed table values 3 and 8 (floor would give 2 and 7,
// which the floor_mismatch flag records).
inline std::uint64_t column_boundary(int i) {
  switch (i) {
    case 1:
      return 3;
    case 2:
      return 8;
    case 3:
    case 4: {
      static const std::uint64_t b3 =
          floor(exp(BigFloat(6))).convert_to<std::uint64_t>();
      static const std::uint64_t b4 =
          floor(exp(BigFloat(24))).convert_to<std::uint64_t>();
      return i == 3 ? b3 : b4;
    }
    default:
      throw std::domain_error("integer column boundaries exist only for i in 1..4");
  }
}

struct IntervalSpec {
  int i = 0;
  bool exact = false;  // integer bounds materialized (i <= 4)
  std::uint64_t col_lo = 0, col_hi = 0;  // inclusive columns, valid when exact
  std::uint64_t num_lo = 0, num_hi = 0;  // 6*col_lo - 4 .. 6*col_hi + 1
  ExtendedReal col_lo_x, col_hi_x, num_lo_x, num_hi_x;  // always filled
  bool floor_mismatch = false;   // tabulated endpoint differs from floor(e^(i!))
  std::uint64_t floor_col_hi = 0;  // the floor value when it differs
};

inline IntervalSpec interval_spec(int i) {
  if (i < 1) throw std::domain_error("interval index must be >= 1");
  IntervalSpec s;
  s.i = i;
  s.exact = i <= 4;
  auto six = ExtendedReal::from_integer(6);
  if (s.exact) {
    s.col_lo = i == 1 ? 1 : column_boundary(i - 1) + 1;
    s.col_hi = column_boundary(i);
    s.num_lo = 6 * s.col_lo - 4;
    s.num_hi = 6 * s.col_hi + 1;
    s.col_lo_x = ExtendedReal::from_integer(static_cast<long long>(s.col_lo));
    s.col_hi_x = ExtendedReal::from_integer(static_cast<long long>(s.col_hi));
    if (i <= 2) {
      std::uint64_t fl = i == 1 ? 2 : 7;  // floor(e), floor(e^2)
      s.floor_mismatch = true;
      s.floor_col_hi = fl;
    }
  } else {
    s.col_lo_x = i == 5 ? ExtendedReal::from_integer(
                              static_cast<long long>(column_boundary(4) + 1))
                        : add(st(i - 1), ExtendedReal::one());
    s.col_hi_x = st(i);
  }
  s.num_lo_x = sub(mul(six, s.col_lo_x), ExtendedReal::from_integer(4));
  s.num_hi_x = add(mul(six, s.col_hi_x), ExtendedReal::one());
  return s;
}

// e^(i!) - e^((i-1)!): the column count of interval i used by the
// densities and expectations (real-valued, not the floored table bounds).
inline ExtendedReal columns_in(int i) {
  if (i < 2) throw std::domain_error("columns_in requires i >= 2");
  return sub(st(i), st(i - 1));
}

}  // namespace twinsieve
