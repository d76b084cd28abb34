#pragma once

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <cmath>
#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace twinsieve {

// Floating type used for log magnitudes. 100 decimal digits keep more than 60
// fractional digits even when the integer part of a log is as large as
// 20! ~ 2.4e18, and the 64-bit decimal exponent keeps intermediates like
// exp(-(n!)) representable during log-sum-exp steps.
using BigFloat = boost::multiprecision::number<
    boost::multiprecision::cpp_dec_float<100, long long>,
    boost::multiprecision::et_off>;

inline constexpr int kWorkingDigits = 60;     // internal working precision
inline constexpr int kGuaranteedDigits = 50;  // externally guaranteed digits
inline constexpr int kMinSurvivingDigits = 10;

// Thrown when a subtraction cancels so many leading digits that fewer than
// kMinSurvivingDigits of the working precision survive.
class precision_loss_error : public std::runtime_error {
 public:
  explicit precision_loss_error(int digits_lost)
      : std::runtime_error("cancellation lost " + std::to_string(digits_lost) +
                           " of " + std::to_string(kWorkingDigits) +
                           " working digits"),
        digits_lost_(digits_lost) {}
  int digits_lost() const noexcept { return digits_lost_; }

 private:
  int digits_lost_;
};

namespace detail {

inline const BigFloat& ln2_const() {
  static const BigFloat v = log(BigFloat(2));
  return v;
}

inline const BigFloat& ln10_const() {
  static const BigFloat v = log(BigFloat(10));
  return v;
}

// log(1+x) without cancellation near x = 0. For |x| >= 1e-40 the direct form
// still carries > 60 correct digits at 100-digit working precision; below
// that the truncated series is exact to well past working precision.
inline BigFloat log1p(const BigFloat& x) {
  static const BigFloat tiny("1e-40");
  if (abs(x) < tiny) {
    return x * (1 - x * (BigFloat(1) / 2 - x * (BigFloat(1) / 3 - x / 4)));
  }
  return log(1 + x);
}

// exp(x) - 1 without cancellation near x = 0.
inline BigFloat expm1(const BigFloat& x) {
  static const BigFloat tiny("1e-40");
  if (abs(x) < tiny) {
    return x * (1 + x * (BigFloat(1) / 2 + x * (BigFloat(1) / 6 + x / 24)));
  }
  return exp(x) - 1;
}

// Differences of log magnitudes below this leave the larger operand
// unchanged at working precision.
inline constexpr long long kNegligibleLogGap = -300;

// log(e^hi + e^lo) for hi >= lo.
inline BigFloat log_add(const BigFloat& hi, const BigFloat& lo) {
  BigFloat d = lo - hi;  // <= 0
  if (d < kNegligibleLogGap) return hi;
  return hi + log1p(exp(d));
}

struct LogSub {
  BigFloat value;   // log(e^hi - e^lo)
  int digits_lost;  // leading decimal digits cancelled
};

// log(e^hi - e^lo) for hi > lo strictly.
inline LogSub log_sub(const BigFloat& hi, const BigFloat& lo) {
  BigFloat d = lo - hi;  // < 0
  if (d < kNegligibleLogGap) return {hi, 0};
  BigFloat m = -expm1(d);  // in (0, 1)
  int lost = 0;
  if (m < 1) {
    lost = static_cast<int>(floor(-log10(m)).convert_to<long long>());
    if (lost < 0) lost = 0;
  }
  if (kWorkingDigits - lost < kMinSurvivingDigits) {
    throw precision_loss_error(lost);
  }
  return {hi + log(m), lost};
}

}  // namespace detail

// Signed real number stored as sign plus high-precision natural log of the
// magnitude. Holds quantities like e^(n!) that overflow machine floats for
// n >= 6. Values are immutable once constructed.
class ExtendedReal {
 public:
  ExtendedReal() : sign_(0) {}

  static ExtendedReal from_log(int sign, const BigFloat& log_mag) {
    if (sign < -1 || sign > 1) throw std::domain_error("sign must be -1, 0 or +1");
    if (sign == 0) return ExtendedReal();
    if (isnan(log_mag) || isinf(log_mag)) {
      throw std::domain_error("log magnitude must be finite");
    }
    return ExtendedReal(sign, log_mag);
  }

  static ExtendedReal from_real(const BigFloat& v) {
    if (isnan(v) || isinf(v)) throw std::domain_error("value must be finite");
    if (v == 0) return ExtendedReal();
    return ExtendedReal(v > 0 ? 1 : -1, log(abs(v)));
  }

  static ExtendedReal from_float(double x) { return from_real(BigFloat(x)); }

  static ExtendedReal from_integer(long long n) { return from_real(BigFloat(n)); }

  // mantissa * 10^exp10
  static ExtendedReal from_decimal(double mantissa, long long exp10) {
    if (std::isnan(mantissa) || std::isinf(mantissa)) {
      throw std::domain_error("mantissa must be finite");
    }
    if (mantissa == 0) return ExtendedReal();
    int s = mantissa > 0 ? 1 : -1;
    BigFloat lm = log(BigFloat(s > 0 ? mantissa : -mantissa)) +
                  BigFloat(exp10) * detail::ln10_const();
    return ExtendedReal(s, lm);
  }

  static ExtendedReal zero() { return ExtendedReal(); }
  static ExtendedReal one() { return ExtendedReal(1, BigFloat(0)); }

  int sign() const noexcept { return sign_; }
  bool is_zero() const noexcept { return sign_ == 0; }

  // ln|x|; only meaningful when sign() != 0.
  const BigFloat& log_mag() const noexcept { return log_mag_; }

  double to_float() const {
    if (sign_ == 0) return 0.0;
    if (log_mag_ > 710) return sign_ > 0 ? HUGE_VAL : -HUGE_VAL;
    if (log_mag_ < -745) return 0.0;
    double m = exp(log_mag_).convert_to<double>();
    return sign_ > 0 ? m : -m;
  }

  // "±d.ddd…e±EEE" with `digits` significant digits. Throws out_of_range when
  // the decimal exponent exceeds what a decimal string can sensibly carry;
  // use to_log_string (or str) for such magnitudes.
  std::string to_decimal_string(int digits = kGuaranteedDigits) const;

  // "exp(±L)" (with a leading '-' for negative values): the log magnitude
  // itself in decimal, exact for integer logs.
  std::string to_log_string(int digits = kGuaranteedDigits) const;

  // Decimal form when practical, log form beyond that.
  std::string str(int digits = kGuaranteedDigits) const {
    if (sign_ == 0) return "0";
    if (decimal_exponent_practical()) return to_decimal_string(digits);
    return to_log_string(digits);
  }

 private:
  ExtendedReal(int sign, BigFloat log_mag) : sign_(sign), log_mag_(std::move(log_mag)) {}

  bool decimal_exponent_practical() const {
    static const BigFloat cap = BigFloat("1e15") * detail::ln10_const();
    return abs(log_mag_) < cap;
  }

  int sign_;
  BigFloat log_mag_{};
};

namespace detail {

inline void check_digits(int digits) {
  if (digits < 1 || digits > 90) {
    throw std::domain_error("digit count must be in [1, 90]");
  }
}

inline std::string format_mantissa(const BigFloat& mant, int digits) {
  return mant.str(digits - 1, std::ios_base::fixed);
}

}  // namespace detail

inline std::string ExtendedReal::to_decimal_string(int digits) const {
  detail::check_digits(digits);
  if (sign_ == 0) return "0";
  if (!decimal_exponent_practical()) {
    throw std::out_of_range("decimal exponent too large; use log form");
  }
  const BigFloat& l10 = detail::ln10_const();
  long long e10 = floor(log_mag_ / l10).convert_to<long long>();
  BigFloat mant = exp(log_mag_ - BigFloat(e10) * l10);
  std::string ms = detail::format_mantissa(mant, digits);
  if (ms.size() >= 2 && ms[0] == '1' && ms[1] == '0') {
    // rounded up to 10.00…: renormalize
    ++e10;
    mant = exp(log_mag_ - BigFloat(e10) * l10);
    ms = detail::format_mantissa(mant, digits);
  } else if (ms[0] == '0') {
    // rounding pushed the mantissa just below 1: renormalize down
    --e10;
    mant = exp(log_mag_ - BigFloat(e10) * l10);
    ms = detail::format_mantissa(mant, digits);
  }
  std::string out;
  out += sign_ > 0 ? '+' : '-';
  out += ms;
  out += 'e';
  out += e10 < 0 ? '-' : '+';
  long long ae = e10 < 0 ? -e10 : e10;
  std::string es = std::to_string(ae);
  if (es.size() < 2) es.insert(es.begin(), '0');
  out += es;
  return out;
}

inline std::string ExtendedReal::to_log_string(int digits) const {
  detail::check_digits(digits);
  if (sign_ == 0) return "0";
  std::string ls = log_mag_.str(digits, std::ios_base::fixed);
  // trim trailing fraction zeros
  if (ls.find('.') != std::string::npos) {
    while (!ls.empty() && ls.back() == '0') ls.pop_back();
    if (!ls.empty() && ls.back() == '.') ls.pop_back();
  }
  std::string out;
  if (sign_ < 0) out += '-';
  out += "exp(";
  if (!ls.empty() && ls[0] != '-') out += '+';
  out += ls;
  out += ')';
  return out;
}

struct SumResult {
  ExtendedReal value;
  int digits_lost = 0;  // leading digits cancelled (0 when magnitudes added)
};

namespace detail {

// Shared magnitude combiner: sign_a * e^la  +  sign_b * e^lb.
inline SumResult signed_sum(int sign_a, const BigFloat& la, int sign_b,
                            const BigFloat& lb) {
  if (sign_a == 0 && sign_b == 0) return {ExtendedReal::zero(), 0};
  if (sign_a == 0) return {ExtendedReal::from_log(sign_b, lb), 0};
  if (sign_b == 0) return {ExtendedReal::from_log(sign_a, la), 0};
  if (sign_a == sign_b) {
    BigFloat l = la >= lb ? log_add(la, lb) : log_add(lb, la);
    return {ExtendedReal::from_log(sign_a, l), 0};
  }
  // opposite signs: subtract the smaller magnitude from the larger
  if (la == lb) return {ExtendedReal::zero(), 0};
  if (la > lb) {
    LogSub r = log_sub(la, lb);
    return {ExtendedReal::from_log(sign_a, r.value), r.digits_lost};
  }
  LogSub r = log_sub(lb, la);
  return {ExtendedReal::from_log(sign_b, r.value), r.digits_lost};
}

}  // namespace detail

inline SumResult add_reporting(const ExtendedReal& a, const ExtendedReal& b) {
  return detail::signed_sum(a.sign(), a.log_mag(), b.sign(), b.log_mag());
}

inline SumResult sub_reporting(const ExtendedReal& a, const ExtendedReal& b) {
  return detail::signed_sum(a.sign(), a.log_mag(), -b.sign(), b.log_mag());
}

inline ExtendedReal add(const ExtendedReal& a, const ExtendedReal& b) {
  return add_reporting(a, b).value;
}

inline ExtendedReal sub(const ExtendedReal& a, const ExtendedReal& b) {
  return sub_reporting(a, b).value;
}

inline ExtendedReal mul(const ExtendedReal& a, const ExtendedReal& b) {
  if (a.sign() == 0 || b.sign() == 0) return ExtendedReal::zero();
  return ExtendedReal::from_log(a.sign() * b.sign(), a.log_mag() + b.log_mag());
}

inline ExtendedReal div(const ExtendedReal& a, const ExtendedReal& b) {
  if (b.sign() == 0) throw std::domain_error("division by zero");
  if (a.sign() == 0) return ExtendedReal::zero();
  return ExtendedReal::from_log(a.sign() * b.sign(), a.log_mag() - b.log_mag());
}

inline ExtendedReal pow_int(const ExtendedReal& a, long long n) {
  if (n == 0) return ExtendedReal::one();
  if (a.sign() == 0) {
    if (n < 0) throw std::domain_error("zero to a negative power");
    return ExtendedReal::zero();
  }
  int s = (a.sign() < 0 && (n & 1)) ? -1 : 1;
  return ExtendedReal::from_log(s, a.log_mag() * BigFloat(n));
}

inline std::strong_ordering compare(const ExtendedReal& a, const ExtendedReal& b) {
  if (a.sign() != b.sign()) {
    return a.sign() < b.sign() ? std::strong_ordering::less
                               : std::strong_ordering::greater;
  }
  if (a.sign() == 0) return std::strong_ordering::equal;
  if (a.log_mag() == b.log_mag()) return std::strong_ordering::equal;
  bool mag_less = a.log_mag() < b.log_mag();
  if (a.sign() > 0) {
    return mag_less ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return mag_less ? std::strong_ordering::greater : std::strong_ordering::less;
}

// Natural log of a positive value, returned as a first-class value.
inline ExtendedReal ln(const ExtendedReal& a) {
  if (a.sign() != 1) throw std::domain_error("ln requires a positive value");
  return ExtendedReal::from_real(a.log_mag());
}

inline ExtendedReal log2(const ExtendedReal& a) {
  if (a.sign() != 1) throw std::domain_error("log2 requires a positive value");
  return ExtendedReal::from_real(a.log_mag() / detail::ln2_const());
}

inline ExtendedReal operator-(const ExtendedReal& a) {
  if (a.sign() == 0) return a;
  return ExtendedReal::from_log(-a.sign(), a.log_mag());
}

inline ExtendedReal operator+(const ExtendedReal& a, const ExtendedReal& b) { return add(a, b); }
inline ExtendedReal operator-(const ExtendedReal& a, const ExtendedReal& b) { return sub(a, b); }
inline ExtendedReal operator*(const ExtendedReal& a, const ExtendedReal& b) { return mul(a, b); }
inline ExtendedReal operator/(const ExtendedReal& a, const ExtendedReal& b) { return div(a, b); }

inline bool operator==(const ExtendedReal& a, const ExtendedReal& b) {
  return compare(a, b) == std::strong_ordering::equal;
}
inline bool operator<(const ExtendedReal& a, const ExtendedReal& b) {
  return compare(a, b) == std::strong_ordering::less;
}
inline bool operator>(const ExtendedReal& a, const ExtendedReal& b) {
  return compare(a, b) == std::strong_ordering::greater;
}
inline bool operator<=(const ExtendedReal& a, const ExtendedReal& b) { return !(a > b); }
inline bool operator>=(const ExtendedReal& a, const ExtendedReal& b) { return !(a < b); }

inline std::ostream& operator<<(std::ostream& os, const ExtendedReal& v) {
  return os << v.str(20);
}

}  // namespace twinsieve
