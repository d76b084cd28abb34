#pragma once

#include <twinsieve/extreal.hpp>
#include <twinsieve/intervals.hpp>

#include <optional>
#include <stdexcept>
#include <vector>

namespace twinsieve {

// Deliberately low estimate of the primes per simple row in interval i:
// e^(i!)/i! - e^((i-1)!)/(i-1)!.
inline ExtendedReal undercount(int i) {
  if (i < 3) throw std::domain_error("model quantities start at i = 3");
  return sub(div(st(i), ExtendedReal::from_real(factorial_big(i))),
             div(st(i - 1), ExtendedReal::from_real(factorial_big(i - 1))));
}

// Probability that a row-4 or row-6 cell of interval i holds a prime:
// undercount / column count.
inline ExtendedReal density(int i) {
  return div(undercount(i), columns_in(i));
}

// Both rows prime at the same column, assuming independent rows: density^2.
inline ExtendedReal twin_probability(int i) {
  auto d = density(i);
  return mul(d, d);
}

// Expected twin columns in interval i: density^2 * columns = undercount^2 / columns.
inline ExtendedReal expectation(int i) {
  auto u = undercount(i);
  return div(mul(u, u), columns_in(i));
}

// Sum of the expectations for i = 3..n.
inline ExtendedReal partial_sum(int n) {
  if (n < 3) throw std::domain_error("partial sums start at n = 3");
  ExtendedReal s = ExtendedReal::zero();
  for (int i = 3; i <= n; ++i) s = add(s, expectation(i));
  return s;
}

struct RatioPair {
  ExtendedReal direct;       // expectation(n) / expectation(n-1)
  ExtendedReal closed_form;  // the same ratio after cancelling the factorials
};

// Successive-expectation ratio, computed both ways. The closed form is
//   (e^(n!) - n e^((n-1)!))^2 / (n^2 (e^(n!) - e^((n-1)!)))
//     * (e^((n-1)!) - e^((n-2)!)) / (e^((n-1)!) - (n-1) e^((n-2)!))^2.
inline RatioPair dalembert_ratio_both(int n) {
  if (n < 4) throw std::domain_error("ratios start at n = 4");
  RatioPair r;
  r.direct = div(expectation(n), expectation(n - 1));

  auto nn = ExtendedReal::from_integer(n);
  auto n1 = ExtendedReal::from_integer(n - 1);
  auto a = sub(st(n), mul(nn, st(n - 1)));
  auto b = sub(st(n - 1), mul(n1, st(n - 2)));
  auto cols_n = sub(st(n), st(n - 1));
  auto cols_n1 = sub(st(n - 1), st(n - 2));
  r.closed_form = mul(div(mul(a, a), mul(mul(nn, nn), cols_n)),
                      div(cols_n1, mul(b, b)));
  return r;
}

// Decimal digits to which two nonzero values of the same sign agree.
// Returns at least `cap` when they are indistinguishable at working precision.
inline int agreement_digits(const ExtendedReal& a, const ExtendedReal& b, int cap = 99) {
  if (a.sign() != b.sign() || a.sign() == 0) return 0;
  BigFloat d = a.log_mag() - b.log_mag();  // ln(a/b), tiny when they agree
  if (d == 0) return cap;
  BigFloat digits = -log10(abs(d));
  if (digits >= cap) return cap;
  if (digits <= 0) return 0;
  return static_cast<int>(floor(digits).convert_to<long long>());
}

// Ratio with the two routes cross-checked to 40 significant digits.
inline ExtendedReal dalembert_ratio(int n) {
  RatioPair r = dalembert_ratio_both(n);
  if (agreement_digits(r.direct, r.closed_form) < 40) {
    throw std::logic_error("ratio routes disagree beyond tolerance");
  }
  return r.direct;
}

struct ModelReport {
  int i = 0;
  ExtendedReal density;
  ExtendedReal twin_prob;
  ExtendedReal expectation;
  std::optional<ExtendedReal> ratio_to_prev;  // from i = 4 on
  ExtendedReal partial_sum;
};

inline ModelReport model_report(int i) {
  ModelReport m;
  m.i = i;
  m.density = density(i);
  m.twin_prob = twin_probability(i);
  m.expectation = expectation(i);
  if (i >= 4) m.ratio_to_prev = dalembert_ratio(i);
  m.partial_sum = partial_sum(i);
  return m;
}

inline std::vector<ModelReport> model_table(int i_max) {
  if (i_max < 3) throw std::domain_error("model table starts at i = 3");
  std::vector<ModelReport> rows;
  rows.reserve(static_cast<std::size_t>(i_max - 2));
  for (int i = 3; i <= i_max; ++i) rows.push_back(model_report(i));
  return rows;
}

}  // namespace twinsieve
