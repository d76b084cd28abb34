#pragma once

#include <twinsieve/bounds.hpp>
#include <twinsieve/compare.hpp>
#include <twinsieve/intervals.hpp>
#include <twinsieve/matrix6.hpp>
#include <twinsieve/model.hpp>
#include <twinsieve/placement.hpp>

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace twinsieve {

using Json = nlohmann::ordered_json;

inline Json to_json(const IntervalSpec& s, int digits = kGuaranteedDigits) {
  Json j;
  j["i"] = s.i;
  if (s.exact) {
    j["col_lo"] = s.col_lo;
    j["col_hi"] = s.col_hi;
    j["num_lo"] = s.num_lo;
    j["num_hi"] = s.num_hi;
  } else {
    j["col_lo"] = s.col_lo_x.str(digits);
    j["col_hi"] = s.col_hi_x.str(digits);
    j["num_lo"] = s.num_lo_x.str(digits);
    j["num_hi"] = s.num_hi_x.str(digits);
  }
  j["exact"] = s.exact;
  if (s.floor_mismatch) j["floor_col_hi"] = s.floor_col_hi;
  return j;
}

inline Json to_json(const LemmaVerdict& v, int digits = kGuaranteedDigits) {
  Json j;
  j["i"] = v.i;
  j["lhs"] = v.lhs.str(digits);
  j["rhs"] = v.rhs.str(digits);
  j["holds"] = v.holds;
  j["margin"] = v.margin.str(digits);
  return j;
}

inline Json to_json(const StepCheck& s, int digits = kGuaranteedDigits) {
  Json j;
  j["name"] = s.name;
  j["lhs"] = s.lhs.str(digits);
  j["rhs"] = s.rhs.str(digits);
  j["holds"] = s.holds;
  return j;
}

inline Json to_json(const BoundPair& b, int digits = kGuaranteedDigits) {
  Json j;
  j["x"] = b.x;
  j["lower"] = b.lower.str(digits);
  j["upper"] = b.upper.str(digits);
  return j;
}

inline Json to_json(const ModelReport& m, int digits = kGuaranteedDigits) {
  Json j;
  j["i"] = m.i;
  j["density"] = m.density.str(digits);
  j["twin_prob"] = m.twin_prob.str(digits);
  j["expectation"] = m.expectation.str(digits);
  j["ratio_to_prev"] = m.ratio_to_prev ? Json(m.ratio_to_prev->str(digits)) : Json(nullptr);
  j["partial_sum"] = m.partial_sum.str(digits);
  return j;
}

inline Json to_json(const EmpiricalReport& e, int digits = kGuaranteedDigits) {
  Json j;
  j["i"] = e.i;
  j["col_lo"] = e.col_lo;
  j["col_hi"] = e.col_hi;
  j["truncated"] = e.truncated;
  j["row4_primes"] = e.row4_primes;
  j["row6_primes"] = e.row6_primes;
  j["twin_pairs"] = e.twin_pairs;
  j["eq2_lower"] = e.eq2_applicable ? Json(e.eq2_lower.str(digits)) : Json("inapplicable");
  j["model_expectation"] = e.model_expectation.str(digits);
  return j;
}

inline Json to_json(const ReportRow& r, int digits = kGuaranteedDigits) {
  Json j;
  j["model"] = to_json(r.model, digits);
  j["empirical"] = r.empirical ? to_json(*r.empirical, digits) : Json(nullptr);
  return j;
}

inline Json to_json(const TwinPair& p) {
  Json j;
  j["k"] = p.k;
  j["lo"] = p.lo;
  j["hi"] = p.hi;
  j["both_prime"] = p.both_prime;
  return j;
}

inline Json to_json(const MonteCarloResult& r) {
  Json j;
  j["mean"] = r.mean;
  j["std_error"] = r.std_error;
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  return j;
}

inline std::string compare_csv_header() {
  return "i,col_lo,col_hi,truncated,row4_primes,row6_primes,twin_pairs,"
         "eq2_lower,model_expectation,density,ratio_to_prev";
}

inline std::string compare_csv(const std::vector<ReportRow>& rows,
                               int digits = kGuaranteedDigits) {
  std::ostringstream out;
  out << compare_csv_header() << '\n';
  for (const ReportRow& r : rows) {
    out << r.model.i << ',';
    if (r.empirical) {
      const EmpiricalReport& e = *r.empirical;
      out << e.col_lo << ',' << e.col_hi << ',' << (e.truncated ? "true" : "false")
          << ',' << e.row4_primes << ',' << e.row6_primes << ',' << e.twin_pairs << ','
          << (e.eq2_applicable ? e.eq2_lower.str(digits) : "inapplicable") << ',';
    } else {
      out << ",,,,,,,";
    }
    out << r.model.expectation.str(digits) << ',' << r.model.density.str(digits) << ',';
    if (r.model.ratio_to_prev) out << r.model.ratio_to_prev->str(digits);
    out << '\n';
  }
  return out.str();
}

}  // namespace twinsieve
