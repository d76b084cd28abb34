// Command-line front end: every subsystem behind one subcommand each, with
// table, JSON and CSV output. Exit codes: 0 success, 1 verification failure,
// 2 usage error.

#include <CLI11.hpp>

#include <twinsieve/acceptance.hpp>
#include <twinsieve/bounds.hpp>
#include <twinsieve/compare.hpp>
#include <twinsieve/intervals.hpp>
#include <twinsieve/matrix6.hpp>
#include <twinsieve/model.hpp>
#include <twinsieve/placement.hpp>
#include <twinsieve/reports.hpp>
#include <twinsieve/sieve.hpp>

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

using namespace twinsieve;

namespace {

constexpr std::uint64_t kHardCap = std::uint64_t(1) << 41;

// accepts plain integers and scientific forms like 2e9
std::uint64_t parse_limit(const std::string& s) {
  try {
    if (s.find_first_of("eE.") != std::string::npos) {
      long double v = std::stold(s);
      if (v < 0 || v > static_cast<long double>(kHardCap)) {
        throw std::out_of_range("limit");
      }
      return static_cast<std::uint64_t>(v);
    }
    unsigned long long v = std::stoull(s);
    if (v > kHardCap) throw std::out_of_range("limit");
    return v;
  } catch (const std::exception&) {
    throw CLI::ValidationError("--limit", "expected a number between 0 and 2^41");
  }
}

struct Options {
  std::string format = "table";
  std::string limit_str = "2000000000";
  int digits = 50;
  std::uint64_t seed = 1;
  unsigned threads = 0;

  std::uint64_t limit() const { return parse_limit(limit_str); }
  SieveConfig sieve_config() const {
    SieveConfig cfg;
    cfg.threads = threads;
    cfg.hard_limit = std::min(kHardCap, std::max<std::uint64_t>(limit(), 2));
    return cfg;
  }
};

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

int run_sieve(const Options& opt, std::uint64_t lo, std::uint64_t hi, bool count_only) {
  auto cfg = opt.sieve_config();
  if (count_only) {
    std::uint64_t count = 0;
    for_each_segment(lo, hi, cfg,
                     [&](const PrimeSegment& seg) { count += count_bits(seg); });
    if (opt.format == "json") {
      Json j;
      j["lo"] = lo;
      j["hi"] = hi;
      j["count"] = count;
      emit(j);
    } else if (opt.format == "csv") {
      std::cout << "lo,hi,count\n" << lo << ',' << hi << ',' << count << '\n';
    } else {
      std::cout << "primes in [" << lo << ", " << hi << "): " << count << '\n';
    }
    return 0;
  }
  auto primes = primes_in_range(lo, hi, cfg);
  if (opt.format == "json") {
    Json j;
    j["lo"] = lo;
    j["hi"] = hi;
    j["count"] = primes.size();
    j["primes"] = primes;
    emit(j);
  } else if (opt.format == "csv") {
    std::cout << "p\n";
    for (auto p : primes) std::cout << p << '\n';
  } else {
    for (std::size_t i = 0; i < primes.size(); ++i) {
      std::cout << primes[i] << ((i + 1) % 10 == 0 ? '\n' : ' ');
    }
    if (primes.size() % 10) std::cout << '\n';
    std::cout << "count: " << primes.size() << '\n';
  }
  return 0;
}

int run_twins(const Options& opt, std::uint64_t col_lo, std::uint64_t col_hi,
              bool count_only) {
  auto cfg = opt.sieve_config();
  RowCounts rc = count_rows(col_lo, col_hi, cfg);
  if (count_only) {
    if (opt.format == "json") {
      Json j;
      j["col_lo"] = col_lo;
      j["col_hi"] = col_hi;
      j["twin_count"] = rc.twins;
      j["row4_primes"] = rc.row4;
      j["row6_primes"] = rc.row6;
      emit(j);
    } else if (opt.format == "csv") {
      std::cout << "col_lo,col_hi,twin_count,row4_primes,row6_primes\n"
                << col_lo << ',' << col_hi << ',' << rc.twins << ',' << rc.row4 << ','
                << rc.row6 << '\n';
    } else {
      std::cout << "columns [" << col_lo << ", " << col_hi << "]: " << rc.twins
                << " twin pairs, " << rc.row4 << " row-4 primes, " << rc.row6
                << " row-6 primes\n";
    }
    return 0;
  }
  auto pairs = twin_candidates(col_lo, col_hi, cfg);
  if (opt.format == "json") {
    Json j;
    j["col_lo"] = col_lo;
    j["col_hi"] = col_hi;
    j["twin_count"] = rc.twins;
    j["row4_primes"] = rc.row4;
    j["row6_primes"] = rc.row6;
    Json arr = Json::array();
    for (const auto& p : pairs) arr.push_back(to_json(p));
    j["pairs"] = arr;
    emit(j);
  } else if (opt.format == "csv") {
    std::cout << "k,lo,hi,both_prime\n";
    for (const auto& p : pairs) {
      std::cout << p.k << ',' << p.lo << ',' << p.hi << ','
                << (p.both_prime ? "true" : "false") << '\n';
    }
  } else {
    for (const auto& p : pairs) {
      std::cout << "column " << p.k << ": (" << p.lo << ", " << p.hi << ") "
                << (p.both_prime ? "twin primes" : "-") << '\n';
    }
    std::cout << "twin pairs: " << rc.twins << '\n';
  }
  return 0;
}

int run_intervals(const Options& opt, int i_max) {
  std::vector<IntervalSpec> specs;
  for (int i = 1; i <= i_max; ++i) specs.push_back(interval_spec(i));
  if (opt.format == "json") {
    Json arr = Json::array();
    for (const auto& s : specs) arr.push_back(to_json(s, opt.digits));
    emit(arr);
  } else if (opt.format == "csv") {
    std::cout << "i,col_lo,col_hi,num_lo,num_hi,exact,floor_col_hi\n";
    for (const auto& s : specs) {
      std::cout << s.i << ',';
      if (s.exact) {
        std::cout << s.col_lo << ',' << s.col_hi << ',' << s.num_lo << ',' << s.num_hi;
      } else {
        std::cout << s.col_lo_x.str(opt.digits) << ',' << s.col_hi_x.str(opt.digits)
                  << ',' << s.num_lo_x.str(opt.digits) << ',' << s.num_hi_x.str(opt.digits);
      }
      std::cout << ',' << (s.exact ? "true" : "false") << ',';
      if (s.floor_mismatch) std::cout << s.floor_col_hi;
      std::cout << '\n';
    }
  } else {
    for (const auto& s : specs) {
      std::cout << "interval " << s.i << ": columns [";
      if (s.exact) {
        std::cout << s.col_lo << ", " << s.col_hi << "], numbers [" << s.num_lo << ", "
                  << s.num_hi << "]";
      } else {
        std::cout << s.col_lo_x.str(6) << ", " << s.col_hi_x.str(6) << "], numbers ["
                  << s.num_lo_x.str(6) << ", " << s.num_hi_x.str(6) << "] (log form)";
      }
      if (s.floor_mismatch) {
        std::cout << "  [table endpoint; floor(e^" << s.i << "!) = " << s.floor_col_hi
                  << "]";
      }
      std::cout << '\n';
    }
  }
  return 0;
}

int run_bounds_x(const Options& opt, std::uint64_t x) {
  BoundPair pnt = pnt_bounds(x);
  BoundPair cheb = chebyshev_bounds(x);
  BoundPair syl = sylvester_bounds(x);
  bool have_pi = x <= opt.limit();
  std::uint64_t pi = have_pi ? prime_count(x, opt.sieve_config()) : 0;
  if (opt.format == "json") {
    Json j;
    j["x"] = x;
    j["pi"] = have_pi ? Json(pi) : Json(nullptr);
    j["pnt"] = to_json(pnt, opt.digits);
    j["chebyshev"] = to_json(cheb, opt.digits);
    j["sylvester"] = to_json(syl, opt.digits);
    emit(j);
  } else if (opt.format == "csv") {
    std::cout << "x,pi,pnt_lower,pnt_upper,chebyshev_lower,chebyshev_upper,"
                 "sylvester_lower,sylvester_upper\n"
              << x << ',';
    if (have_pi) std::cout << pi;
    std::cout << ',' << pnt.lower.str(opt.digits) << ',' << pnt.upper.str(opt.digits)
              << ',' << cheb.lower.str(opt.digits) << ',' << cheb.upper.str(opt.digits)
              << ',' << syl.lower.str(opt.digits) << ',' << syl.upper.str(opt.digits)
              << '\n';
  } else {
    std::cout << "x = " << x << '\n';
    if (have_pi) std::cout << "pi(x) = " << pi << '\n';
    std::cout << "x >= 2 bounds:  [" << pnt.lower.str(6) << ", " << pnt.upper.str(6)
              << "]\n"
              << "chebyshev:      [" << cheb.lower.str(6) << ", " << cheb.upper.str(6)
              << "]  (asymptotic, reported only)\n"
              << "sylvester:      [" << syl.lower.str(6) << ", " << syl.upper.str(6)
              << "]  (asymptotic, reported only)\n";
  }
  return 0;
}

int run_bounds_lemma(const Options& opt, int i) {
  LemmaVerdict v = lemma_sides(i);
  if (opt.format == "json") {
    emit(to_json(v, opt.digits));
  } else if (opt.format == "csv") {
    std::cout << "i,lhs,rhs,holds,margin\n"
              << v.i << ',' << v.lhs.str(opt.digits) << ',' << v.rhs.str(opt.digits)
              << ',' << (v.holds ? "true" : "false") << ',' << v.margin.str(opt.digits)
              << '\n';
  } else {
    std::cout << "i = " << v.i << ": " << v.lhs.str(6) << (v.holds ? " > " : " <= ")
              << v.rhs.str(6) << "  (margin " << v.margin.str(6) << ")\n";
    if (i == 3 || i == 4) {
      std::cout << "  estimate shifts by " << column_rounding_gap(i).str(6)
                << " when evaluated at the floored column bounds\n";
    }
  }
  return 0;
}

int run_bounds_strengthened(const Options& opt, int i) {
  LemmaVerdict v = strengthened_inequality(i);
  auto steps = derivation_steps(i);
  if (opt.format == "json") {
    Json j;
    j["verdict"] = to_json(v, opt.digits);
    Json arr = Json::array();
    for (const auto& s : steps) arr.push_back(to_json(s, opt.digits));
    j["steps"] = arr;
    emit(j);
  } else if (opt.format == "csv") {
    std::cout << "i,lhs,rhs,holds,margin\n"
              << v.i << ',' << v.lhs.str(opt.digits) << ',' << v.rhs.str(opt.digits)
              << ',' << (v.holds ? "true" : "false") << ',' << v.margin.str(opt.digits)
              << '\n';
  } else {
    std::cout << "i = " << v.i << ": " << v.lhs.str(6) << (v.holds ? " > " : " <= ")
              << v.rhs.str(6) << '\n';
    for (const auto& s : steps) {
      std::cout << "  " << s.name << ": " << (s.holds ? "holds" : "fails") << "  ("
                << s.lhs.str(6) << " vs " << s.rhs.str(6) << ")\n";
    }
  }
  return 0;
}

int run_model(const Options& opt, int i_max) {
  auto rows = model_table(i_max);
  if (opt.format == "json") {
    Json arr = Json::array();
    for (const auto& m : rows) arr.push_back(to_json(m, opt.digits));
    emit(arr);
  } else if (opt.format == "csv") {
    std::cout << "i,density,twin_prob,expectation,ratio_to_prev,partial_sum\n";
    for (const auto& m : rows) {
      std::cout << m.i << ',' << m.density.str(opt.digits) << ','
                << m.twin_prob.str(opt.digits) << ',' << m.expectation.str(opt.digits)
                << ',';
      if (m.ratio_to_prev) std::cout << m.ratio_to_prev->str(opt.digits);
      std::cout << ',' << m.partial_sum.str(opt.digits) << '\n';
    }
  } else {
    for (const auto& m : rows) {
      std::cout << "i = " << m.i << ": density " << m.density.str(6) << ", expectation "
                << m.expectation.str(6);
      if (m.ratio_to_prev) std::cout << ", ratio " << m.ratio_to_prev->str(6);
      std::cout << ", partial sum " << m.partial_sum.str(6) << '\n';
    }
  }
  return 0;
}

int run_placement(const Options& opt, std::uint64_t n, std::uint64_t m1,
                  std::uint64_t m2, std::uint64_t trials, std::uint64_t shift) {
  BigRational exact = expected_overlap(n, m1, m2);
  MonteCarloResult mc = monte_carlo_overlap(n, m1, m2, trials, opt.seed, shift,
                                            opt.threads);
  std::string exact_str = exact.str();
  if (opt.format == "json") {
    Json j;
    j["n"] = n;
    j["m1"] = m1;
    j["m2"] = m2;
    j["shift"] = shift;
    j["exact"] = exact_str;
    j["mc_mean"] = mc.mean;
    j["mc_stderr"] = mc.std_error;
    j["trials"] = mc.trials;
    j["seed"] = mc.seed;
    emit(j);
  } else if (opt.format == "csv") {
    std::cout << "n,m1,m2,shift,exact,mc_mean,mc_stderr,trials,seed\n"
              << n << ',' << m1 << ',' << m2 << ',' << shift << ',' << exact_str << ','
              << mc.mean << ',' << mc.std_error << ',' << mc.trials << ',' << mc.seed
              << '\n';
  } else {
    std::cout << "expected overlap m1*m2/n = " << exact_str << '\n'
              << "monte carlo: " << mc.mean << " +- " << mc.std_error << "  ("
              << mc.trials << " trials, seed " << mc.seed << ")\n";
  }
  return 0;
}

int run_compare(const Options& opt, int i_max) {
  auto rows = full_report(i_max, opt.limit(), opt.sieve_config());
  if (opt.format == "json") {
    Json arr = Json::array();
    for (const auto& r : rows) arr.push_back(to_json(r, opt.digits));
    emit(arr);
  } else if (opt.format == "csv") {
    std::cout << compare_csv(rows, opt.digits);
  } else {
    for (const auto& r : rows) {
      std::cout << "i = " << r.model.i << ": expectation "
                << r.model.expectation.str(6);
      if (r.empirical) {
        const auto& e = *r.empirical;
        std::cout << "; sieved columns [" << e.col_lo << ", " << e.col_hi << "]"
                  << (e.truncated ? " (truncated)" : "") << ": " << e.twin_pairs
                  << " twins, rows " << e.row4_primes << "/" << e.row6_primes
                  << ", lower estimate "
                  << (e.eq2_applicable ? e.eq2_lower.str(6) : "inapplicable");
      } else {
        std::cout << "; not enumerable (model only)";
      }
      std::cout << '\n';
    }
  }
  return 0;
}

int run_verify() {
  bool ok = true;
  for (int id = 1; id <= 8; ++id) {
    CheckResult r = run_criterion(id);
    std::printf("%s  (%.2fs)\n", format_check_line(r).c_str(), r.seconds);
    std::fflush(stdout);
    ok = ok && r.passed;
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"twin-prime heuristic verification toolkit"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->envname("TWINSIEVE_FORMAT");
  app.add_option("--limit", opt.limit_str,
                 "sieve ceiling (plain or scientific, max 2^41)")
      ->envname("TWINSIEVE_LIMIT");
  app.add_option("--digits", opt.digits, "significant digits in serialized values")
      ->check(CLI::Range(50, 90))
      ->envname("TWINSIEVE_DIGITS");
  app.add_option("--seed", opt.seed, "random seed for sampling")
      ->envname("TWINSIEVE_SEED");
  app.add_option("--threads", opt.threads, "worker threads (0 = all cores)")
      ->envname("TWINSIEVE_THREADS");

  std::uint64_t lo = 0, hi = 0, col_lo = 1, col_hi = 1;
  std::uint64_t pn = 0, pm1 = 0, pm2 = 0, ptrials = 0, pshift = 0;
  int i_max = 4;
  int lemma_i = 0, strengthened_i = 0;
  std::uint64_t bounds_x = 0;
  bool count_only = false;

  CLI::App* c_sieve = app.add_subcommand("sieve", "primes in [lo, hi)");
  c_sieve->fallthrough();
  c_sieve->add_option("lo", lo, "range start (inclusive)")->required();
  c_sieve->add_option("hi", hi, "range end (exclusive)")->required();
  c_sieve->add_flag("--count-only", count_only, "print the count only");

  CLI::App* c_twins = app.add_subcommand("twins", "twin pairs by matrix column");
  c_twins->fallthrough();
  c_twins->add_option("col_lo", col_lo, "first column")->required();
  c_twins->add_option("col_hi", col_hi, "last column")->required();
  c_twins->add_flag("--count-only", count_only, "print counts only");

  CLI::App* c_intervals = app.add_subcommand("intervals", "column partition table");
  c_intervals->fallthrough();
  c_intervals->add_option("i_max", i_max, "last interval index")->required();

  CLI::App* c_bounds = app.add_subcommand("bounds", "prime-count bounds and lemma checks");
  c_bounds->fallthrough();
  auto* opt_x = c_bounds->add_option("x", bounds_x, "evaluate the bound pairs at x");
  auto* opt_lemma = c_bounds->add_option("--lemma", lemma_i, "check the interval estimate at index i");
  auto* opt_str = c_bounds->add_option("--strengthened", strengthened_i,
                                       "check the reduced inequality at index i");
  opt_x->excludes(opt_lemma)->excludes(opt_str);
  opt_lemma->excludes(opt_str);

  CLI::App* c_model = app.add_subcommand("model", "per-interval expectation table");
  c_model->fallthrough();
  c_model->add_option("i_max", i_max, "last interval index")->required();

  CLI::App* c_placement = app.add_subcommand("placement", "two-row overlap expectation");
  c_placement->fallthrough();
  c_placement->add_option("n", pn, "positions per row")->required();
  c_placement->add_option("m1", pm1, "units in row 1")->required();
  c_placement->add_option("m2", pm2, "units in row 2")->required();
  c_placement->add_option("trials", ptrials, "monte carlo trials")->required();
  c_placement->add_option("--shift", pshift, "rotate row 2 before counting");

  CLI::App* c_compare = app.add_subcommand("compare", "model vs sieved counts");
  c_compare->fallthrough();
  c_compare->add_option("i_max", i_max, "last interval index")->required();

  CLI::App* c_verify = app.add_subcommand("verify", "run the acceptance checks");
  c_verify->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(c_sieve)) return run_sieve(opt, lo, hi, count_only);
    if (app.got_subcommand(c_twins)) return run_twins(opt, col_lo, col_hi, count_only);
    if (app.got_subcommand(c_intervals)) return run_intervals(opt, i_max);
    if (app.got_subcommand(c_bounds)) {
      if (*opt_lemma) return run_bounds_lemma(opt, lemma_i);
      if (*opt_str) return run_bounds_strengthened(opt, strengthened_i);
      if (*opt_x) return run_bounds_x(opt, bounds_x);
      std::cerr << "bounds: give x, --lemma i, or --strengthened i\n";
      return 2;
    }
    if (app.got_subcommand(c_model)) return run_model(opt, i_max);
    if (app.got_subcommand(c_placement)) {
      return run_placement(opt, pn, pm1, pm2, ptrials, pshift);
    }
    if (app.got_subcommand(c_compare)) return run_compare(opt, i_max);
    if (app.got_subcommand(c_verify)) return run_verify();
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const not_enumerable_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
