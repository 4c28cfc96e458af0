#include "omega/cli.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "omega/constants.hpp"
#include "omega/counting.hpp"
#include "omega/moments.hpp"
#include "omega/report.hpp"
#include "omega/sieve.hpp"
#include "omega/verify.hpp"

namespace omega {

namespace {

struct RunConfig {
  std::uint64_t truncation_prime = kDefaultTruncationPrime;
  std::size_t memory_budget = SieveOptions{}.memory_budget;
  unsigned threads = 0;  // 0: environment, then 1
  std::string format = "csv";
  std::string out_path;
  std::uint64_t seed = VerifyConfig{}.seed;

  // shared by the data subcommands
  std::vector<int> h = {2};
  std::vector<std::uint64_t> x;
  std::string grid;
  std::vector<std::uint64_t> exclude;
};

unsigned resolve_threads(unsigned flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("OMEGA_MOMENTS_THREADS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 1024) return static_cast<unsigned>(v);
    throw std::invalid_argument("OMEGA_MOMENTS_THREADS must be an integer in [1, 1024]");
  }
  return 1;
}

// "lo:hi:factor"
std::vector<std::uint64_t> parse_grid(const std::string& text) {
  std::vector<std::uint64_t> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) {
    std::size_t used = 0;
    const double v = std::stod(item, &used);
    if (used != item.size() || !(v >= 1.0) || v > 1.8e19 || v != std::floor(v)) {
      throw std::invalid_argument("bad grid value '" + item + "'");
    }
    parts.push_back(static_cast<std::uint64_t>(v));
  }
  if (parts.size() != 3) throw std::invalid_argument("grid must be lo:hi:factor");
  return geometric_grid(parts[0], parts[1], parts[2]);
}

std::vector<std::uint64_t> points(const RunConfig& c) {
  std::vector<std::uint64_t> xs = c.x;
  if (!c.grid.empty()) {
    const auto g = parse_grid(c.grid);
    xs.insert(xs.end(), g.begin(), g.end());
  }
  if (xs.empty()) throw std::invalid_argument("give --x or --grid");
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

// accepts 1e7 style numbers for integer flags
std::uint64_t parse_count(const std::string& text) {
  std::size_t used = 0;
  const double v = std::stod(text, &used);
  if (used != text.size() || !(v >= 0.0) || v > 1.8e19 || v != std::floor(v)) {
    throw CLI::ValidationError("not a nonnegative integer: " + text);
  }
  if (v < 9.0e15) return static_cast<std::uint64_t>(v);
  return std::stoull(text);
}

void add_counts(CLI::App* app, const std::string& name, std::vector<std::uint64_t>& target, const std::string& help) {
  app->add_option_function<std::vector<std::string>>(
         name,
         [&target](const std::vector<std::string>& v) {
           for (const auto& s : v) target.push_back(parse_count(s));
         },
         help)
      ->delimiter(',');
}

struct Output {
  std::ofstream file;
  std::ostream* stream;
  Output(const std::string& path, std::ostream& fallback) : stream(&fallback) {
    if (!path.empty()) {
      file.open(path);
      if (!file) throw std::runtime_error("cannot open " + path);
      stream = &file;
    }
  }
};

int constants_cmd(const RunConfig& c, std::ostream& out) {
  const ConstantEvaluator ev({c.truncation_prime, TailMode::prime_zeta});
  std::vector<ConstantValue> values = {ev.mertens_b1(), ev.mertens_b2()};
  for (const int h : c.h) {
    if (h < 2 || h > 16) throw std::invalid_argument("constants need 2 <= h <= 16");
    for (int i = 0; i < h; ++i) values.push_back(ev.gamma_coefficient(i, h));
    for (const ConstantValue& v : {ev.c1(h), ev.c2(h), ev.c3(h), ev.c4(h), ev.d1(h), ev.d2(h), ev.b3(h), ev.b4(h)}) {
      values.push_back(v);
    }
  }
  write_constants(out, values, parse_format(c.format));
  return kExitOk;
}

int counting_cmd(const RunConfig& c, const std::string& kind, std::ostream& out) {
  const auto xs = points(c);
  const ConstantEvaluator ev({c.truncation_prime, TailMode::prime_zeta});
  SieveOptions so;
  so.threads = resolve_threads(c.threads);
  so.memory_budget = c.memory_budget;
  std::vector<CountComparison> rows;
  for (const int h : c.h) {
    for (const std::uint64_t x : xs) {
      if (kind == "h-free") {
        rows.push_back(count_h_free(x, h, c.exclude, so));
      } else if (kind == "h-full") {
        rows.push_back(count_h_full(x, h, ev, c.exclude, so.threads));
      } else {
        if (!c.exclude.empty()) throw std::invalid_argument("--exclude does not apply to s-h");
        rows.push_back(s_h_partial(x, h));
      }
    }
  }
  write_counts(out, rows, parse_format(c.format));
  return kExitOk;
}

int moments_cmd(const RunConfig& c, const std::string& population_text, const std::string& stat_text,
                const std::vector<int>& powers, std::ostream& out) {
  const Population population = parse_population(population_text);
  std::vector<Statistic> stats;
  if (stat_text == "both") {
    stats = {Statistic::omega, Statistic::big_omega};
  } else {
    stats = {parse_statistic(stat_text)};
  }
  const auto xs = points(c);
  const ConstantEvaluator ev({c.truncation_prime, TailMode::prime_zeta});
  SieveOptions so;
  so.threads = resolve_threads(c.threads);
  so.memory_budget = c.memory_budget;
  std::vector<MomentReport> rows;
  const std::vector<int> hs = population == Population::all ? std::vector<int>{0} : c.h;
  for (const int h : hs) {
    for (const std::uint64_t x : xs) {
      for (const int power : powers) check_moment_request(x, h, population, power);
    }
    const auto sums = population == Population::h_full ? hfull_moment_sums(xs, h, so.threads)
                                                       : sieve_moment_sums(xs, h, so);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (const Statistic s : stats) {
        for (const int power : powers) {
          rows.push_back(moment_from_sums(sums[i], xs[i], h, population, s, power, ev));
        }
      }
    }
  }
  write_moments(out, rows, parse_format(c.format));
  return kExitOk;
}

int variance_cmd(const RunConfig& c, const std::vector<double>& epsilons, const std::vector<double>& thresholds,
                 std::ostream& out) {
  const auto xs = points(c);
  const ConstantEvaluator ev({c.truncation_prime, TailMode::prime_zeta});
  const unsigned threads = resolve_threads(c.threads);
  const OutputFormat format = parse_format(c.format);
  std::vector<VarianceReport> rows;
  std::vector<ConcentrationReport> conc;
  for (const int h : c.h) {
    const auto v = variance_hfull(xs, h, ev, threads);
    rows.insert(rows.end(), v.begin(), v.end());
    for (const std::uint64_t x : xs) {
      for (const double e : epsilons) conc.push_back(concentration(x, h, ConcentrationMode::epsilon, e, threads));
      for (const double g : thresholds) conc.push_back(concentration(x, h, ConcentrationMode::threshold, g, threads));
    }
  }
  write_variance(out, rows, format);
  if (!conc.empty()) {
    if (format == OutputFormat::csv) out << '\n';
    write_concentration(out, conc, format);
  }
  return kExitOk;
}

int verify_cmd(const RunConfig& c, bool full, std::ostream& out) {
  VerifyConfig vc;
  vc.full = full;
  vc.threads = resolve_threads(c.threads);
  vc.truncation_prime = c.truncation_prime;
  vc.seed = c.seed;
  out << "acceptance suite (" << (full ? "full" : "quick") << " tier)\n";
  int passed = 0;
  run_acceptance(vc, [&](const CriterionResult& r) {
    out << format_result(r) << '\n' << std::flush;
    passed += r.passed ? 1 : 0;
  });
  out << "PASS " << passed << "/" << kCriterionCount << '\n';
  return passed == kCriterionCount ? kExitOk : kExitVerifyFailed;
}

int sieve_stats_cmd(const RunConfig& c, std::uint64_t lo, std::uint64_t hi, bool dump, std::ostream& out) {
  SieveOptions so;
  so.threads = resolve_threads(c.threads);
  so.memory_budget = c.memory_budget;
  if (dump) {
    out << kSieveCsvHeader << '\n';
    sieve_range(lo, hi, [&](std::span<const SieveRecord> records) {
      for (const SieveRecord& r : records) {
        out << r.n << ',' << unsigned{r.omega} << ',' << unsigned{r.big_omega} << ',' << unsigned{r.max_exponent}
            << ',';
        if (r.min_exponent != kRecordNoExponent) out << unsigned{r.min_exponent};
        out << '\n';
      }
    }, so);
    return kExitOk;
  }
  struct Stats {
    MomentSums all;
    std::array<std::uint64_t, 8> h_free{};  // index h: h-free count, h = 2..7
    std::array<std::uint64_t, 8> h_full{};
    void merge(const Stats& o) {
      all.merge(o.all);
      for (std::size_t i = 0; i < h_free.size(); ++i) {
        h_free[i] += o.h_free[i];
        h_full[i] += o.h_full[i];
      }
    }
  };
  const Stats s = sieve_reduce<Stats>(lo, hi, so, [](std::span<const SieveRecord> records, Stats& acc) {
    for (const SieveRecord& r : records) {
      acc.all.add(r.omega, r.big_omega);
      for (unsigned h = 2; h < 8; ++h) {
        if (r.max_exponent < h) ++acc.h_free[h];
        if (r.min_exponent >= h) ++acc.h_full[h];  // n = 1 carries 0xFF
      }
    }
  });
  const OutputFormat format = parse_format(c.format);
  if (format == OutputFormat::csv) {
    out << "lo,hi,count,sum_omega,sum_omega2,sum_Omega,sum_Omega2";
    for (int h = 2; h < 8; ++h) out << ",h" << h << "_free";
    for (int h = 2; h < 8; ++h) out << ",h" << h << "_full";
    out << '\n' << lo << ',' << hi << ',' << to_string(s.all.count) << ',' << to_string(s.all.omega1) << ','
        << to_string(s.all.omega2) << ',' << to_string(s.all.big1) << ',' << to_string(s.all.big2);
    for (int h = 2; h < 8; ++h) out << ',' << s.h_free[h];
    for (int h = 2; h < 8; ++h) out << ',' << s.h_full[h];
    out << '\n';
  } else {
    out << "{\"lo\":" << lo << ",\"hi\":" << hi << ",\"count\":" << to_string(s.all.count)
        << ",\"sum_omega\":" << to_string(s.all.omega1) << ",\"sum_omega2\":" << to_string(s.all.omega2)
        << ",\"sum_Omega\":" << to_string(s.all.big1) << ",\"sum_Omega2\":" << to_string(s.all.big2);
    for (int h = 2; h < 8; ++h) out << ",\"h" << h << "_free\":" << s.h_free[h];
    for (int h = 2; h < 8; ++h) out << ",\"h" << h << "_full\":" << s.h_full[h];
    out << "}\n";
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Moments of omega(n) and Omega(n) over h-free and h-full integers", "omega_moments"};
  // --h is the h parameter, so help is --help only
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  RunConfig c;

  std::vector<std::uint64_t> truncation;
  add_counts(&app, "--truncation-prime,-P", truncation, "largest prime summed explicitly (default 1e7)");
  app.add_option("--memory-budget", c.memory_budget, "sieve memory budget in bytes")->check(CLI::PositiveNumber);
  app.add_option("--threads,-j", c.threads, "worker threads (fallback: OMEGA_MOMENTS_THREADS, then 1)")
      ->check(CLI::Range(1u, 1024u));
  app.add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out,-o", c.out_path, "write data here instead of stdout");
  app.add_option("--seed", c.seed, "seed for sampled cross-checks");

  auto data_options = [&](CLI::App* sub, bool with_exclude) {
    sub->add_option("--h", c.h, "h value(s)")->delimiter(',');
    add_counts(sub, "--x", c.x, "evaluation point(s)");
    sub->add_option("--grid", c.grid, "geometric grid lo:hi:factor");
    if (with_exclude) add_counts(sub, "--exclude", c.exclude, "primes the counted integers must avoid");
  };

  CLI::App* constants = app.add_subcommand("constants", "constants with tail bounds (JSON lines by default)");
  constants->add_option("--h", c.h, "h value(s)")->delimiter(',');

  std::string kind = "h-free";
  CLI::App* counting = app.add_subcommand("counting", "exact counts against predicted main terms");
  data_options(counting, true);
  counting->add_option("--kind", kind, "h-free, h-full or s-h")->check(CLI::IsMember({"h-free", "h-full", "s-h"}));

  std::string population = "h-free", stat = "omega";
  std::vector<int> powers = {1};
  CLI::App* moments = app.add_subcommand("moments", "power sums of omega / Omega against main terms");
  data_options(moments, false);
  moments->add_option("--population", population, "all, h-free or h-full");
  moments->add_option("--stat", stat, "omega, Omega or both");
  moments->add_option("--power", powers, "1, 2 or 1,2")->delimiter(',')->check(CLI::Range(1, 2));

  std::vector<double> epsilons, thresholds;
  CLI::App* variance = app.add_subcommand("variance", "sum of (omega(n) - loglog n)^2 over h-full n");
  data_options(variance, false);
  variance->add_option("--epsilon", epsilons, "also report the concentration fraction at these epsilons")
      ->delimiter(',')->check(CLI::PositiveNumber);
  variance->add_option("--threshold", thresholds, "same with |dev| >= g sqrt(loglog n)")
      ->delimiter(',')->check(CLI::PositiveNumber);

  bool quick = false, full = false;
  CLI::App* verify = app.add_subcommand("verify", "acceptance suite");
  auto* quick_flag = verify->add_flag("--quick", quick, "stated grids (default)");
  verify->add_flag("--full", full, "extended grids")->excludes(quick_flag);

  std::uint64_t lo = 1;
  bool dump = false;
  CLI::App* sieve_stats = app.add_subcommand("sieve-stats", "summary of the factorization sieve over [lo, x]");
  add_counts(sieve_stats, "--x", c.x, "upper end");
  sieve_stats->add_option("--lo", lo, "lower end")->check(CLI::PositiveNumber);
  sieve_stats->add_flag("--dump", dump, "emit every record as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (!truncation.empty()) c.truncation_prime = truncation.back();
  const bool format_given = app.count("--format") > 0;
  if (!format_given) c.format = constants->parsed() ? "json" : "csv";

  try {
    Output o(c.out_path, out);
    if (constants->parsed()) return constants_cmd(c, *o.stream);
    if (counting->parsed()) return counting_cmd(c, kind, *o.stream);
    if (moments->parsed()) return moments_cmd(c, population, stat, powers, *o.stream);
    if (variance->parsed()) return variance_cmd(c, epsilons, thresholds, *o.stream);
    if (verify->parsed()) return verify_cmd(c, full, *o.stream);
    if (sieve_stats->parsed()) {
      if (c.x.size() != 1) throw std::invalid_argument("sieve-stats takes one --x");
      return sieve_stats_cmd(c, lo, c.x.front(), dump, *o.stream);
    }
  } catch (const BudgetExceeded& e) {
    err << "infeasible: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  return kExitUsage;
}

}  // namespace omega
