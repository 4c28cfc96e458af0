#include "omega/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "omega/counting.hpp"
#include "omega/factor.hpp"
#include "omega/moments.hpp"
#include "omega/polynomial.hpp"
#include "omega/primes.hpp"
#include "omega/sieve.hpp"
#include "omega/zeta.hpp"

namespace omega {

namespace {

using Grid = std::vector<std::uint64_t>;

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::string list(const std::vector<double>& v, const char* f = "%.3g") {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + fmt(f, v[i]);
  return s + "]";
}

double median_abs(std::vector<double> v) {
  for (double& x : v) x = std::abs(x);
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

bool non_exploding(const std::vector<double>& r) {
  if (r.empty()) return false;
  for (const double x : r) {
    if (!std::isfinite(x)) return false;
  }
  return std::abs(r.back()) <= 2.0 * median_abs(r);
}

std::vector<double> normalized(const std::vector<MomentReport>& reports) {
  std::vector<double> out;
  for (const auto& r : reports) out.push_back(r.normalized_residual);
  return out;
}

struct Check {
  bool ok = true;
  std::ostringstream detail;
  void require(bool cond, const std::string& what) {
    if (!detail.str().empty()) detail << "; ";
    detail << what << (cond ? "" : " FAILED");
    ok = ok && cond;
  }
};

Grid hfree_grid(bool full) {
  Grid g = {10'000, 100'000, 1'000'000, 10'000'000};
  if (full) g.push_back(100'000'000);
  return g;
}

Grid hfull_grid(bool full) {
  Grid g = {100'000'000, 1'000'000'000, 10'000'000'000, 100'000'000'000};
  if (full) {
    g.push_back(1'000'000'000'000);
    g.push_back(10'000'000'000'000);
  }
  return g;
}

std::vector<int> hfree_hs(bool full) { return full ? std::vector<int>{2, 3, 4} : std::vector<int>{2, 3}; }

void hfree_moment_check(Check& c, Statistic stat, const VerifyConfig& cfg, const ConstantEvaluator& ev) {
  const Grid grid = hfree_grid(cfg.full);
  SieveOptions so;
  so.threads = cfg.threads;
  for (const int h : hfree_hs(cfg.full)) {
    const auto sums = sieve_moment_sums(grid, h, so);
    for (const int power : {1, 2}) {
      std::vector<MomentReport> reports;
      for (std::size_t i = 0; i < grid.size(); ++i) {
        reports.push_back(moment_from_sums(sums[i], grid[i], h, Population::h_free, stat, power, ev));
      }
      const auto r = normalized(reports);
      c.require(bounded_with_limit(r, 10.0),
                "h=" + std::to_string(h) + " " + to_string(stat) + "^" + std::to_string(power) + " " + list(r));
    }
  }
}

void hfull_moment_check(Check& c, Statistic stat, const VerifyConfig& cfg, const ConstantEvaluator& ev) {
  const Grid grid = hfull_grid(cfg.full);
  const auto sums = hfull_moment_sums(grid, 2, cfg.threads);
  for (const int power : {1, 2}) {
    std::vector<MomentReport> reports;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      reports.push_back(moment_from_sums(sums[i], grid[i], 2, Population::h_full, stat, power, ev));
    }
    const auto r = normalized(reports);
    c.require(bounded_without_drift(r), "h-full " + std::string(to_string(stat)) + "^" + std::to_string(power) +
                                            " " + list(r));
  }
}

// --- the criteria -------------------------------------------------------

void gamma0_identity(Check& c, const VerifyConfig& cfg) {
  const ConstantEvaluator ev({cfg.truncation_prime, TailMode::prime_zeta});
  const ConstantValue product = ev.gamma0_product(2);
  const ConstantValue z32 = zeta_real(1.5);
  const ConstantValue z3 = zeta_real(3.0);
  const double ratio = z32.value / z3.value;
  const double diff = std::abs(product.value - ratio);
  c.require(diff <= 1e-9, "product " + fmt("%.12f", product.value) + " vs zeta(3/2)/zeta(3) " +
                              fmt("%.12f", ratio) + ", |diff| " + fmt("%.2e", diff));
}

void coefficient_identity(Check& c, const VerifyConfig&) {
  const CoefficientPolynomial p2 = a_coefficients(2);
  const std::vector<std::int64_t> expect = {1, 0, 0, 0, 0, 0, -1};
  c.require(p2.coefficients == expect, "h=2 is 1 - v^6");
  double worst_closure = 0.0;
  for (int h = 3; h <= 8; ++h) {
    const CoefficientPolynomial p = a_coefficients(h);
    std::int64_t max_a = 0;
    for (const std::int64_t a : p.coefficients) max_a = std::max(max_a, a < 0 ? -a : a);
    const std::string tag = "h=" + std::to_string(h);
    c.require(p.degree() == CoefficientPolynomial::degree_bound(h),
              tag + " degree " + std::to_string(p.degree()));
    c.require(max_a <= static_cast<std::int64_t>(h) << h, tag + " max|a| " + std::to_string(max_a));
    const double v = 0.5;
    double lhs = 1.0 + std::pow(v, h) / (1.0 - v);
    for (int j = h; j <= 2 * h - 1; ++j) lhs *= 1.0 - std::pow(v, j);
    worst_closure = std::max(worst_closure, std::abs(lhs - p.evaluate(v)));
  }
  c.require(worst_closure <= 1e-12, "closure at v=1/2 " + fmt("%.1e", worst_closure));
}

void hfree_density(Check& c, const VerifyConfig& cfg) {
  SieveOptions so;
  so.threads = cfg.threads;
  const std::uint64_t x = cfg.full ? 100'000'000 : 10'000'000;
  const double inv_z2 = 1.0 / zeta_real(2.0).value;
  const CountComparison plain = count_h_free(x, 2, {}, so);
  const double d0 = static_cast<double>(plain.exact) / static_cast<double>(x);
  c.require(std::abs(d0 - inv_z2) <= 5e-4, "density " + fmt("%.7f", d0) + " vs " + fmt("%.7f", inv_z2));
  const std::uint64_t two[] = {2};
  const CountComparison odd = count_h_free(x, 2, two, so);
  const double d2 = static_cast<double>(odd.exact) / static_cast<double>(x);
  c.require(std::abs(d2 - 2.0 / 3.0 * inv_z2) <= 5e-4,
            "coprime to 2 " + fmt("%.7f", d2) + " vs " + fmt("%.7f", 2.0 / 3.0 * inv_z2));
}

void hfull_counting(Check& c, const VerifyConfig& cfg) {
  const ConstantEvaluator ev({cfg.truncation_prime, TailMode::prime_zeta});
  Grid grid = {1'000'000, 100'000'000, 10'000'000'000};
  if (cfg.full) grid.push_back(1'000'000'000'000);
  std::vector<double> r;
  for (const std::uint64_t x : grid) {
    const CountComparison cc = count_h_full(x, 2, ev, {}, cfg.threads);
    r.push_back(std::abs(cc.residual) / std::cbrt(static_cast<double>(x)));
  }
  bool decreasing = true;
  for (std::size_t i = 1; i < r.size(); ++i) decreasing = decreasing && r[i] < r[i - 1];
  c.require(*std::max_element(r.begin(), r.end()) <= 1.0, "|residual|/x^(1/3) " + list(r) + " <= 1");
  c.require(decreasing, "decreasing");
}

void saidak(Check& c, const VerifyConfig& cfg) {
  const ConstantEvaluator ev({cfg.truncation_prime, TailMode::prime_zeta});
  const double b1 = ev.mertens_b1().value;
  const double z2 = ev.zeta2().value;
  const std::uint64_t x = 1'000'000;
  const SumReport minus = saidak_double_sum(x, b1, z2, -1.0);
  const SumReport plus = saidak_double_sum(x, b1, z2, +1.0);
  c.require(std::abs(minus.residual) <= 3.0 * minus.scale,
            "|residual| " + fmt("%.4f", std::abs(minus.residual)) + " <= " + fmt("%.4f", 3.0 * minus.scale));
  c.require(std::abs(plus.residual) > 2.3, "+zeta(2) residual " + fmt("%.4f", plus.residual));
}

void hfree_omega(Check& c, const VerifyConfig& cfg) {
  const ConstantEvaluator ev({cfg.truncation_prime, TailMode::prime_zeta});
  hfree_moment_check(c, Statistic::omega, cfg, ev);
}

void hfull_omega(Check& c, const VerifyConfig& cfg) {
  const ConstantEvaluator ev({cfg.truncation_prime, TailMode::prime_zeta});
  hfull_moment_check(c, Statistic::omega, cfg, ev);
}

void big_omega(Check& c, const VerifyConfig& cfg) {
  const ConstantEvaluator ev({cfg.truncation_prime, TailMode::prime_zeta});
  hfree_moment_check(c, Statistic::big_omega, cfg, ev);
  hfull_moment_check(c, Statistic::big_omega, cfg, ev);
  bool exact = true;
  for (int h = 2; h <= 5; ++h) {
    const double hd = h;
    const MainTerms w1 = main_terms(h, Population::h_full, Statistic::omega, 1, ev);
    const MainTerms b1 = main_terms(h, Population::h_full, Statistic::big_omega, 1, ev);
    const MainTerms w2 = main_terms(h, Population::h_full, Statistic::omega, 2, ev);
    const MainTerms b2 = main_terms(h, Population::h_full, Statistic::big_omega, 2, ev);
    exact = exact && b1.leading() == hd * w1.leading() && b2.leading() == hd * hd * w2.leading();
  }
  c.require(exact, "h-full Omega leading coefficient = h * omega one");
}

void variance(Check& c, const VerifyConfig& cfg) {
  const ConstantEvaluator ev({cfg.truncation_prime, TailMode::prime_zeta});
  Grid grid = {100'000'000, 1'000'000'000, 10'000'000'000};
  if (cfg.full) {
    grid.push_back(100'000'000'000);
    grid.push_back(1'000'000'000'000);
  }
  const auto reports = variance_hfull(grid, 2, ev, cfg.threads);
  std::vector<double> r;
  for (const auto& v : reports) r.push_back(v.normalized_residual);
  double worst = 0.0;
  for (const double x : r) worst = std::max(worst, std::isfinite(x) ? std::abs(x) : HUGE_VAL);
  c.require(worst <= 10.0, "variance " + list(r));
  std::vector<double> fractions;
  for (const std::uint64_t x : grid) {
    fractions.push_back(concentration(x, 2, ConcentrationMode::epsilon, 0.5, cfg.threads).fraction);
  }
  bool decreasing = true;
  for (std::size_t i = 1; i < fractions.size(); ++i) decreasing = decreasing && fractions[i] < fractions[i - 1];
  c.require(decreasing, "eps=0.5 fraction " + list(fractions, "%.5f") + " strictly decreasing");
}

void exact_identities(Check& c, const VerifyConfig& cfg) {
  SieveOptions so;
  so.threads = cfg.threads;
  Grid grid = {1'000, 100'000, 10'000'000};
  if (cfg.full) grid.push_back(1'000'000'000);
  for (const std::uint64_t x : grid) {
    const std::uint64_t g[] = {x};
    const u128 sieve = sieve_moment_sums(g, 0, so).front().omega1;
    u128 floors = 0;
    for (const std::uint64_t p : primes_up_to(x)) floors += x / p;
    c.require(sieve == floors, "x=" + std::to_string(x) + " sum omega " + to_string(sieve));
  }

  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<std::uint64_t> dist(1, 1'000'000'000);
  const int samples = cfg.full ? 100'000 : 10'000;
  int mismatches = 0;
  std::vector<SieveRecord> records;
  std::vector<std::uint64_t> scratch;
  for (int i = 0; i < samples; ++i) {
    const std::uint64_t n = dist(rng);
    const SegmentPlan plan = plan_segments(n, n);
    sieve_segment(plan, n, n, records, scratch);
    const FactoredInteger f = factorize(n);
    const SieveRecord& r = records.front();
    const unsigned min_e = f.min_exponent() == kNoExponent ? kRecordNoExponent : f.min_exponent();
    if (r.n != n || r.omega != omega(f) || r.big_omega != big_omega(f) || r.max_exponent != f.max_exponent() ||
        r.min_exponent != min_e) {
      ++mismatches;
    }
  }
  c.require(mismatches == 0, std::to_string(samples) + " random n <= 1e9, " + std::to_string(mismatches) +
                                 " sieve/factor mismatches");
}

struct CriterionDef {
  const char* name;
  double quick_limit;
  double full_limit;
  void (*run)(Check&, const VerifyConfig&);
};

constexpr CriterionDef kCriteria[kCriterionCount] = {
    {"gamma_{0,2} product vs zeta(3/2)/zeta(3)", 5, 60, gamma0_identity},
    {"coefficient polynomial identity", 1, 1, coefficient_identity},
    {"h-free density with exclusion", 30, 300, hfree_density},
    {"h-full two-term count", 120, 1200, hfull_counting},
    {"double prime sum with sign check", 60, 60, saidak},
    {"h-free omega moments", 300, 1800, hfree_omega},
    {"h-full omega moments", 600, 1800, hfull_omega},
    {"Omega moments (h-free and h-full)", 600, 1800, big_omega},
    {"h-full omega variance and concentration", 600, 1800, variance},
    {"exact identities", 120, 600, exact_identities},
};

}  // namespace

bool bounded_with_limit(const std::vector<double>& r, double limit) {
  if (!non_exploding(r)) return false;
  for (const double x : r) {
    if (std::abs(x) > limit) return false;
  }
  return true;
}

bool bounded_without_drift(const std::vector<double>& r) {
  return non_exploding(r) && std::abs(r.back()) <= 1.5 * std::abs(r.front());
}

CriterionResult run_criterion(int id, const VerifyConfig& config) {
  if (id < 1 || id > kCriterionCount) throw std::invalid_argument("criterion id must lie in [1, 10]");
  const CriterionDef& def = kCriteria[id - 1];
  CriterionResult r;
  r.id = id;
  r.name = def.name;
  r.time_limit = config.full ? def.full_limit : def.quick_limit;
  const auto t0 = std::chrono::steady_clock::now();
  Check check;
  try {
    def.run(check, config);
  } catch (const std::exception& e) {
    check.require(false, std::string("error: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.detail = check.detail.str();
  r.passed = check.ok && r.seconds <= r.time_limit;
  if (r.seconds > r.time_limit) r.detail += "; time limit " + fmt("%.0f", r.time_limit) + " s exceeded";
  return r;
}

std::vector<CriterionResult> run_acceptance(const VerifyConfig& config,
                                            const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) {
    out.push_back(run_criterion(id, config));
    if (on_result) on_result(out.back());
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  char head[160];
  std::snprintf(head, sizeof head, "[%s] %2d %s (%.2f s)", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.seconds);
  return std::string(head) + "\n       " + r.detail;
}

}  // namespace omega
