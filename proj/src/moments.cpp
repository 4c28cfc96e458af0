#include "omega/moments.hpp"

#include <algorithm>
#include <cmath>

#include "omega/hfull.hpp"
#include "omega/primes.hpp"
#include "omega/zeta.hpp"

namespace omega {

namespace {

void check_grid_sorted(std::span<const std::uint64_t> grid) {
  if (grid.empty()) throw std::invalid_argument("empty grid");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (grid[i] <= grid[i - 1]) throw std::invalid_argument("grid must be strictly increasing");
  }
}

double loglog(double x) { return std::log(std::log(x)); }

// Per-bin accumulator; bin g holds the n in (grid[g-1], grid[g]].
template <class Bin>
struct Binned {
  std::vector<Bin> bins;
  void merge(const Binned& o) {
    if (bins.empty()) bins.resize(o.bins.size());
    for (std::size_t i = 0; i < o.bins.size(); ++i) bins[i].merge(o.bins[i]);
  }
};

std::size_t bin_of(std::span<const std::uint64_t> grid, std::uint64_t n) {
  return static_cast<std::size_t>(std::lower_bound(grid.begin(), grid.end(), n) - grid.begin());
}

struct VarianceBin {
  u128 count = 0;
  u128 omega2 = 0;
  CompensatedSum omega_loglog;
  CompensatedSum loglog2;
  CompensatedSum deviation2;
  void merge(const VarianceBin& o) {
    count += o.count;
    omega2 += o.omega2;
    omega_loglog.merge(o.omega_loglog);
    loglog2.merge(o.loglog2);
    deviation2.merge(o.deviation2);
  }
};

}  // namespace

const char* to_string(Population p) {
  switch (p) {
    case Population::all: return "all";
    case Population::h_free: return "h-free";
    case Population::h_full: return "h-full";
  }
  return "?";
}

const char* to_string(Statistic s) { return s == Statistic::omega ? "omega" : "Omega"; }

Population parse_population(const std::string& text) {
  if (text == "all") return Population::all;
  if (text == "h-free" || text == "hfree") return Population::h_free;
  if (text == "h-full" || text == "hfull") return Population::h_full;
  throw std::invalid_argument("unknown population '" + text + "'");
}

Statistic parse_statistic(const std::string& text) {
  if (text == "omega") return Statistic::omega;
  if (text == "Omega" || text == "big-omega" || text == "big_omega") return Statistic::big_omega;
  throw std::invalid_argument("unknown statistic '" + text + "'");
}

u128 MomentSums::get(Statistic s, int power) const {
  if (s == Statistic::omega) return power == 1 ? omega1 : omega2;
  return power == 1 ? big1 : big2;
}

std::vector<MomentSums> sieve_moment_sums(std::span<const std::uint64_t> grid, int h, const SieveOptions& options) {
  check_grid_sorted(grid);
  if (h == 1 || h < 0) throw std::invalid_argument("h must be 0 (all) or >= 2");
  const std::uint8_t limit = h == 0 ? 0xFF : static_cast<std::uint8_t>(h - 1);
  std::vector<MomentSums> out;
  MomentSums running;
  std::size_t next = 0;
  sieve_range(1, grid.back(), [&](std::span<const SieveRecord> records) {
    for (const SieveRecord& r : records) {
      while (next < grid.size() && r.n > grid[next]) {
        out.push_back(running);
        ++next;
      }
      if (r.n == 1 || r.max_exponent <= limit) running.add(r.omega, r.big_omega);
    }
  }, options);
  while (out.size() < grid.size()) out.push_back(running);
  return out;
}

std::vector<MomentSums> hfull_moment_sums(std::span<const std::uint64_t> grid, int h, unsigned threads) {
  check_grid_sorted(grid);
  const HFullEnumerator e(grid.back(), h);
  auto binned = e.reduce<Binned<MomentSums>>(threads, [&](const HFullNode& node, Binned<MomentSums>& acc) {
    if (acc.bins.empty()) acc.bins.resize(grid.size());
    acc.bins[bin_of(grid, node.n)].add(node.omega, node.big_omega);
  });
  binned.bins.resize(grid.size());
  for (std::size_t i = 1; i < grid.size(); ++i) binned.bins[i].merge(binned.bins[i - 1]);
  return binned.bins;
}

void check_moment_request(std::uint64_t x, int h, Population population, int power) {
  if (x < 3) throw std::invalid_argument("moments need x >= 3");
  if (power != 1 && power != 2) throw std::invalid_argument("power must be 1 or 2");
  if (population != Population::all && h < 2) throw std::invalid_argument("h must be >= 2");
  if (population == Population::h_full && h > 16) throw std::invalid_argument("h-full moments need h <= 16");
  if (population == Population::all && power == 2) {
    throw std::invalid_argument("second moment over all integers is not supported");
  }
}

std::string theorem_tag(Population population, Statistic statistic) {
  const std::string stat = statistic == Statistic::omega ? "omega" : "Omega";
  switch (population) {
    case Population::all: return "classical " + stat + " mean";
    case Population::h_free: return "h-free " + stat + " moments";
    case Population::h_full: return "h-full " + stat + " moments";
  }
  return {};
}

double moment_scale(std::uint64_t x, int h, Population population, int power) {
  const double xd = static_cast<double>(x);
  const double lx = std::log(xd);
  if (population != Population::h_full) return xd / lx;
  const double root = std::pow(xd, 1.0 / h);
  return power == 1 ? root / lx : root * loglog(xd) / lx;
}

double MainTerms::evaluate(std::uint64_t x) const {
  const double xd = static_cast<double>(x);
  const double ll = loglog(xd);
  const double base = root == 1 ? xd : std::pow(xd, 1.0 / root);
  return weight * base * ((loglog2 * ll + loglog1) * ll + constant);
}

MainTerms main_terms(int h, Population population, Statistic statistic, int power,
                     const ConstantEvaluator& constants) {
  const bool w = statistic == Statistic::omega;
  MainTerms t;
  switch (population) {
    case Population::all:
      if (power != 1) throw std::invalid_argument("second moment over all integers is not supported");
      t.loglog1 = 1.0;
      t.constant = w ? constants.mertens_b1().value : constants.mertens_b2().value;
      return t;
    case Population::h_free: {
      t.weight = 1.0 / zeta_real(static_cast<double>(h)).value;
      const double k1 = w ? constants.c1(h).value : constants.c3(h).value;
      if (power == 1) {
        t.loglog1 = 1.0;
        t.constant = k1;
      } else {
        t.loglog2 = 1.0;
        t.loglog1 = 2.0 * k1 + 1.0;
        t.constant = w ? constants.c2(h).value : constants.c4(h).value;
      }
      return t;
    }
    case Population::h_full: {
      t.weight = constants.gamma_coefficient(0, h).value;
      t.root = h;
      const double hd = h;
      if (w) {
        const double d1 = constants.d1(h).value;
        if (power == 1) {
          t.loglog1 = 1.0;
          t.constant = d1;
        } else {
          t.loglog2 = 1.0;
          t.loglog1 = 2.0 * d1 + 1.0;
          t.constant = constants.d2(h).value;
        }
      } else {
        const double b3 = constants.b3(h).value;
        if (power == 1) {
          t.loglog1 = hd;
          t.constant = b3;
        } else {
          t.loglog2 = hd * hd;
          t.loglog1 = (2.0 * b3 + 1.0) * hd;
          t.constant = constants.b4(h).value;
        }
      }
      return t;
    }
  }
  return t;
}

double predicted_moment(std::uint64_t x, int h, Population population, Statistic statistic, int power,
                        const ConstantEvaluator& constants) {
  check_moment_request(x, h, population, power);
  return main_terms(h, population, statistic, power, constants).evaluate(x);
}

MomentReport moment_from_sums(const MomentSums& sums, std::uint64_t x, int h, Population population,
                              Statistic statistic, int power, const ConstantEvaluator& constants) {
  MomentReport r;
  r.x = x;
  r.h = population == Population::all ? 0 : h;
  r.population = population;
  r.statistic = statistic;
  r.power = power;
  r.exact_sum = sums.get(statistic, power);
  r.predicted = predicted_moment(x, h, population, statistic, power, constants);
  r.residual = static_cast<double>(to_long_double(r.exact_sum) - static_cast<long double>(r.predicted));
  r.scale = moment_scale(x, h, population, power);
  r.normalized_residual = r.residual / r.scale;
  r.theorem = theorem_tag(population, statistic);
  return r;
}

MomentReport moment(std::uint64_t x, int h, Population population, Statistic statistic, int power,
                    const ConstantEvaluator& constants, const MomentOptions& options) {
  check_moment_request(x, h, population, power);
  const std::uint64_t grid[] = {x};
  const MomentSums sums = population == Population::h_full
                              ? hfull_moment_sums(grid, h, options.threads).front()
                              : sieve_moment_sums(grid, population == Population::all ? 0 : h, options.sieve).front();
  return moment_from_sums(sums, x, h, population, statistic, power, constants);
}

SumReport mertens_sum(std::uint64_t x, double b1) {
  if (x < 3) throw std::invalid_argument("Mertens sum needs x >= 3");
  CompensatedSum s;
  for (const std::uint64_t p : primes_up_to(x)) s.add(1.0 / static_cast<double>(p));
  SumReport r;
  r.x = x;
  r.exact = s.value();
  const double xd = static_cast<double>(x);
  r.predicted = loglog(xd) + b1;
  r.residual = r.exact - r.predicted;
  r.scale = 1.0 / std::log(xd);
  r.normalized_residual = r.residual / r.scale;
  return r;
}

SumReport saidak_double_sum(std::uint64_t x, double b1, double zeta2, double zeta_sign) {
  if (x < 6) throw std::invalid_argument("double prime sum needs x >= 6");
  const std::vector<std::uint64_t> primes = primes_up_to(x / 2);
  // prefix[i] = sum of 1/q over the first i primes
  std::vector<double> prefix(primes.size() + 1, 0.0);
  CompensatedSum running;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    running.add(1.0 / static_cast<double>(primes[i]));
    prefix[i + 1] = running.value();
  }
  CompensatedSum total;
  for (const std::uint64_t p : primes) {
    const std::uint64_t qmax = x / p;
    if (qmax < 2) break;
    const auto k = static_cast<std::size_t>(std::upper_bound(primes.begin(), primes.end(), qmax) - primes.begin());
    total.add(prefix[k] / static_cast<double>(p));
  }
  SumReport r;
  r.x = x;
  r.exact = total.value();
  const double xd = static_cast<double>(x);
  const double ll = loglog(xd);
  r.predicted = ll * ll + 2.0 * b1 * ll + b1 * b1 + zeta_sign * zeta2;
  r.residual = r.exact - r.predicted;
  r.scale = ll / std::log(xd);
  r.normalized_residual = r.residual / r.scale;
  return r;
}

std::vector<VarianceReport> variance_hfull(std::span<const std::uint64_t> grid, int h,
                                           const ConstantEvaluator& constants, unsigned threads) {
  check_grid_sorted(grid);
  if (grid.front() < 3) throw std::invalid_argument("variance needs x >= 3");
  if (h < 2 || h > 16) throw std::invalid_argument("h must lie in [2, 16]");
  const HFullEnumerator e(grid.back(), h);
  auto binned = e.reduce<Binned<VarianceBin>>(threads, [&](const HFullNode& node, Binned<VarianceBin>& acc) {
    if (acc.bins.empty()) acc.bins.resize(grid.size());
    VarianceBin& b = acc.bins[bin_of(grid, node.n)];
    ++b.count;
    if (node.n < 3) return;
    const double ll = loglog(static_cast<double>(node.n));
    const double w = node.omega;
    b.omega2 += static_cast<u128>(node.omega) * node.omega;
    b.omega_loglog.add(w * ll);
    b.loglog2.add(ll * ll);
    b.deviation2.add((w - ll) * (w - ll));
  });
  binned.bins.resize(grid.size());
  for (std::size_t i = 1; i < grid.size(); ++i) binned.bins[i].merge(binned.bins[i - 1]);

  const double gamma0 = constants.gamma_coefficient(0, h).value;
  const double d2 = constants.d2(h).value;
  std::vector<VarianceReport> out;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const VarianceBin& b = binned.bins[i];
    VarianceReport r;
    r.x = grid[i];
    r.h = h;
    const double xd = static_cast<double>(r.x);
    const double root = std::pow(xd, 1.0 / h);
    const double ll = loglog(xd);
    r.exact_variance_sum = b.deviation2.value();
    r.predicted = gamma0 * root * ll + d2 * gamma0 * root;
    r.residual = r.exact_variance_sum - r.predicted;
    r.scale = root * ll / std::log(xd);
    r.normalized_residual = r.residual / r.scale;
    r.sum_omega2 = b.omega2;
    r.sum_omega_loglog = b.omega_loglog.value();
    r.sum_loglog2 = b.loglog2.value();
    // only n = 1 is h-full and below 3
    r.excluded_count = b.count > 0 ? 1 : 0;
    out.push_back(r);
  }
  return out;
}

VarianceReport variance_hfull(std::uint64_t x, int h, const ConstantEvaluator& constants, unsigned threads) {
  const std::uint64_t grid[] = {x};
  return variance_hfull(grid, h, constants, threads).front();
}

ConcentrationReport concentration(std::uint64_t x, int h, ConcentrationMode mode, double parameter,
                                  unsigned threads) {
  if (x < 16) throw std::invalid_argument("concentration needs x >= 16");
  if (h < 2) throw std::invalid_argument("h must be >= 2");
  if (!(parameter > 0.0)) throw std::invalid_argument("epsilon / threshold must be positive");
  struct Counts {
    std::uint64_t population = 0;
    std::uint64_t exceptional = 0;
    void merge(const Counts& o) {
      population += o.population;
      exceptional += o.exceptional;
    }
  };
  const HFullEnumerator e(x, h);
  const Counts c = e.reduce<Counts>(threads, [&](const HFullNode& node, Counts& acc) {
    if (node.n < 3) return;
    ++acc.population;
    const double ll = loglog(static_cast<double>(node.n));
    const double dev = std::abs(static_cast<double>(node.omega) - ll);
    const double limit = mode == ConcentrationMode::epsilon ? parameter * ll : parameter * std::sqrt(ll);
    if (dev >= limit) ++acc.exceptional;
  });
  ConcentrationReport r;
  r.x = x;
  r.h = h;
  r.mode = mode;
  r.parameter = parameter;
  r.population_count = c.population;
  r.exceptional_count = c.exceptional;
  r.fraction = c.population == 0 ? 0.0 : static_cast<double>(c.exceptional) / static_cast<double>(c.population);
  return r;
}

void check_residual_grid(std::span<const std::uint64_t> grid) {
  if (grid.size() < 4) throw std::invalid_argument("residual grid needs at least 4 points");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (grid[i] / 2 < grid[i - 1]) throw std::invalid_argument("residual grid must at least double each step");
  }
}

std::vector<std::uint64_t> geometric_grid(std::uint64_t lo, std::uint64_t hi, std::uint64_t factor) {
  if (lo == 0 || hi < lo || factor < 2) throw std::invalid_argument("grid needs 1 <= lo <= hi and factor >= 2");
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = lo;; x *= factor) {
    out.push_back(x);
    if (x > hi / factor) break;
  }
  return out;
}

}  // namespace omega
