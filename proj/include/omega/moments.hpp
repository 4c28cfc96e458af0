#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "omega/arith.hpp"
#include "omega/constants.hpp"
#include "omega/sieve.hpp"

namespace omega {

enum class Population { all, h_free, h_full };
enum class Statistic { omega, big_omega };

const char* to_string(Population p);
const char* to_string(Statistic s);
/// Accepts "all", "h-free", "h-full" / "omega", "Omega" ("big-omega" too).
/// Throw std::invalid_argument on anything else.
Population parse_population(const std::string& text);
Statistic parse_statistic(const std::string& text);

/// Exact power sums of omega and Omega over one population, from one pass.
struct MomentSums {
  u128 count = 0;
  u128 omega1 = 0;
  u128 omega2 = 0;
  u128 big1 = 0;
  u128 big2 = 0;

  void add(unsigned omega, unsigned big_omega) {
    ++count;
    omega1 += omega;
    omega2 += static_cast<u128>(omega) * omega;
    big1 += big_omega;
    big2 += static_cast<u128>(big_omega) * big_omega;
  }
  void merge(const MomentSums& o) {
    count += o.count;
    omega1 += o.omega1;
    omega2 += o.omega2;
    big1 += o.big1;
    big2 += o.big2;
  }
  u128 get(Statistic s, int power) const;
};

struct MomentOptions {
  SieveOptions sieve;
  /// Worker threads for the h-full enumeration.
  unsigned threads = 1;
};

/// Sums at each grid point (sorted, distinct) from one sieve pass up to the
/// largest point. h = 0 means every integer, otherwise the h-free ones.
std::vector<MomentSums> sieve_moment_sums(std::span<const std::uint64_t> grid, int h,
                                          const SieveOptions& options = {});

/// Same for the h-full integers, from one enumeration up to the largest point.
std::vector<MomentSums> hfull_moment_sums(std::span<const std::uint64_t> grid, int h, unsigned threads = 1);

/// One exact power sum beside the main terms the matching theorem states.
struct MomentReport {
  std::uint64_t x = 0;
  int h = 0;
  Population population = Population::all;
  Statistic statistic = Statistic::omega;
  int power = 1;
  u128 exact_sum = 0;
  double predicted = 0.0;
  double residual = 0.0;
  double scale = 1.0;
  double normalized_residual = 0.0;
  std::string theorem;
};

/// Throws std::invalid_argument for x < 3, power outside {1, 2}, h < 2 on a
/// restricted population, or the unsupported all/power-2 combination.
void check_moment_request(std::uint64_t x, int h, Population population, int power);

/// Builds the report from already computed sums.
MomentReport moment_from_sums(const MomentSums& sums, std::uint64_t x, int h, Population population,
                              Statistic statistic, int power, const ConstantEvaluator& constants);

/// predicted = weight * x^(1/root) * (loglog2 (loglog x)^2 + loglog1 loglog x + constant)
struct MainTerms {
  double weight = 1.0;
  int root = 1;
  double loglog2 = 0.0;
  double loglog1 = 0.0;
  double constant = 0.0;

  double leading() const { return weight * (loglog2 != 0.0 ? loglog2 : loglog1); }
  double evaluate(std::uint64_t x) const;
};

MainTerms main_terms(int h, Population population, Statistic statistic, int power,
                     const ConstantEvaluator& constants);

/// main_terms(...).evaluate(x) after validating the request.
double predicted_moment(std::uint64_t x, int h, Population population, Statistic statistic, int power,
                        const ConstantEvaluator& constants);
double moment_scale(std::uint64_t x, int h, Population population, int power);
std::string theorem_tag(Population population, Statistic statistic);

MomentReport moment(std::uint64_t x, int h, Population population, Statistic statistic, int power,
                    const ConstantEvaluator& constants, const MomentOptions& options = {});

/// Real-valued sum next to its prediction.
struct SumReport {
  std::uint64_t x = 0;
  double exact = 0.0;
  double predicted = 0.0;
  double residual = 0.0;
  double scale = 1.0;
  double normalized_residual = 0.0;
};

/// sum_{p<=x} 1/p against loglog x + B1; normalized residual = residual * log x.
/// Throws std::invalid_argument for x < 3.
SumReport mertens_sum(std::uint64_t x, double b1);

/// sum over ordered prime pairs with pq <= x of 1/(pq) (p = q included)
/// against (loglog x)^2 + 2 B1 loglog x + B1^2 + zeta_sign * zeta(2), on the
/// scale loglog x / log x. Throws std::invalid_argument for x < 6.
SumReport saidak_double_sum(std::uint64_t x, double b1, double zeta2, double zeta_sign = -1.0);

struct VarianceReport {
  std::uint64_t x = 0;
  int h = 0;
  /// sum over h-full 3 <= n <= x of (omega(n) - loglog n)^2
  double exact_variance_sum = 0.0;
  double predicted = 0.0;
  double residual = 0.0;
  double scale = 1.0;
  double normalized_residual = 0.0;
  /// h-full n < 3 left out (just n = 1)
  std::uint64_t excluded_count = 0;
  // the expansion sum omega^2 - 2 sum omega loglog n + sum (loglog n)^2
  u128 sum_omega2 = 0;
  double sum_omega_loglog = 0.0;
  double sum_loglog2 = 0.0;
};

/// Throws std::invalid_argument for x < 3 or h outside [2, 16].
VarianceReport variance_hfull(std::uint64_t x, int h, const ConstantEvaluator& constants, unsigned threads = 1);

/// Several x from one enumeration; grid sorted and distinct.
std::vector<VarianceReport> variance_hfull(std::span<const std::uint64_t> grid, int h,
                                           const ConstantEvaluator& constants, unsigned threads = 1);

enum class ConcentrationMode {
  /// |omega(n) - loglog n| >= parameter * loglog n
  epsilon,
  /// |omega(n) - loglog n| >= parameter * sqrt(loglog n), parameter = g(x)
  threshold,
};

struct ConcentrationReport {
  std::uint64_t x = 0;
  int h = 0;
  ConcentrationMode mode = ConcentrationMode::epsilon;
  double parameter = 0.0;
  std::uint64_t exceptional_count = 0;
  /// h-full n with 3 <= n <= x
  std::uint64_t population_count = 0;
  double fraction = 0.0;
};

/// Throws std::invalid_argument for x < 16, h < 2 or parameter <= 0.
ConcentrationReport concentration(std::uint64_t x, int h, ConcentrationMode mode, double parameter,
                                  unsigned threads = 1);

template <class Report>
struct ResidualSeries {
  std::vector<Report> points;
  double max_abs_normalized = 0.0;
};

/// Validates a residual grid: at least 4 points, each at least twice the last.
void check_residual_grid(std::span<const std::uint64_t> grid);

template <class Report>
ResidualSeries<Report> residual_series(std::span<const std::uint64_t> grid,
                                       const std::function<Report(std::uint64_t)>& report) {
  check_residual_grid(grid);
  ResidualSeries<Report> out;
  for (const std::uint64_t x : grid) {
    out.points.push_back(report(x));
    const double r = out.points.back().normalized_residual;
    out.max_abs_normalized = std::max(out.max_abs_normalized, r < 0 ? -r : r);
  }
  return out;
}

/// x_k = lo * factor^k up to hi (inclusive, lo always present).
/// Throws std::invalid_argument for lo = 0, hi < lo or factor < 2.
std::vector<std::uint64_t> geometric_grid(std::uint64_t lo, std::uint64_t hi, std::uint64_t factor);

}  // namespace omega
