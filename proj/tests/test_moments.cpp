#include <gtest/gtest.h>

#include <cmath>

#include "omega/moments.hpp"
#include "omega/primes.hpp"
#include "omega/zeta.hpp"
#include "oracle.hpp"

using namespace omega;

namespace {

const ConstantEvaluator& evaluator() {
  static const ConstantEvaluator ev;
  return ev;
}

struct Brute {
  std::uint64_t w1 = 0, w2 = 0, b1 = 0, b2 = 0, count = 0;
};

Brute brute(std::uint64_t x, int h, Population pop) {
  Brute s;
  for (std::uint64_t n = 1; n <= x; ++n) {
    if (pop == Population::h_free && !oracle::h_free(n, h)) continue;
    if (pop == Population::h_full && !oracle::h_full(n, h)) continue;
    const std::uint64_t w = oracle::omega(n), b = oracle::big_omega(n);
    ++s.count;
    s.w1 += w;
    s.w2 += w * w;
    s.b1 += b;
    s.b2 += b * b;
  }
  return s;
}

}  // namespace

TEST(Moments, HandExamples) {
  const ConstantEvaluator& ev = evaluator();
  EXPECT_EQ(moment(10, 2, Population::h_free, Statistic::omega, 1, ev).exact_sum, 8u);
  EXPECT_EQ(moment(10, 2, Population::h_free, Statistic::omega, 2, ev).exact_sum, 12u);
  const MomentReport r = moment(100, 2, Population::h_full, Statistic::omega, 1, ev);
  EXPECT_EQ(r.exact_sum, 16u);
  EXPECT_EQ(r.theorem, theorem_tag(Population::h_full, Statistic::omega));
}

TEST(Moments, MatchBruteForce) {
  for (int h = 2; h <= 4; ++h) {
    for (const Population pop : {Population::all, Population::h_free, Population::h_full}) {
      const Brute b = brute(20000, h, pop);
      const auto sums = pop == Population::h_full
                            ? hfull_moment_sums(std::vector<std::uint64_t>{20000}, h)
                            : sieve_moment_sums(std::vector<std::uint64_t>{20000}, pop == Population::all ? 0 : h);
      ASSERT_EQ(sums.size(), 1u);
      EXPECT_EQ(sums[0].count, b.count);
      EXPECT_EQ(sums[0].get(Statistic::omega, 1), b.w1);
      EXPECT_EQ(sums[0].get(Statistic::omega, 2), b.w2);
      EXPECT_EQ(sums[0].get(Statistic::big_omega, 1), b.b1);
      EXPECT_EQ(sums[0].get(Statistic::big_omega, 2), b.b2);
    }
  }
}

TEST(Moments, GridSumsEqualSingleRuns) {
  const std::vector<std::uint64_t> grid = {1000, 5000, 20000, 100000};
  const auto free_sums = sieve_moment_sums(grid, 3);
  const auto full_sums = hfull_moment_sums(grid, 2, 2);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const std::vector<std::uint64_t> one = {grid[i]};
    EXPECT_EQ(free_sums[i].big2, sieve_moment_sums(one, 3)[0].big2);
    EXPECT_EQ(full_sums[i].omega2, hfull_moment_sums(one, 2)[0].omega2);
  }
}

TEST(Moments, SecondPowerDominatesFirst) {
  for (const Population pop : {Population::h_free, Population::h_full}) {
    for (const Statistic st : {Statistic::omega, Statistic::big_omega}) {
      for (const std::uint64_t x : {100ull, 10000ull, 1000000ull}) {
        const auto p1 = moment(x, 2, pop, st, 1, evaluator()).exact_sum;
        const auto p2 = moment(x, 2, pop, st, 2, evaluator()).exact_sum;
        EXPECT_GE(p2, p1);
      }
    }
  }
}

TEST(Moments, OmegaSumIsSumOfFloors) {
  for (const std::uint64_t x : {1000ull, 100000ull, 3000000ull}) {
    std::uint64_t floors = 0;
    for (const std::uint64_t p : primes_up_to(x)) floors += x / p;
    const auto sums = sieve_moment_sums(std::vector<std::uint64_t>{x}, 0);
    EXPECT_EQ(sums[0].omega1, floors);
  }
}

TEST(Moments, RequestValidation) {
  const ConstantEvaluator& ev = evaluator();
  EXPECT_THROW(moment(2, 2, Population::h_free, Statistic::omega, 1, ev), std::invalid_argument);
  EXPECT_THROW(moment(100, 2, Population::h_free, Statistic::omega, 3, ev), std::invalid_argument);
  EXPECT_THROW(moment(100, 1, Population::h_full, Statistic::omega, 1, ev), std::invalid_argument);
  EXPECT_THROW(moment(100, 17, Population::h_full, Statistic::omega, 1, ev), std::invalid_argument);
  EXPECT_THROW(moment(100, 0, Population::all, Statistic::omega, 2, ev), std::invalid_argument);
  EXPECT_THROW(parse_population("squarefree"), std::invalid_argument);
  EXPECT_THROW(parse_statistic("OMEGA"), std::invalid_argument);
  EXPECT_EQ(parse_statistic("Omega"), Statistic::big_omega);
  EXPECT_EQ(parse_population("h-full"), Population::h_full);
}

TEST(Moments, MainTermStructure) {
  const ConstantEvaluator& ev = evaluator();
  for (int h = 2; h <= 5; ++h) {
    const MainTerms free1 = main_terms(h, Population::h_free, Statistic::omega, 1, ev);
    EXPECT_NEAR(free1.weight, 1.0 / zeta_real(h).value, 1e-14);
    EXPECT_DOUBLE_EQ(free1.constant, ev.c1(h).value);
    const MainTerms full1 = main_terms(h, Population::h_full, Statistic::omega, 1, ev);
    EXPECT_EQ(full1.root, h);
    EXPECT_NEAR(full1.leading(), ev.gamma0_product(h).value, 1e-9);
    // Omega over the h-full integers carries an extra factor h, h^2 for the square
    const MainTerms big1 = main_terms(h, Population::h_full, Statistic::big_omega, 1, ev);
    const MainTerms big2 = main_terms(h, Population::h_full, Statistic::big_omega, 2, ev);
    EXPECT_NEAR(big1.leading(), h * full1.leading(), 1e-9);
    EXPECT_NEAR(big2.leading(), h * h * full1.leading(), 1e-9);
    EXPECT_NEAR(big2.loglog1, (2 * ev.b3(h).value + 1) * h, 1e-9);
    EXPECT_DOUBLE_EQ(big2.constant, ev.b4(h).value);
  }
  const MainTerms all = main_terms(0, Population::all, Statistic::big_omega, 1, ev);
  EXPECT_NEAR(all.constant, ev.mertens_b2().value, 1e-15);
}

TEST(Moments, ClassicalMeanResidualSmall) {
  for (const Statistic st : {Statistic::omega, Statistic::big_omega}) {
    for (const std::uint64_t x : {10000ull, 1000000ull}) {
      const MomentReport r = moment(x, 0, Population::all, st, 1, evaluator());
      EXPECT_LT(std::abs(r.normalized_residual), 2.0) << x;
    }
  }
}

TEST(Moments, FreeFirstMomentSeriesBounded) {
  const std::vector<std::uint64_t> grid = {10000, 100000, 1000000, 10000000};
  const auto series = residual_series<MomentReport>(grid, [](std::uint64_t x) {
    return moment(x, 2, Population::h_free, Statistic::omega, 1, evaluator());
  });
  EXPECT_TRUE(std::isfinite(series.max_abs_normalized));
  EXPECT_LT(series.max_abs_normalized, 10.0);
}

TEST(ResidualSeries, DegenerateStatistic) {
  const std::vector<std::uint64_t> grid = {10, 20, 40, 80};
  const auto series = residual_series<SumReport>(grid, [](std::uint64_t x) {
    SumReport r;
    r.x = x;
    r.predicted = std::log(static_cast<double>(x));
    r.residual = r.exact - r.predicted;
    r.normalized_residual = r.residual;
    return r;
  });
  for (const SumReport& r : series.points) EXPECT_EQ(r.residual, -r.predicted);
  EXPECT_NEAR(series.max_abs_normalized, std::log(80.0), 1e-15);
}

TEST(ResidualSeries, GridChecks) {
  EXPECT_THROW(check_residual_grid(std::vector<std::uint64_t>{10, 20, 40}), std::invalid_argument);
  EXPECT_THROW(check_residual_grid(std::vector<std::uint64_t>{10, 20, 30, 80}), std::invalid_argument);
  EXPECT_NO_THROW(check_residual_grid(std::vector<std::uint64_t>{10, 20, 40, 80}));
  EXPECT_EQ(geometric_grid(10, 1000, 10), (std::vector<std::uint64_t>{10, 100, 1000}));
  EXPECT_EQ(geometric_grid(10, 999, 10), (std::vector<std::uint64_t>{10, 100}));
  EXPECT_THROW(geometric_grid(0, 10, 2), std::invalid_argument);
  EXPECT_THROW(geometric_grid(10, 100, 1), std::invalid_argument);
}

TEST(Mertens, SmallX) {
  const SumReport r = mertens_sum(10, evaluator().mertens_b1().value);
  EXPECT_NEAR(r.exact, 0.5 + 1.0 / 3 + 0.2 + 1.0 / 7, 1e-15);
  EXPECT_NEAR(r.exact, 1.17619, 1e-5);
  EXPECT_THROW(mertens_sum(2, 0.26), std::invalid_argument);
}

TEST(Mertens, ResidualDecays) {
  const double b1 = evaluator().mertens_b1().value;
  const SumReport a = mertens_sum(1000000, b1);
  const SumReport b = mertens_sum(100000000, b1);
  EXPECT_LT(std::abs(a.normalized_residual), 1.0);
  EXPECT_LT(std::abs(b.residual), std::abs(a.residual));
}

TEST(Saidak, SmallX) {
  const SumReport r = saidak_double_sum(10, 0.26, 1.64);
  EXPECT_NEAR(r.exact, 0.25 + 1.0 / 6 + 1.0 / 6 + 0.1 + 0.1 + 1.0 / 9, 1e-15);
  EXPECT_NEAR(r.exact, 0.894444, 1e-6);
  EXPECT_THROW(saidak_double_sum(5, 0.26, 1.64), std::invalid_argument);
}

TEST(Saidak, SignOfZetaTwoTerm) {
  const double b1 = evaluator().mertens_b1().value, z2 = evaluator().zeta2().value;
  const SumReport minus = saidak_double_sum(10000000, b1, z2, -1.0);
  const SumReport plus = saidak_double_sum(10000000, b1, z2, +1.0);
  EXPECT_LE(std::abs(minus.normalized_residual), 3.0);
  EXPECT_GT(std::abs(plus.normalized_residual), 2.3);
}

TEST(Saidak, BruteForcePairs) {
  const std::uint64_t x = 5000;
  const auto ps = primes_up_to(x);
  long double s = 0;
  for (const auto p : ps)
    for (const auto q : ps)
      if (p * q <= x) s += 1.0L / static_cast<long double>(p * q);
  EXPECT_NEAR(saidak_double_sum(x, 0.26, 1.64).exact, static_cast<double>(s), 1e-13);
}

TEST(Variance, SmallExample) {
  const VarianceReport r = variance_hfull(100, 2, evaluator());
  double s = 0;
  for (std::uint64_t n = 3; n <= 100; ++n) {
    if (!oracle::h_full(n, 2)) continue;
    const double d = oracle::omega(n) - std::log(std::log(static_cast<double>(n)));
    s += d * d;
  }
  EXPECT_NEAR(r.exact_variance_sum, s, 1e-12);
  EXPECT_EQ(r.excluded_count, 1u);
  const double t4 = 1.0 - std::log(std::log(4.0));
  EXPECT_NEAR(t4 * t4, 0.4534, 1e-4);
  EXPECT_THROW(variance_hfull(2, 2, evaluator()), std::invalid_argument);
}

TEST(Variance, ExpansionIdentity) {
  const VarianceReport r = variance_hfull(1000000, 2, evaluator());
  const double expanded =
      static_cast<double>(r.sum_omega2) - 2.0 * r.sum_omega_loglog + r.sum_loglog2;
  EXPECT_NEAR(r.exact_variance_sum, expanded, 1e-9 * r.exact_variance_sum);
}

TEST(Variance, GridMatchesSinglePoints) {
  const std::vector<std::uint64_t> grid = {10000, 1000000};
  const auto reps = variance_hfull(grid, 3, evaluator());
  for (std::size_t i = 0; i < grid.size(); ++i)
    EXPECT_NEAR(reps[i].exact_variance_sum, variance_hfull(grid[i], 3, evaluator()).exact_variance_sum,
                1e-9 * reps[i].exact_variance_sum);
}

TEST(Concentration, MonotoneInEpsilon) {
  std::uint64_t last = ~0ull;
  for (const double eps : {0.1, 0.3, 0.5, 1.0, 2.0, 5.0}) {
    const ConcentrationReport r = concentration(100000000, 2, ConcentrationMode::epsilon, eps);
    EXPECT_LE(r.exceptional_count, last) << eps;
    last = r.exceptional_count;
  }
  EXPECT_EQ(concentration(1000000, 2, ConcentrationMode::threshold, 1e6).exceptional_count, 0u);
}

TEST(Concentration, BruteForce) {
  const ConcentrationReport r = concentration(100000, 2, ConcentrationMode::epsilon, 0.5);
  std::uint64_t bad = 0, pop = 0;
  for (std::uint64_t n = 3; n <= 100000; ++n) {
    if (!oracle::h_full(n, 2)) continue;
    ++pop;
    const double ll = std::log(std::log(static_cast<double>(n)));
    if (std::abs(oracle::omega(n) - ll) >= 0.5 * ll) ++bad;
  }
  EXPECT_EQ(r.population_count, pop);
  EXPECT_EQ(r.exceptional_count, bad);
  EXPECT_THROW(concentration(10, 2, ConcentrationMode::epsilon, 0.5), std::invalid_argument);
  EXPECT_THROW(concentration(100, 2, ConcentrationMode::epsilon, 0.0), std::invalid_argument);
}
