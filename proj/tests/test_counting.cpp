#include <gtest/gtest.h>

#include <cmath>

#include "omega/counting.hpp"
#include "omega/hfull.hpp"
#include "omega/zeta.hpp"
#include "oracle.hpp"

using namespace omega;

namespace {

const ConstantEvaluator& evaluator() {
  static const ConstantEvaluator ev;
  return ev;
}

std::uint64_t brute_count(std::uint64_t x, int h, bool full, std::span<const std::uint64_t> excluded) {
  std::uint64_t c = 0;
  for (std::uint64_t n = 1; n <= x; ++n) {
    bool coprime = true;
    for (const std::uint64_t q : excluded) coprime = coprime && n % q != 0;
    if (!coprime) continue;
    if (full ? oracle::h_full(n, h) : oracle::h_free(n, h)) ++c;
  }
  return c;
}

}  // namespace

TEST(CountHFree, SmallExamples) {
  const CountComparison c = count_h_free(100, 2);
  EXPECT_EQ(c.exact, 61u);
  EXPECT_NEAR(c.predicted, 60.79271018540266, 1e-10);
  EXPECT_NEAR(c.residual, 61 - c.predicted, 1e-12);
  EXPECT_NEAR(c.scale, 10.0, 1e-12);

  const std::uint64_t two[] = {2};
  const CountComparison odd = count_h_free(100, 2, two);
  EXPECT_EQ(odd.exact, brute_count(100, 2, false, two));
  EXPECT_EQ(odd.exact, 41u);
  EXPECT_NEAR(odd.predicted, 2.0 / 3.0 * 60.79271018540266, 1e-10);
  EXPECT_NEAR(odd.scale, 20.0, 1e-12);

  for (int h = 2; h <= 6; ++h) EXPECT_EQ(count_h_free(1, h).exact, 1u);
}

TEST(CountHFree, MatchesBruteForceWithExclusions) {
  const std::vector<std::vector<std::uint64_t>> sets = {{}, {2}, {3, 7}, {2, 3, 5}};
  for (int h = 2; h <= 4; ++h) {
    for (const auto& ex : sets) {
      for (const std::uint64_t x : {1ull, 2ull, 17ull, 1000ull, 30000ull}) {
        EXPECT_EQ(count_h_free(x, h, ex).exact, brute_count(x, h, false, ex)) << x << " h=" << h;
      }
    }
  }
}

TEST(CountHFree, ExclusionsOnlyRemove) {
  const std::uint64_t a[] = {5}, b[] = {5, 11};
  for (int h = 2; h <= 3; ++h) {
    const auto n0 = count_h_free(200000, h).exact;
    const auto n1 = count_h_free(200000, h, a).exact;
    const auto n2 = count_h_free(200000, h, b).exact;
    EXPECT_GE(n0, n1);
    EXPECT_GE(n1, n2);
  }
}

TEST(CountHFree, Errors) {
  const std::uint64_t composite[] = {4}, repeated[] = {3, 3};
  const std::uint64_t many[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
  EXPECT_THROW(count_h_free(0, 2), std::invalid_argument);
  EXPECT_THROW(count_h_free(10, 1), std::invalid_argument);
  EXPECT_THROW(count_h_free(10, 2, composite), std::invalid_argument);
  EXPECT_THROW(count_h_free(10, 2, repeated), std::invalid_argument);
  EXPECT_THROW(count_h_free(10, 2, many), std::invalid_argument);
  SieveOptions tiny;
  tiny.memory_budget = 16;
  EXPECT_THROW(count_h_free(1000000, 2, {}, tiny), BudgetExceeded);
}

TEST(CountHFree, NormalizedResidualStaysSmall) {
  const std::vector<std::vector<std::uint64_t>> sets = {{}, {2}, {2, 3}, {3, 5, 7}};
  for (const auto& ex : sets) {
    for (std::uint64_t x = 10000; x <= 10000000; x *= 10) {
      const CountComparison c = count_h_free(x, 2, ex);
      EXPECT_LE(std::abs(c.normalized_residual), 5.0) << x << " r=" << ex.size();
    }
  }
}

TEST(CountHFree, DensityConvergesAtTenToTheSeven) {
  const CountComparison c = count_h_free(10000000, 2);
  EXPECT_NEAR(static_cast<double>(c.exact) / 1e7, 1.0 / zeta_real(2.0).value, 5e-4);
  const std::uint64_t two[] = {2};
  const CountComparison odd = count_h_free(10000000, 2, two);
  EXPECT_NEAR(static_cast<double>(odd.exact) / 1e7, 2.0 / 3.0 / zeta_real(2.0).value, 5e-4);
}

TEST(CountHFull, SmallExamples) {
  const CountComparison c = count_h_full(100, 2, evaluator());
  EXPECT_EQ(c.exact, 14u);
  EXPECT_NEAR(c.predicted, 2.1732543125195541382 * 10 - 1.48795066353227263 * std::cbrt(100.0), 1e-9);
  const std::uint64_t two[] = {2};
  EXPECT_EQ(count_h_full(100, 2, evaluator(), two).exact, 6u);
  EXPECT_EQ(count_h_full(100, 3, evaluator()).exact, 7u);
  for (int h = 2; h <= 6; ++h) EXPECT_EQ(count_h_full(1, h, evaluator()).exact, 1u);
  EXPECT_THROW(count_h_full(100, 1, evaluator()), std::invalid_argument);
  EXPECT_THROW(count_h_full(100, 17, evaluator()), std::invalid_argument);
}

TEST(CountHFull, MatchesBruteForce) {
  const std::vector<std::vector<std::uint64_t>> sets = {{}, {2}, {3, 5}};
  for (int h = 2; h <= 4; ++h)
    for (const auto& ex : sets)
      EXPECT_EQ(count_h_full(50000, h, evaluator(), ex).exact, brute_count(50000, h, true, ex)) << h;
}

TEST(CountHFull, EngineAgreesWithSieve) {
  for (int h = 2; h <= 3; ++h) {
    std::uint64_t c = 0;
    SieveOptions opt;
    opt.segment_size = 65536;
    sieve_range(
        1, 2000000,
        [&](std::span<const SieveRecord> recs) {
          for (const SieveRecord& r : recs)
            if (r.n == 1 || r.min_exponent >= h) ++c;
        },
        opt);
    EXPECT_EQ(count_h_full(2000000, h, evaluator()).exact, c);
  }
}

TEST(CountHFull, LeadingTermRatio) {
  const CountComparison c = count_h_full(10000000000ull, 2, evaluator());
  EXPECT_NEAR(static_cast<double>(c.exact) / 1e5 / 2.1732543125195541382, 1.0, 0.02);
  EXPECT_NEAR(c.scale, std::pow(1e10, 1.0 / 3.0), 1e-6);
}

TEST(CountHFull, LowerTermResidualShrinks) {
  double last = 1e300;
  for (const std::uint64_t x : {1000000ull, 100000000ull, 10000000000ull}) {
    const CountComparison c = count_h_full(x, 2, evaluator());
    EXPECT_LT(std::abs(c.residual) / std::cbrt(static_cast<double>(x)), last);
    last = std::abs(c.residual) / std::cbrt(static_cast<double>(x));
    EXPECT_LT(std::abs(c.residual) / std::sqrt(static_cast<double>(x)), 0.01);
  }
}

TEST(Eta, DiagnosticExponent) {
  EXPECT_DOUBLE_EQ(eta_diagnostic(2), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(eta_diagnostic(4), 1.0 / 7.0);
}

TEST(KH, Examples) {
  EXPECT_EQ(k_h_value(1, 2), 1u);
  EXPECT_EQ(k_h_value(1, 5), 1u);
  EXPECT_EQ(k_h_value(64, 2), 2u);
  EXPECT_EQ(k_h_value(4, 2), 1u);
  EXPECT_EQ(k_h_value(2, 2), 0u);
  EXPECT_THROW(k_h_value(0, 2), std::invalid_argument);
  EXPECT_THROW(k_h_value(8, 1), std::invalid_argument);
}

TEST(KH, SupportIsTheHFullNumbers) {
  for (int h = 2; h <= 3; ++h)
    for (std::uint64_t n = 1; n <= 5000; ++n) EXPECT_EQ(k_h_value(n, h) > 0, oracle::h_full(n, h)) << n;
}

TEST(SH, ExactAgainstNestedLoops) {
  // a^2 b^3 <= y
  std::uint64_t nested = 0;
  for (std::uint64_t b = 1; b * b * b <= 100; ++b)
    for (std::uint64_t a = 1; a * a * b * b * b <= 100; ++a) ++nested;
  EXPECT_EQ(s_h_exact(100, 2), nested);
  for (int h = 2; h <= 4; ++h) {
    std::uint64_t acc = 0;
    for (std::uint64_t n = 1; n <= 3000; ++n) acc += k_h_value(n, h);
    EXPECT_EQ(s_h_exact(3000, h), acc) << h;
  }
  for (int h = 2; h <= 8; ++h) EXPECT_EQ(s_h_exact((1ull << h) - 1, h), 1u);
}

TEST(SH, PartialAtOne) {
  const CountComparison c = s_h_partial(1, 2);
  EXPECT_EQ(c.exact, 1u);
  EXPECT_NEAR(c.predicted, 2.612375348685488343349 - 2.447580736233658231091, 1e-12);
}

TEST(SH, RemainderSmallAgainstLeadingTerms) {
  for (const std::uint64_t y : {1000000ull, 1000000000000ull}) {
    const CountComparison c = s_h_partial(y, 2);
    EXPECT_LT(std::abs(c.residual), 0.05 * std::cbrt(static_cast<double>(y)) + 10.0) << y;
  }
}
