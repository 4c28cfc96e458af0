#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "omega/constants.hpp"
#include "omega/sieve.hpp"

namespace omega {

/// Exact count next to its predicted main terms.
struct CountComparison {
  std::uint64_t x = 0;
  int h = 0;
  std::vector<std::uint64_t> excluded;
  std::uint64_t exact = 0;
  double predicted = 0.0;
  double residual = 0.0;
  /// residual / scale
  double normalized_residual = 0.0;
  double scale = 1.0;
};

/// Diagnostic exponent for the h-full counting error: the upper end 1/(2h-1)
/// of the known range, so any admissible exponent keeps the ratio bounded.
double eta_diagnostic(int h);

/// Largest number of excluded primes accepted by the h-free count.
inline constexpr std::size_t kMaxExcludedPrimes = 10;

/// h-free n <= x coprime to every excluded prime; predicted
/// prod_q (q^h - q^(h-1))/(q^h - 1) * x/zeta(h) on the scale 2^r x^(1/h).
/// Throws std::invalid_argument for x = 0, h < 2, repeated/non-prime
/// exclusions or more than kMaxExcludedPrimes of them; BudgetExceeded when
/// the sieve cannot cover [1, x].
CountComparison count_h_free(std::uint64_t x, int h, std::span<const std::uint64_t> excluded = {},
                             const SieveOptions& options = {});

/// h-full n <= x coprime to every excluded prime; predicted
/// sum_{i<h} gamma_{i} x^(1/(h+i)) on the scale x^eta_diagnostic(h).
/// Requires 2 <= h <= 16.
CountComparison count_h_full(std::uint64_t x, int h, const ConstantEvaluator& constants,
                             std::span<const std::uint64_t> excluded = {}, unsigned threads = 1);

/// Number of ways to write n = m_h^h m_{h+1}^(h+1) ... m_{2h-1}^(2h-1).
/// Throws std::invalid_argument for n = 0 or h < 2.
std::uint64_t k_h_value(std::uint64_t n, int h);

/// sum_{n <= y} k_h(n) against sum_r C_{r,h} y^(1/r); the residual is the
/// empirical remainder, scaled by y^eta_diagnostic(h).
CountComparison s_h_partial(std::uint64_t y, int h);

/// Exact sum_{n <= y} k_h(n) by counting tuples.
std::uint64_t s_h_exact(std::uint64_t y, int h);

}  // namespace omega
