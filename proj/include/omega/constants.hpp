#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "omega/constant_value.hpp"
#include "omega/polynomial.hpp"
#include "omega/prime_sums.hpp"

namespace omega {

/// Euler-Mascheroni constant, 30 significant digits.
inline constexpr double kEulerGamma = 0.577215664901532860606512090082;

inline constexpr std::uint64_t kDefaultTruncationPrime = 10'000'000;
inline constexpr std::uint64_t kMertensTruncationPrime = 100'000'000;

struct ConstantsConfig {
  std::uint64_t truncation_prime = kDefaultTruncationPrime;
  TailMode tail_mode = TailMode::prime_zeta;
};

/// C_{r,h} = prod_{j=h, j != r}^{2h-1} zeta(j/r). Throws std::invalid_argument
/// unless 2 <= h <= r <= 2h-1.
ConstantValue c_rh(int r, int h);

/// Every constant entering the moment and counting asymptotics, evaluated
/// against one prime table of the configured truncation prime.
///
/// Results are memoized; a memoized value is bit-identical to a fresh
/// evaluation. Thread-safe.
class ConstantEvaluator {
 public:
  /// Throws std::invalid_argument for a truncation prime below 1000.
  explicit ConstantEvaluator(ConstantsConfig config = {});

  const ConstantsConfig& config() const { return config_; }
  const PrimeSumEvaluator& sums() const { return sums_; }

  ConstantValue euler_gamma() const;
  ConstantValue zeta2() const;

  /// B1 = gamma + sum_p (log(1 - 1/p) + 1/p)
  ConstantValue mertens_b1() const;
  /// B2 = B1 + sum_p 1/(p(p-1))
  ConstantValue mertens_b2() const;

  // The prime sums the composite constants subtract.
  ConstantValue b1_prime_sum() const;              // sum_p (log(1-1/p) + 1/p)
  ConstantValue b2_minus_b1() const;               // sum_p 1/(p(p-1))
  ConstantValue c1_correction(int h) const;        // sum_p (p-1)/(p(p^h-1))
  ConstantValue c2_correction(int h) const;        // sum_p ((p^(h-1)-1)/(p^h-1))^2
  ConstantValue c3_correction(int h) const;        // sum_p h/(p^h-1)
  ConstantValue c4_correction(int h) const;        // sum_p ((p^h-hp+h-1)/((p-1)(p^h-1)))^2
  ConstantValue d2_correction(int h) const;        // sum_p (1/(p-p^(1-1/h)+1))^2
  ConstantValue b3_correction(int h) const;
  ConstantValue b4_correction(int h) const;

  // h-free constants.
  ConstantValue c1(int h) const;
  ConstantValue c2(int h) const;
  ConstantValue c3(int h) const;
  ConstantValue c4(int h) const;

  /// L_h(r) = sum_p 1/(p^(r/h - 1) (p - p^(1-1/h) + 1)); requires r > h.
  ConstantValue l_h(int h, int r) const;

  // h-full constants.
  ConstantValue d1(int h) const;
  ConstantValue d2(int h) const;
  ConstantValue b3(int h) const;
  ConstantValue b4(int h) const;

  /// gamma_{0,h} from its own Euler product
  /// prod_p (1 + (p - p^(1/h))/(p^2 (p^(1/h) - 1))).
  ConstantValue gamma0_product(int h) const;

  /// prod_p (1 - p^(-(2h+2)s) + sum_r a_{r,h} p^(-rs)) divided by
  /// prod_{q in excluded} (1 + q^(-hs)/(1 - q^(-s))). Requires s > 1/(2h+2),
  /// 2 <= h <= 16 and distinct excluded primes.
  ConstantValue euler_product_g(double s, int h, std::span<const std::uint64_t> excluded = {}) const;

  /// gamma_{q_1..q_r, i, h} = C_{h+i,h} G(1/(h+i)) with the exclusions
  /// applied to G; i in [0, h-1].
  ConstantValue gamma_coefficient(int i, int h, std::span<const std::uint64_t> excluded = {}) const;

 private:
  template <class Fn>
  ConstantValue cached(const std::string& key, Fn&& compute) const;

  ConstantsConfig config_;
  PrimeSumEvaluator sums_;
  mutable std::mutex mutex_;
  mutable std::map<std::string, ConstantValue> cache_;
};

/// B1 with its own prime table (default P = 10^8).
ConstantValue mertens_b1(std::uint64_t truncation_prime = kMertensTruncationPrime,
                         TailMode mode = TailMode::prime_zeta);
/// B2 with its own prime table (default P = 10^8).
ConstantValue mertens_b2(std::uint64_t truncation_prime = kMertensTruncationPrime,
                         TailMode mode = TailMode::prime_zeta);

}  // namespace omega
