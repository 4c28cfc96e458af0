#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "omega/constant_value.hpp"
#include "omega/polynomial.hpp"

namespace omega {

/// |term(p)| <= coefficient * p^-exponent for every prime beyond the truncation point.
struct TailMajorant {
  double coefficient = 1.0;
  double exponent = 2.0;
};

/// Multiplier absorbing the unspecified constant in the prime-tail estimate
/// sum_{p >= x} p^-tau ~ 1/((tau-1) x^(tau-1) log x).
inline constexpr double kTailSafetyFactor = 2.0;

/// Smallest truncation prime accepted by prime_sum_constant.
inline constexpr std::uint64_t kMinTruncationPrime = 1000;

/// kTailSafetyFactor * c / ((tau-1) P^(tau-1) log P).
double prime_tail_estimate(double coefficient, double tau, double truncation_prime);

/// value = sum_{p <= P} term(p); tail_bound from the majorant. Throws
/// std::invalid_argument if tau <= 1 or P < 1000.
ConstantValue prime_sum_constant(const std::function<double(std::uint64_t)>& term,
                                 std::uint64_t truncation_prime, TailMajorant majorant,
                                 std::string name = "prime_sum");

/// Same as above over a caller-supplied prime list (all primes <= P).
ConstantValue prime_sum_constant(const std::function<double(std::uint64_t)>& term,
                                 std::span<const std::uint64_t> primes, std::uint64_t truncation_prime,
                                 TailMajorant majorant, std::string name = "prime_sum");

/// Prime zeta function P(s) = sum_p p^-s for real s > 1, from
/// P(s) = sum_m mu(m)/m log zeta(ms). Thread-safe, memoized.
class PrimeZeta {
 public:
  struct Value {
    double value = 0.0;
    double error = 0.0;
  };

  /// Throws std::domain_error for s <= 1.
  Value operator()(double s) const;

 private:
  mutable std::mutex mutex_;
  mutable std::map<double, Value> cache_;
};

/// How a truncated prime sum accounts for the primes beyond P.
enum class TailMode {
  /// Plain truncation; tail_bound from the p^-tau majorant.
  majorant,
  /// Tail summed through prime zeta values; tail_bound covers what remains.
  prime_zeta,
};

/// A prime sum sum_p f(p) described twice: exactly per prime, and as a power
/// series f(p) = sum_k c_k v^k in v = p^-alpha, valid once p exceeds the
/// truncation point. The series drives both tail treatments.
struct PrimeSeries {
  std::function<double(std::uint64_t)> term;
  double alpha = 1.0;
  Series coefficients;
};

/// Evaluates prime sums and Euler products against one shared prime table.
/// Thread-safe; power sums over the table are memoized per alpha.
class PrimeSumEvaluator {
 public:
  /// Throws std::invalid_argument for P < 1000.
  PrimeSumEvaluator(std::uint64_t truncation_prime, TailMode mode);

  std::uint64_t truncation_prime() const { return largest_prime_; }
  TailMode mode() const { return mode_; }
  std::span<const std::uint64_t> primes() const { return *primes_; }

  /// sum_p term(p). Throws std::invalid_argument when the series decays no
  /// faster than p^-1 (k0 * alpha <= 1).
  ConstantValue sum(std::string name, const PrimeSeries& series) const;

  /// prod_p F(p), given term(p) = log F(p) and the series of log F.
  ConstantValue product(std::string name, const PrimeSeries& log_series) const;

  const PrimeZeta& prime_zeta() const { return *prime_zeta_; }

  /// Series length that makes the truncated expansion negligible at this P.
  std::size_t series_length(double alpha) const;

 private:
  struct PowerSums {
    std::vector<double> value;       // sum_{p <= P} p^(-k alpha), index k
    std::vector<double> magnitude;
  };
  const PowerSums& power_sums(double alpha) const;

  std::uint64_t largest_prime_ = 0;
  TailMode mode_;
  std::shared_ptr<const std::vector<std::uint64_t>> primes_;
  std::shared_ptr<PrimeZeta> prime_zeta_;
  mutable std::mutex mutex_;
  mutable std::map<double, PowerSums> power_sums_;
};

}  // namespace omega
