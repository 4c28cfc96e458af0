#include "omega/prime_sums.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "omega/arith.hpp"
#include "omega/factor.hpp"
#include "omega/primes.hpp"
#include "omega/zeta.hpp"

namespace omega {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Terms of the prime-zeta tail expansion below this are folded into the
// remainder bound instead of being summed.
constexpr double kNegligible = 1e-30;

// Coefficients of every series used here grow no faster than (1/0.8)^k:
// the nearest singularities are roots of 1 - v + v^h (modulus >= 0.84) and
// roots of unity.
constexpr double kSeriesRadius = 0.8;

int mobius(std::uint64_t m) {
  const FactoredInteger f = factorize(m);
  if (f.max_exponent() > 1) return 0;
  return f.factors().size() % 2 == 0 ? 1 : -1;
}

// Largest k whose tail term can still matter at this truncation point.
std::size_t tail_terms_needed(double alpha, double P) {
  const double ratio = std::pow(P, -alpha) / kSeriesRadius;
  if (ratio >= 1.0) return 600;
  const double k = (std::log(kNegligible) - std::log(P)) / std::log(ratio);
  return static_cast<std::size_t>(std::clamp(std::ceil(k), 4.0, 600.0));
}

}  // namespace

double prime_tail_estimate(double coefficient, double tau, double truncation_prime) {
  if (coefficient == 0.0) return 0.0;
  const double P = truncation_prime;
  return kTailSafetyFactor * coefficient / ((tau - 1.0) * std::pow(P, tau - 1.0) * std::log(P));
}

ConstantValue prime_sum_constant(const std::function<double(std::uint64_t)>& term,
                                 std::uint64_t truncation_prime, TailMajorant majorant, std::string name) {
  if (truncation_prime < kMinTruncationPrime) {
    throw std::invalid_argument("prime_sum_constant: truncation prime must be >= 1000");
  }
  const auto primes = primes_up_to(truncation_prime);
  return prime_sum_constant(term, primes, truncation_prime, majorant, std::move(name));
}

ConstantValue prime_sum_constant(const std::function<double(std::uint64_t)>& term,
                                 std::span<const std::uint64_t> primes, std::uint64_t truncation_prime,
                                 TailMajorant majorant, std::string name) {
  if (!(majorant.exponent > 1.0)) {
    throw std::invalid_argument("prime_sum_constant: majorant exponent must exceed 1");
  }
  if (truncation_prime < kMinTruncationPrime) {
    throw std::invalid_argument("prime_sum_constant: truncation prime must be >= 1000");
  }
  CompensatedSum acc;
  std::uint64_t largest = 0;
  for (const std::uint64_t p : primes) {
    if (p > truncation_prime) break;
    acc.add(term(p));
    largest = p;
  }
  ConstantValue out;
  out.name = std::move(name);
  out.value = acc.value();
  out.truncation_prime = largest;
  // the tail runs over primes > largest, so the tail estimate at `largest`
  // dominates it
  out.tail_bound = prime_tail_estimate(std::abs(majorant.coefficient), majorant.exponent,
                                       static_cast<double>(largest));
  if (out.tail_bound > 0.0) out.tail_bound += 8.0 * kEps * acc.magnitude();
  return out;
}

PrimeZeta::Value PrimeZeta::operator()(double s) const {
  if (!(s > 1.0)) throw std::domain_error("prime zeta needs s > 1");
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(s); it != cache_.end()) return it->second;
  }
  CompensatedSum acc;
  double error = 0.0;
  for (std::uint64_t m = 1;; ++m) {
    const double ms = static_cast<double>(m) * s;
    // stop once 2^-(ms) is below 2^-75 relative to the leading 2^-s
    if (m > 1 && ms - s > 75.0) {
      // log zeta(t) <= 3 * 2^-t for t >= 2, summed geometrically
      error += 6.0 * std::exp2(-ms);
      break;
    }
    const int mu = mobius(m);
    if (mu == 0) continue;
    const ConstantValue z = zeta_minus_one(ms, ZetaOptions{64});
    const double term = std::log1p(z.value) / static_cast<double>(m);
    acc.add(mu > 0 ? term : -term);
    error += z.tail_bound / (1.0 + z.value) / static_cast<double>(m);
  }
  Value v{acc.value(), error + 8.0 * kEps * acc.magnitude()};
  std::lock_guard lock(mutex_);
  cache_.emplace(s, v);
  return v;
}

PrimeSumEvaluator::PrimeSumEvaluator(std::uint64_t truncation_prime, TailMode mode) : mode_(mode) {
  if (truncation_prime < kMinTruncationPrime) {
    throw std::invalid_argument("truncation prime must be >= 1000");
  }
  primes_ = std::make_shared<const std::vector<std::uint64_t>>(primes_up_to(truncation_prime));
  largest_prime_ = primes_->back();
  prime_zeta_ = std::make_shared<PrimeZeta>();
}

std::size_t PrimeSumEvaluator::series_length(double alpha) const {
  return tail_terms_needed(alpha, static_cast<double>(largest_prime_)) + 64;
}

const PrimeSumEvaluator::PowerSums& PrimeSumEvaluator::power_sums(double alpha) const {
  std::lock_guard lock(mutex_);
  if (auto it = power_sums_.find(alpha); it != power_sums_.end()) return it->second;
  const std::size_t max_k = tail_terms_needed(alpha, static_cast<double>(largest_prime_));
  std::vector<CompensatedSum> acc(max_k + 1);
  for (const std::uint64_t p : *primes_) {
    const double v = std::pow(static_cast<double>(p), -alpha);
    double vk = v;
    for (std::size_t k = 1; k <= max_k; ++k) {
      if (vk < 1e-300) break;
      acc[k].add(vk);
      vk *= v;
    }
  }
  PowerSums sums;
  for (const auto& a : acc) {
    sums.value.push_back(a.value());
    sums.magnitude.push_back(a.magnitude());
  }
  // entries are never replaced, so references stay valid
  return power_sums_.emplace(alpha, std::move(sums)).first->second;
}

ConstantValue PrimeSumEvaluator::sum(std::string name, const PrimeSeries& series) const {
  const Series& c = series.coefficients;
  const double alpha = series.alpha;
  const std::size_t k0 = series::valuation(c);
  if (k0 == c.size()) {
    // identically zero beyond P: only the explicit part remains
  } else if (!(static_cast<double>(k0) * alpha > 1.0)) {
    throw std::invalid_argument("prime series must decay faster than 1/p");
  }

  CompensatedSum explicit_part;
  for (const std::uint64_t p : *primes_) explicit_part.add(series.term(p));

  const double P = static_cast<double>(largest_prime_);
  ConstantValue out;
  out.name = std::move(name);
  out.truncation_prime = largest_prime_;
  const double rounding = 8.0 * kEps * explicit_part.magnitude();

  if (k0 == c.size()) {
    out.value = explicit_part.value();
    out.tail_bound = rounding;
    return out;
  }

  if (mode_ == TailMode::majorant) {
    const double v_max = std::pow(P, -alpha);
    double coefficient = 0.0;
    double scale = 1.0;
    for (std::size_t k = k0; k < c.size(); ++k) {
      coefficient += std::abs(c[k]) * scale;
      scale *= v_max;
    }
    out.value = explicit_part.value();
    out.tail_bound = prime_tail_estimate(coefficient, static_cast<double>(k0) * alpha, P) + rounding;
    return out;
  }

  const std::size_t needed = tail_terms_needed(alpha, P);
  const PowerSums& sums = power_sums(alpha);
  CompensatedSum tail;
  double error = rounding;
  double remainder = 0.0;
  for (std::size_t k = k0; k < c.size(); ++k) {
    if (c[k] == 0.0) continue;
    const double sigma = static_cast<double>(k) * alpha;
    // sum_{p > P} p^-sigma <= sum_{n > P} n^-sigma <= P^(1-sigma)/(sigma-1)
    const double bound = std::abs(c[k]) * std::pow(P, 1.0 - sigma) / (sigma - 1.0);
    if (k > needed || bound < kNegligible) {
      remainder += bound;
      continue;
    }
    const PrimeZeta::Value pz = (*prime_zeta_)(sigma);
    const double t = pz.value - sums.value[k];
    tail.add(c[k] * t);
    error += std::abs(c[k]) * (pz.error + 8.0 * kEps * (std::abs(pz.value) + sums.magnitude[k]));
  }
  // coefficients past the end of the series behave like the last ones
  // computed; doubling covers them
  out.value = explicit_part.value() + tail.value();
  out.tail_bound = error + 2.0 * remainder + 8.0 * kEps * tail.magnitude();
  return out;
}

ConstantValue PrimeSumEvaluator::product(std::string name, const PrimeSeries& log_series) const {
  ConstantValue log_value = sum(name, log_series);
  ConstantValue out = log_value;
  out.value = std::exp(log_value.value);
  out.tail_bound = std::abs(out.value) * std::expm1(log_value.tail_bound) + 4.0 * kEps * std::abs(out.value);
  return out;
}

}  // namespace omega
