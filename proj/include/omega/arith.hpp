#pragma once

#include <cstdint>
#include <limits>
#include <string>

namespace omega {

using u128 = unsigned __int128;

/// Decimal rendering of a 128-bit count.
std::string to_string(u128 value);

inline long double to_long_double(u128 value) {
  return static_cast<long double>(value);
}

/// floor(sqrt(n)), exact.
std::uint64_t isqrt(std::uint64_t n);

/// floor(n^(1/k)) for k >= 1, exact (no floating-point trust at perfect powers).
std::uint64_t iroot(std::uint64_t n, unsigned k);

/// base^exp, or UINT64_MAX when the result does not fit.
std::uint64_t saturating_pow(std::uint64_t base, unsigned exp);

inline constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

/// Neumaier-compensated running sum. Partials merge exactly like the serial
/// sum up to the retained compensation, so fixed-order merges are reproducible.
class CompensatedSum {
 public:
  CompensatedSum() = default;
  explicit CompensatedSum(double initial) : sum_(initial) {}

  void add(double term) {
    const double t = sum_ + term;
    if (abs_(sum_) >= abs_(term)) {
      compensation_ += (sum_ - t) + term;
    } else {
      compensation_ += (term - t) + sum_;
    }
    sum_ = t;
    magnitude_ += abs_(term);
  }

  CompensatedSum& operator+=(double term) {
    add(term);
    return *this;
  }

  void merge(const CompensatedSum& other) {
    add(other.sum_);
    compensation_ += other.compensation_;
    magnitude_ += other.magnitude_ - abs_(other.sum_);
  }

  double value() const { return sum_ + compensation_; }

  /// Sum of |terms| seen so far; scales the rounding-error estimate.
  double magnitude() const { return magnitude_; }

 private:
  static double abs_(double v) { return v < 0 ? -v : v; }

  double sum_ = 0.0;
  double compensation_ = 0.0;
  double magnitude_ = 0.0;
};

}  // namespace omega
