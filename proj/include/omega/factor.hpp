#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "omega/arith.hpp"

namespace omega {

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;

  friend auto operator<=>(const PrimePower&, const PrimePower&) = default;
};

/// Exponent reported as the minimum over an empty factorization (n = 1):
/// n = 1 is vacuously h-full for every h.
inline constexpr unsigned kNoExponent = std::numeric_limits<unsigned>::max();

/// A positive integer together with its canonical factorization.
///
/// Invariants: primes strictly increasing, exponents >= 1, the product of
/// the prime powers equals value(), and value() == 1 iff factors() is empty.
class FactoredInteger {
 public:
  FactoredInteger() = default;

  /// Validates primality/ordering/exponents and multiplies out the value; throws
  /// std::invalid_argument on a malformed list and std::overflow_error if the
  /// product exceeds 128 bits.
  static FactoredInteger from_factors(std::vector<PrimePower> factors);

  u128 value() const { return value_; }
  std::span<const PrimePower> factors() const { return factors_; }

  unsigned max_exponent() const;
  /// kNoExponent for n = 1.
  unsigned min_exponent() const;

  friend bool operator==(const FactoredInteger&, const FactoredInteger&) = default;

 private:
  u128 value_ = 1;
  std::vector<PrimePower> factors_;
};

/// Canonical factorization of n >= 1. Trial division by a cached prime table,
/// then by a 2-3-5 wheel, stopping as soon as the cofactor passes
/// Miller-Rabin. Throws std::invalid_argument for n = 0.
FactoredInteger factorize(std::uint64_t n);

/// Number of distinct prime factors; omega(1) = 0.
unsigned omega(const FactoredInteger& f);

/// Number of prime factors with multiplicity; big_omega(1) = 0.
unsigned big_omega(const FactoredInteger& f);

struct HClass {
  int h = 0;
  bool is_h_free = false;
  bool is_h_full = false;
};

/// h-free: every exponent <= h - 1. h-full: every exponent >= h.
/// Throws std::invalid_argument for h < 2.
HClass classify_h(const FactoredInteger& f, int h);

}  // namespace omega
