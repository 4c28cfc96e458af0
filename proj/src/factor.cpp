#include "omega/factor.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "omega/primes.hpp"

namespace omega {

FactoredInteger FactoredInteger::from_factors(std::vector<PrimePower> factors) {
  FactoredInteger f;
  u128 value = 1;
  constexpr u128 kMax = ~u128{0};
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& [p, e] = factors[i];
    if (p < 2 || e == 0) {
      throw std::invalid_argument("factorization entries need prime >= 2 and exponent >= 1");
    }
    if (i > 0 && factors[i - 1].prime >= p) {
      throw std::invalid_argument("factorization primes must be strictly increasing");
    }
    if (!is_prime(p)) throw std::invalid_argument("factorization entry is not prime");
    for (unsigned k = 0; k < e; ++k) {
      if (value > kMax / p) throw std::overflow_error("factored value exceeds 128 bits");
      value *= p;
    }
  }
  f.value_ = value;
  f.factors_ = std::move(factors);
  return f;
}

unsigned FactoredInteger::max_exponent() const {
  unsigned m = 0;
  for (const auto& pe : factors_) m = std::max(m, pe.exponent);
  return m;
}

unsigned FactoredInteger::min_exponent() const {
  unsigned m = kNoExponent;
  for (const auto& pe : factors_) m = std::min(m, pe.exponent);
  return m;
}

namespace {

constexpr std::uint64_t kTableLimit = 1 << 16;

const std::vector<std::uint64_t>& small_primes() {
  static const std::vector<std::uint64_t> table = primes_up_to(kTableLimit);
  return table;
}

// Divides every power of p out of n; returns the exponent.
unsigned strip(std::uint64_t& n, std::uint64_t p) {
  unsigned e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

}  // namespace

FactoredInteger factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be >= 1");
  std::vector<PrimePower> factors;
  std::uint64_t rest = n;

  const auto finish = [&]() {
    if (rest > 1) factors.push_back({rest, 1});
    return FactoredInteger::from_factors(std::move(factors));
  };

  for (const std::uint64_t p : small_primes()) {
    if (p * p > rest) return finish();
    if (const unsigned e = strip(rest, p); e > 0) factors.push_back({p, e});
  }
  if (rest == 1 || is_prime(rest)) return finish();

  // residues coprime to 30 in [0, 30)
  constexpr std::array<std::uint64_t, 8> kWheel = {1, 7, 11, 13, 17, 19, 23, 29};
  for (std::uint64_t base = kTableLimit / 30 * 30;; base += 30) {
    for (const std::uint64_t r : kWheel) {
      const std::uint64_t d = base + r;
      if (d <= kTableLimit) continue;
      if (d > rest / d) return finish();
      if (const unsigned e = strip(rest, d); e > 0) {
        factors.push_back({d, e});
        if (rest == 1 || is_prime(rest)) return finish();
      }
    }
  }
}

unsigned omega(const FactoredInteger& f) { return static_cast<unsigned>(f.factors().size()); }

unsigned big_omega(const FactoredInteger& f) {
  unsigned total = 0;
  for (const auto& pe : f.factors()) total += pe.exponent;
  return total;
}

HClass classify_h(const FactoredInteger& f, int h) {
  if (h < 2) throw std::invalid_argument("classify_h: h must be >= 2");
  const auto uh = static_cast<unsigned>(h);
  HClass c{h, true, true};
  for (const auto& pe : f.factors()) {
    if (pe.exponent >= uh) c.is_h_free = false;
    if (pe.exponent < uh) c.is_h_full = false;
  }
  return c;
}

}  // namespace omega
