#include "omega/primes.hpp"

#include <algorithm>
#include <array>

#include "omega/arith.hpp"

namespace omega {

std::vector<std::uint64_t> primes_up_to(std::uint64_t x) {
  std::vector<std::uint64_t> primes;
  if (x < 2) return primes;
  primes.push_back(2);
  if (x < 3) return primes;

  const std::uint64_t root = isqrt(x);
  // small odd primes used to cross off each window
  std::vector<std::uint64_t> small;
  {
    std::vector<bool> composite(root + 1, false);
    for (std::uint64_t i = 3; i <= root; i += 2) {
      if (composite[i]) continue;
      small.push_back(i);
      for (std::uint64_t j = i * i; j <= root; j += 2 * i) composite[j] = true;
    }
  }

  // window over odd numbers: index i <-> lo + 2i
  constexpr std::uint64_t kWindow = std::uint64_t{1} << 18;
  std::vector<std::uint8_t> composite(kWindow);
  for (std::uint64_t lo = 3; lo <= x; lo += 2 * kWindow) {
    const std::uint64_t hi = std::min(x, lo + 2 * kWindow - 1);
    const std::uint64_t count = (hi - lo) / 2 + 1;
    std::fill(composite.begin(), composite.begin() + static_cast<std::ptrdiff_t>(count), 0);
    for (const std::uint64_t p : small) {
      const std::uint64_t pp = p * p;
      if (pp > hi) break;
      std::uint64_t start = pp >= lo ? pp : ((lo + p - 1) / p) * p;
      if (start % 2 == 0) start += p;
      for (std::uint64_t m = start; m <= hi; m += 2 * p) composite[(m - lo) / 2] = 1;
    }
    for (std::uint64_t i = 0; i < count; ++i) {
      if (!composite[i]) primes.push_back(lo + 2 * i);
    }
  }
  return primes;
}

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  constexpr std::array<std::uint64_t, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (const std::uint64_t p : kBases) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (const std::uint64_t a : kBases) {
    std::uint64_t y = pow_mod(a, d, n);
    if (y == 1 || y == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      y = mul_mod(y, y, n);
      if (y == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace omega
