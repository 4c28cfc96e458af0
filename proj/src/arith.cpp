#include "omega/arith.hpp"

#include <algorithm>
#include <cmath>

namespace omega {

std::string to_string(u128 value) {
  if (value == 0) return "0";
  std::string out;
  while (value > 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::uint64_t saturating_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t result = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && result > kSaturated / base) return kSaturated;
    result *= base;
  }
  return result;
}

std::uint64_t isqrt(std::uint64_t n) { return iroot(n, 2); }

std::uint64_t iroot(std::uint64_t n, unsigned k) {
  if (k == 0) return 0;
  if (k == 1 || n < 2) return n;
  auto r = static_cast<std::uint64_t>(std::pow(static_cast<long double>(n), 1.0L / k));
  // 2^64 - 1 is squarefree, so a saturated power always means "overflowed"
  const auto exceeds = [&](std::uint64_t base) {
    const std::uint64_t p = saturating_pow(base, k);
    return p == kSaturated || p > n;
  };
  while (r > 0 && exceeds(r)) --r;
  while (!exceeds(r + 1)) ++r;
  return r;
}

}  // namespace omega
