#pragma once

#include <cstdint>
#include <vector>

namespace omega {

/// All primes <= x in increasing order (odd-only segmented Eratosthenes).
std::vector<std::uint64_t> primes_up_to(std::uint64_t x);

/// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(std::uint64_t n);

}  // namespace omega
