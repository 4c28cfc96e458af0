#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "omega/factor.hpp"
#include "omega/parallel.hpp"

namespace omega {

/// One h-full integer as seen by the depth-first enumeration.
struct HFullNode {
  std::uint64_t n = 1;
  unsigned omega = 0;
  unsigned big_omega = 0;
  std::span<const PrimePower> factors;
};

/// Depth-first enumeration of the h-full integers <= x, optionally restricted
/// to integers coprime to a set of excluded primes.
///
/// Primes are taken in increasing order with exponents h, h+1, ... and the
/// recursion only continues with strictly larger primes, so each integer is
/// produced exactly once. Work splits into units: unit 0 is n = 1 and unit
/// i >= 1 holds the integers whose smallest prime factor is the i-th allowed
/// prime. Units are independent.
class HFullEnumerator {
 public:
  /// Throws std::invalid_argument for x = 0 or h < 2.
  HFullEnumerator(std::uint64_t x, int h, std::span<const std::uint64_t> excluded = {});

  std::uint64_t bound() const { return x_; }
  int h() const { return static_cast<int>(h_); }
  std::size_t unit_count() const { return primes_.size() + 1; }

  template <class Visit>
  void visit_unit(std::size_t unit, Visit&& visit) const {
    std::array<PrimePower, kMaxDepth> stack{};
    if (unit == 0) {
      visit(HFullNode{1, 0, 0, {}});
      return;
    }
    const std::size_t i = unit - 1;
    if (pow_h_[i] > x_) return;
    expand(1, i, 0, 0, stack, visit);
  }

  template <class Visit>
  void visit_all(Visit&& visit) const {
    for (std::size_t u = 0; u < unit_count(); ++u) visit_unit(u, visit);
  }

  /// Per-unit accumulation merged in unit order.
  template <class Acc, class Fold>
  Acc reduce(unsigned threads, Fold&& fold) const {
    return ordered_reduce<Acc>(unit_count(), threads, [&](std::size_t unit) {
      Acc acc{};
      visit_unit(unit, [&](const HFullNode& node) { fold(node, acc); });
      return acc;
    });
  }

 private:
  // a 64-bit integer has at most 15 distinct prime factors
  static constexpr std::size_t kMaxDepth = 16;

  template <class Visit>
  void expand(std::uint64_t n, std::size_t i, unsigned omega, unsigned big,
              std::array<PrimePower, kMaxDepth>& stack, Visit& visit) const {
    const std::uint64_t budget = x_ / n;
    const std::uint64_t p = primes_[i];
    std::uint64_t pk = pow_h_[i];
    unsigned e = h_;
    for (;;) {
      stack[omega] = PrimePower{p, e};
      const std::uint64_t m = n * pk;
      visit(HFullNode{m, omega + 1, big + e, std::span<const PrimePower>(stack.data(), omega + 1)});
      const std::uint64_t rest = budget / pk;
      for (std::size_t j = i + 1; j < primes_.size() && pow_h_[j] <= rest; ++j) {
        expand(m, j, omega + 1, big + e, stack, visit);
      }
      if (pk > budget / p) break;
      pk *= p;
      ++e;
    }
  }

  std::uint64_t x_;
  unsigned h_;
  std::vector<std::uint64_t> primes_;
  std::vector<std::uint64_t> pow_h_;  // primes_[i]^h, saturated
};

/// Emits every h-full n <= x exactly once with its factorization, in a fixed
/// order for a given prime table; returns |N_h(x)|. Throws
/// std::invalid_argument for x = 0 or h < 2.
std::uint64_t enumerate_h_full(std::uint64_t x, int h,
                               const std::function<void(const FactoredInteger&)>& sink,
                               std::span<const std::uint64_t> excluded = {});

/// Count of h-full n <= x coprime to every excluded prime.
std::uint64_t count_h_full_exact(std::uint64_t x, int h, std::span<const std::uint64_t> excluded = {},
                                 unsigned threads = 1);

}  // namespace omega
