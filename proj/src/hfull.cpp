#include "omega/hfull.hpp"

#include <algorithm>
#include <stdexcept>

#include "omega/arith.hpp"
#include "omega/primes.hpp"

namespace omega {

HFullEnumerator::HFullEnumerator(std::uint64_t x, int h, std::span<const std::uint64_t> excluded)
    : x_(x), h_(static_cast<unsigned>(h)) {
  if (x == 0) throw std::invalid_argument("h-full enumeration needs x >= 1");
  if (h < 2) throw std::invalid_argument("h-full enumeration needs h >= 2");
  for (std::uint64_t p : primes_up_to(iroot(x, h_))) {
    if (std::find(excluded.begin(), excluded.end(), p) != excluded.end()) continue;
    primes_.push_back(p);
    pow_h_.push_back(saturating_pow(p, h_));
  }
}

std::uint64_t enumerate_h_full(std::uint64_t x, int h,
                               const std::function<void(const FactoredInteger&)>& sink,
                               std::span<const std::uint64_t> excluded) {
  const HFullEnumerator e(x, h, excluded);
  std::uint64_t count = 0;
  e.visit_all([&](const HFullNode& node) {
    ++count;
    sink(FactoredInteger::from_factors({node.factors.begin(), node.factors.end()}));
  });
  return count;
}

namespace {

struct Counter {
  std::uint64_t count = 0;
  void merge(const Counter& o) { count += o.count; }
};

}  // namespace

std::uint64_t count_h_full_exact(std::uint64_t x, int h, std::span<const std::uint64_t> excluded,
                                 unsigned threads) {
  const HFullEnumerator e(x, h, excluded);
  return e.reduce<Counter>(threads, [](const HFullNode&, Counter& c) { ++c.count; }).count;
}

}  // namespace omega
