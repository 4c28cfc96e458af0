#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "omega/hfull.hpp"
#include "omega/sieve.hpp"
#include "oracle.hpp"

using namespace omega;

namespace {

std::vector<std::uint64_t> brute(std::uint64_t x, unsigned h, std::vector<std::uint64_t> excluded = {}) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 1; n <= x; ++n) {
    if (!oracle::h_full(n, h)) continue;
    bool ok = true;
    for (auto q : excluded) ok = ok && n % q != 0;
    if (ok) out.push_back(n);
  }
  return out;
}

std::vector<std::uint64_t> enumerated(std::uint64_t x, int h, std::vector<std::uint64_t> excluded = {}) {
  std::vector<std::uint64_t> out;
  enumerate_h_full(x, h, [&](const FactoredInteger& f) { out.push_back(static_cast<std::uint64_t>(f.value())); },
                   excluded);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(HFull, SquarefullUpTo100) {
  const std::vector<std::uint64_t> expect = {1, 4, 8, 9, 16, 25, 27, 32, 36, 49, 64, 72, 81, 100};
  EXPECT_EQ(enumerated(100, 2), expect);
  EXPECT_EQ(count_h_full_exact(100, 2), 14u);
  const std::uint64_t two[] = {2};
  EXPECT_EQ(count_h_full_exact(100, 2, two), 6u);  // 1, 9, 25, 27, 49, 81
}

TEST(HFull, MatchesBruteForce) {
  for (int h = 2; h <= 5; ++h) {
    EXPECT_EQ(enumerated(200000, h), brute(200000, static_cast<unsigned>(h))) << h;
  }
  EXPECT_EQ(enumerated(100000, 2, {2, 7}), brute(100000, 2, {2, 7}));
  EXPECT_EQ(enumerated(100000, 3, {3}), brute(100000, 3, {3}));
}

TEST(HFull, NodesCarryConsistentFactorizations) {
  const HFullEnumerator e(1'000'000, 2);
  std::set<std::uint64_t> seen;
  e.visit_all([&](const HFullNode& node) {
    ASSERT_TRUE(seen.insert(node.n).second) << "duplicate " << node.n;
    u128 v = 1;
    unsigned big = 0;
    for (const auto& pe : node.factors) {
      for (unsigned k = 0; k < pe.exponent; ++k) v *= pe.prime;
      big += pe.exponent;
      ASSERT_GE(pe.exponent, 2u);
    }
    ASSERT_EQ(v, u128{node.n});
    ASSERT_EQ(node.omega, node.factors.size());
    ASSERT_EQ(node.big_omega, big);
    ASSERT_EQ(node.omega, oracle::omega(node.n));
  });
}

TEST(HFull, CrossEngineWithSieveUpToOneMillion) {
  for (int h = 2; h <= 4; ++h) {
    std::uint64_t sieved = 0;
    sieve_range(1, 1'000'000, [&](std::span<const SieveRecord> r) {
      for (const auto& s : r) sieved += s.min_exponent >= h;  // n = 1 has 0xFF
    });
    EXPECT_EQ(count_h_full_exact(1'000'000, h), sieved) << h;
  }
}

TEST(HFull, ThreadedReduceIsDeterministic) {
  EXPECT_EQ(count_h_full_exact(10'000'000'000ull, 2, {}, 1), count_h_full_exact(10'000'000'000ull, 2, {}, 4));
}

TEST(HFull, Edges) {
  EXPECT_EQ(count_h_full_exact(1, 2), 1u);
  EXPECT_EQ(count_h_full_exact(3, 2), 1u);
  EXPECT_EQ(count_h_full_exact(4, 2), 2u);
  EXPECT_THROW(HFullEnumerator(0, 2), std::invalid_argument);
  EXPECT_THROW(HFullEnumerator(10, 1), std::invalid_argument);
  // near the top of the 64-bit range: 2^63 is 63-full, nothing else is
  EXPECT_EQ(count_h_full_exact(1ull << 63, 63), 2u);
}
