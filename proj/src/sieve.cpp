#include "omega/sieve.hpp"

#include <algorithm>
#include <thread>

#include "omega/arith.hpp"
#include "omega/primes.hpp"

namespace omega {

std::size_t SegmentPlan::segment_count() const {
  if (hi < lo) return 0;
  return static_cast<std::size_t>((hi - lo) / segment_size + 1);
}

std::pair<std::uint64_t, std::uint64_t> SegmentPlan::segment(std::size_t i) const {
  const std::uint64_t a = lo + static_cast<std::uint64_t>(i) * segment_size;
  const std::uint64_t b = std::min<std::uint64_t>(hi, a + segment_size - 1);
  return {a, b};
}

SegmentPlan plan_segments(std::uint64_t lo, std::uint64_t hi, const SieveOptions& options) {
  if (lo == 0) throw std::invalid_argument("sieve range must start at 1 or above");
  if (lo > hi) throw std::invalid_argument("sieve range is empty (lo > hi)");
  if (hi > kMaxSieveHi) throw BudgetExceeded("sieve upper bound exceeds 2^62");
  if (options.segment_size == 0) throw std::invalid_argument("segment size must be positive");

  const std::uint64_t root = isqrt(hi);
  // pi(root) <= 1.26 root / log(root) + small slack; a cheap upper estimate
  const std::size_t base_bytes = static_cast<std::size_t>(root / 2 + 16) * sizeof(std::uint64_t);
  const unsigned threads = std::max(1u, options.threads);
  if (base_bytes >= options.memory_budget) {
    throw BudgetExceeded("base primes for this range do not fit the memory budget");
  }
  const std::size_t per_segment_budget = (options.memory_budget - base_bytes) / threads;
  const std::size_t max_records = per_segment_budget / kBytesPerRecord;
  if (max_records < 1024) {
    throw BudgetExceeded("memory budget too small for a sieve segment");
  }

  SegmentPlan plan;
  plan.lo = lo;
  plan.hi = hi;
  const std::uint64_t width = hi - lo + 1;
  plan.segment_size = static_cast<std::size_t>(
      std::min<std::uint64_t>({options.segment_size, max_records, width}));
  plan.base_primes = primes_up_to(root);
  return plan;
}

void sieve_segment(const SegmentPlan& plan, std::uint64_t a, std::uint64_t b,
                   std::vector<SieveRecord>& out, std::vector<std::uint64_t>& scratch) {
  const std::size_t len = static_cast<std::size_t>(b - a + 1);
  out.resize(len);
  scratch.resize(len);
  for (std::size_t i = 0; i < len; ++i) {
    const std::uint64_t n = a + i;
    out[i] = SieveRecord{n, 0, 0, 0, kRecordNoExponent};
    scratch[i] = n;
  }
  for (const std::uint64_t p : plan.base_primes) {
    if (p * p > b) break;
    std::uint64_t first = (a + p - 1) / p * p;
    for (std::uint64_t m = first; m <= b; m += p) {
      const std::size_t i = static_cast<std::size_t>(m - a);
      std::uint64_t r = scratch[i] / p;
      std::uint8_t e = 1;
      while (r % p == 0) {
        r /= p;
        ++e;
      }
      scratch[i] = r;
      SieveRecord& rec = out[i];
      ++rec.omega;
      rec.big_omega = static_cast<std::uint8_t>(rec.big_omega + e);
      rec.max_exponent = std::max(rec.max_exponent, e);
      rec.min_exponent = std::min(rec.min_exponent, e);
    }
  }
  // whatever survives all base primes <= sqrt(n) is a single prime
  for (std::size_t i = 0; i < len; ++i) {
    if (scratch[i] > 1) {
      SieveRecord& rec = out[i];
      ++rec.omega;
      ++rec.big_omega;
      rec.max_exponent = std::max<std::uint8_t>(rec.max_exponent, 1);
      rec.min_exponent = 1;
    }
  }
}

std::uint64_t sieve_range(std::uint64_t lo, std::uint64_t hi, const RecordSink& sink,
                          const SieveOptions& options) {
  const SegmentPlan plan = plan_segments(lo, hi, options);
  const std::size_t segments = plan.segment_count();
  const unsigned threads = static_cast<unsigned>(
      std::min<std::size_t>(std::max(1u, options.threads), segments));
  std::uint64_t emitted = 0;

  if (threads <= 1) {
    std::vector<SieveRecord> records;
    std::vector<std::uint64_t> scratch;
    for (std::size_t s = 0; s < segments; ++s) {
      const auto [a, b] = plan.segment(s);
      sieve_segment(plan, a, b, records, scratch);
      sink(std::span<const SieveRecord>(records));
      emitted += records.size();
    }
    return emitted;
  }

  // batches of `threads` segments sieved concurrently, emitted in order
  std::vector<std::vector<SieveRecord>> records(threads);
  std::vector<std::vector<std::uint64_t>> scratch(threads);
  for (std::size_t first = 0; first < segments; first += threads) {
    const std::size_t batch = std::min<std::size_t>(threads, segments - first);
    {
      std::vector<std::jthread> pool;
      for (std::size_t t = 0; t < batch; ++t) {
        pool.emplace_back([&, t] {
          const auto [a, b] = plan.segment(first + t);
          sieve_segment(plan, a, b, records[t], scratch[t]);
        });
      }
    }
    for (std::size_t t = 0; t < batch; ++t) {
      sink(std::span<const SieveRecord>(records[t]));
      emitted += records[t].size();
    }
  }
  return emitted;
}

}  // namespace omega
