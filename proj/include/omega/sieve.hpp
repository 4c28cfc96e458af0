#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "omega/parallel.hpp"

namespace omega {

/// Per-integer output of the factorization sieve.
struct SieveRecord {
  std::uint64_t n = 0;
  std::uint8_t omega = 0;
  std::uint8_t big_omega = 0;
  std::uint8_t max_exponent = 0;
  /// kRecordNoExponent for n = 1.
  std::uint8_t min_exponent = 0;
};

inline constexpr std::uint8_t kRecordNoExponent = 0xFF;

/// Raised when a requested range cannot be served within the configured
/// memory budget or integer range.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SieveOptions {
  std::size_t segment_size = std::size_t{1} << 22;              // records per segment
  std::size_t memory_budget = std::size_t{2} << 30;              // bytes
  unsigned threads = 1;
};

/// Tiling of [lo, hi] into contiguous segments plus the base primes <= sqrt(hi).
struct SegmentPlan {
  std::uint64_t lo = 1;
  std::uint64_t hi = 0;
  std::size_t segment_size = 0;
  std::vector<std::uint64_t> base_primes;

  std::size_t segment_count() const;
  /// Inclusive bounds of segment i.
  std::pair<std::uint64_t, std::uint64_t> segment(std::size_t i) const;
};

/// Largest hi the sieve accepts; keeps lo + segment arithmetic far from overflow.
inline constexpr std::uint64_t kMaxSieveHi = std::uint64_t{1} << 62;

/// Bytes a single in-flight segment occupies per record.
inline constexpr std::size_t kBytesPerRecord = sizeof(SieveRecord) + sizeof(std::uint64_t);

/// Throws std::invalid_argument for lo = 0 or lo > hi, BudgetExceeded when hi
/// is beyond kMaxSieveHi or the base primes plus one segment per thread do
/// not fit in the memory budget. The segment size shrinks to fit the budget.
SegmentPlan plan_segments(std::uint64_t lo, std::uint64_t hi, const SieveOptions& options = {});

/// Fills `out` with the records for [a, b] (one segment of the plan).
void sieve_segment(const SegmentPlan& plan, std::uint64_t a, std::uint64_t b,
                   std::vector<SieveRecord>& out, std::vector<std::uint64_t>& scratch);

using RecordSink = std::function<void(std::span<const SieveRecord>)>;

/// Emits a record for every n in [lo, hi] exactly once, in increasing n;
/// the sink sees one call per segment, always from the calling thread.
/// Returns the number of records emitted.
std::uint64_t sieve_range(std::uint64_t lo, std::uint64_t hi, const RecordSink& sink,
                          const SieveOptions& options = {});

/// Folds every segment of [lo, hi] into an accumulator. fold(records, acc)
/// may run concurrently for different segments; per-segment accumulators are
/// merged in segment order.
template <class Acc, class Fold>
Acc sieve_reduce(std::uint64_t lo, std::uint64_t hi, const SieveOptions& options, Fold&& fold) {
  const SegmentPlan plan = plan_segments(lo, hi, options);
  return ordered_reduce<Acc>(plan.segment_count(), options.threads, [&](std::size_t i) {
    std::vector<SieveRecord> records;
    std::vector<std::uint64_t> scratch;
    const auto [a, b] = plan.segment(i);
    sieve_segment(plan, a, b, records, scratch);
    Acc acc{};
    fold(std::span<const SieveRecord>(records), acc);
    return acc;
  });
}

/// CSV header of the raw record dump.
inline constexpr const char* kSieveCsvHeader = "n,omega,big_omega,max_exp,min_exp";

}  // namespace omega
