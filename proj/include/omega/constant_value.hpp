#pragma once

#include <cstdint>
#include <string>

namespace omega {

/// A computed real constant with the bookkeeping needed to trust it.
///
/// tail_bound bounds |true value - value|: the omitted prime tail (or the
/// Euler-Maclaurin remainder for zeta) plus a floating-point rounding
/// estimate. truncation_prime is the largest prime admitted in the explicit
/// part, 0 when the constant involves no prime sum.
struct ConstantValue {
  std::string name;
  int h = 0;
  double value = 0.0;
  std::uint64_t truncation_prime = 0;
  double tail_bound = 0.0;
};

}  // namespace omega
