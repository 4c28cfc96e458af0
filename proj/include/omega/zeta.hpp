#pragma once

#include <cstddef>

#include "omega/constant_value.hpp"

namespace omega {

struct ZetaOptions {
  /// Terms summed directly before the Euler-Maclaurin correction.
  std::size_t direct_terms = 10'000;
};

/// Riemann zeta at real s > 0, s != 1, through Euler-Maclaurin summation with
/// Bernoulli corrections through B_12. For 0 < s < 1 the same formula is the
/// analytic continuation. tail_bound holds the first omitted Bernoulli term
/// (a rigorous remainder bound for real s) plus a rounding estimate.
/// Throws std::domain_error for s <= 0 or |s - 1| < 1e-6.
ConstantValue zeta_real(double s, ZetaOptions options = {});

/// zeta(s) - 1 for s > 1 with full relative precision for large s.
ConstantValue zeta_minus_one(double s, ZetaOptions options = {});

}  // namespace omega
