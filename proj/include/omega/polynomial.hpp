#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace omega {

/// Exact integer polynomial
///   (1 + v^h/(1-v)) (1-v^h)(1-v^(h+1))...(1-v^(2h-1))
///     = 1 - v^(2h+2) + sum_{r=2h+3}^{(3h^2+h-2)/2} a_{r,h} v^r,
/// the local factor of the h-full generating series divided by
/// zeta(hs)...zeta((2h-1)s).
struct CoefficientPolynomial {
  int h = 0;
  /// Full coefficient list, index = degree; coefficients[0] = 1.
  std::vector<std::int64_t> coefficients;

  static int degree_bound(int h) { return (3 * h * h + h - 2) / 2; }

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }

  /// a_{r,h}; 0 outside the stored range.
  std::int64_t a(int r) const;

  /// Horner evaluation at a real point.
  double evaluate(double v) const;
};

/// Expands the product exactly. Throws std::invalid_argument unless
/// 2 <= h <= 16 and std::logic_error if the expansion does not have the
/// 1 - v^(2h+2) + O(v^(2h+3)) shape or leaks past the degree bound.
CoefficientPolynomial a_coefficients(int h);

/// Truncated power series in one variable; index = degree.
using Series = std::vector<double>;

namespace series {

Series monomial(std::size_t degree, double coefficient = 1.0);
Series from_integers(const std::vector<std::int64_t>& coefficients);
Series add(const Series& a, const Series& b);
Series scale(const Series& a, double c);
Series multiply(const Series& a, const Series& b, std::size_t length);
/// a / b; requires b[0] != 0.
Series divide(const Series& a, const Series& b, std::size_t length);
/// log(f) for f[0] == 1.
Series log(const Series& f, std::size_t length);
/// Lowest index with a nonzero coefficient, or size() if none.
std::size_t valuation(const Series& a);

}  // namespace series

}  // namespace omega
