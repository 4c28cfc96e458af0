#include "omega/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace omega {

std::int64_t CoefficientPolynomial::a(int r) const {
  if (r < 0 || r > degree()) return 0;
  return coefficients[static_cast<std::size_t>(r)];
}

double CoefficientPolynomial::evaluate(double v) const {
  double acc = 0.0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
    acc = acc * v + static_cast<double>(*it);
  }
  return acc;
}

namespace {

using IntPoly = std::vector<std::int64_t>;

IntPoly multiply(const IntPoly& a, const IntPoly& b) {
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

}  // namespace

CoefficientPolynomial a_coefficients(int h) {
  if (h < 2 || h > 16) throw std::invalid_argument("a_coefficients: h must lie in [2, 16]");
  const auto uh = static_cast<std::size_t>(h);

  // (1 + v^h/(1-v))(1 - v^h) = (1 - v + v^h)(1 + v + ... + v^(h-1))
  IntPoly poly(uh + 1, 0);
  poly[0] = 1;
  poly[1] = -1;
  poly[uh] += 1;
  poly = multiply(poly, IntPoly(uh, 1));
  for (std::size_t j = uh + 1; j <= 2 * uh - 1; ++j) {
    IntPoly factor(j + 1, 0);
    factor[0] = 1;
    factor[j] = -1;
    poly = multiply(poly, factor);
  }
  while (poly.size() > 1 && poly.back() == 0) poly.pop_back();

  const int bound = CoefficientPolynomial::degree_bound(h);
  if (static_cast<int>(poly.size()) - 1 > bound) {
    throw std::logic_error("a_coefficients: nonzero coefficient above the degree bound");
  }
  for (std::size_t r = 1; r <= 2 * uh + 2 && r < poly.size(); ++r) {
    const std::int64_t expected = r == 2 * uh + 2 ? -1 : 0;
    if (poly[r] != expected) {
      throw std::logic_error("a_coefficients: expansion does not start as 1 - v^(2h+2)");
    }
  }
  return CoefficientPolynomial{h, std::move(poly)};
}

namespace series {

Series monomial(std::size_t degree, double coefficient) {
  Series s(degree + 1, 0.0);
  s[degree] = coefficient;
  return s;
}

Series from_integers(const std::vector<std::int64_t>& coefficients) {
  return Series(coefficients.begin(), coefficients.end());
}

Series add(const Series& a, const Series& b) {
  Series out(std::max(a.size(), b.size()), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Series scale(const Series& a, double c) {
  Series out(a);
  for (double& x : out) x *= c;
  return out;
}

Series multiply(const Series& a, const Series& b, std::size_t length) {
  Series out(length, 0.0);
  for (std::size_t i = 0; i < a.size() && i < length; ++i) {
    if (a[i] == 0.0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < length; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Series divide(const Series& a, const Series& b, std::size_t length) {
  if (b.empty() || b[0] == 0.0) throw std::invalid_argument("series::divide: zero constant term");
  Series out(length, 0.0);
  for (std::size_t k = 0; k < length; ++k) {
    double acc = k < a.size() ? a[k] : 0.0;
    const std::size_t lo = k + 1 > b.size() ? k + 1 - b.size() : 0;
    for (std::size_t j = lo; j < k; ++j) acc -= out[j] * b[k - j];
    out[k] = acc / b[0];
  }
  return out;
}

Series log(const Series& f, std::size_t length) {
  if (f.empty() || f[0] != 1.0) throw std::invalid_argument("series::log: constant term must be 1");
  const auto coef = [&](std::size_t k) { return k < f.size() ? f[k] : 0.0; };
  Series out(length, 0.0);
  // k L_k = k f_k - sum_{j<k} j L_j f_{k-j}
  for (std::size_t k = 1; k < length; ++k) {
    double acc = static_cast<double>(k) * coef(k);
    for (std::size_t j = 1; j < k; ++j) {
      if (out[j] != 0.0) acc -= static_cast<double>(j) * out[j] * coef(k - j);
    }
    out[k] = acc / static_cast<double>(k);
  }
  return out;
}

std::size_t valuation(const Series& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0.0) return i;
  }
  return a.size();
}

}  // namespace series

}  // namespace omega
