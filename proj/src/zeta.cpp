#include "omega/zeta.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "omega/arith.hpp"

namespace omega {

namespace {

// B_{2k} / (2k)! for k = 1..7
constexpr std::array<double, 7> kBernoulliOverFactorial = {
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,
    5.0 / 66.0 / 3628800.0,
    -691.0 / 2730.0 / 479001600.0,
    7.0 / 6.0 / 87178291200.0,
};

// sum_{n=first}^{inf} n^-s with n >= first >= 1.
ConstantValue euler_maclaurin(double s, std::size_t first, std::size_t terms) {
  const double eps = std::numeric_limits<double>::epsilon();
  const std::size_t N = std::max<std::size_t>(first + terms, 2);
  CompensatedSum sum;
  // small terms first
  for (std::size_t n = N - 1; n >= first; --n) {
    sum.add(std::pow(static_cast<double>(n), -s));
    if (n == first) break;
  }
  const double Nd = static_cast<double>(N);
  const double n_s = std::pow(Nd, -s);
  sum.add(Nd * n_s / (s - 1.0));
  sum.add(0.5 * n_s);

  // T_k = B_2k/(2k)! * s(s+1)...(s+2k-2) * N^(-s-2k+1)
  double rising = s;           // s(s+1)...(s+2k-2)
  double power = n_s / Nd;     // N^(-s-2k+1)
  double last = 0.0;
  for (std::size_t k = 0; k < kBernoulliOverFactorial.size(); ++k) {
    const double term = kBernoulliOverFactorial[k] * rising * power;
    if (k + 1 == kBernoulliOverFactorial.size()) {
      last = term;  // first omitted correction: the B_14 term
    } else {
      sum.add(term);
    }
    rising *= (s + 2.0 * k + 1.0) * (s + 2.0 * k + 2.0);
    power /= Nd * Nd;
  }
  ConstantValue out;
  out.value = sum.value();
  out.tail_bound = std::abs(last) + 4.0 * eps * (sum.magnitude() + std::abs(out.value));
  return out;
}

}  // namespace

ConstantValue zeta_real(double s, ZetaOptions options) {
  if (!(s > 0.0)) throw std::domain_error("zeta_real: s must be > 0");
  if (std::abs(s - 1.0) < 1e-6) throw std::domain_error("zeta_real: s too close to the pole at 1");
  ConstantValue out = euler_maclaurin(s, 1, options.direct_terms);
  out.name = "zeta";
  return out;
}

ConstantValue zeta_minus_one(double s, ZetaOptions options) {
  if (!(s > 1.0)) throw std::domain_error("zeta_minus_one: s must be > 1");
  if (std::abs(s - 1.0) < 1e-6) throw std::domain_error("zeta_minus_one: s too close to the pole at 1");
  ConstantValue out = euler_maclaurin(s, 2, options.direct_terms);
  out.name = "zeta_minus_one";
  return out;
}

}  // namespace omega
