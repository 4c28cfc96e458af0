#include "omega/counting.hpp"

#include <cmath>
#include <stdexcept>

#include "omega/arith.hpp"
#include "omega/hfull.hpp"
#include "omega/primes.hpp"
#include "omega/zeta.hpp"

namespace omega {

namespace {

void check_excluded(std::span<const std::uint64_t> excluded) {
  for (std::size_t i = 0; i < excluded.size(); ++i) {
    if (!is_prime(excluded[i])) throw std::invalid_argument("excluded values must be primes");
    for (std::size_t j = 0; j < i; ++j) {
      if (excluded[i] == excluded[j]) throw std::invalid_argument("excluded primes must be distinct");
    }
  }
}

bool coprime_to(std::uint64_t n, std::span<const std::uint64_t> excluded) {
  for (const std::uint64_t q : excluded) {
    if (n % q == 0) return false;
  }
  return true;
}

void finish(CountComparison& c) {
  c.residual = static_cast<double>(c.exact) - c.predicted;
  c.normalized_residual = c.residual / c.scale;
}

// tuples (m_j, ..., m_{2h-1}) with prod m^j <= y
std::uint64_t count_tuples(std::uint64_t y, unsigned j, unsigned last) {
  if (j == last) return iroot(y, j);
  std::uint64_t total = 0;
  const std::uint64_t top = iroot(y, j);
  for (std::uint64_t m = 1; m <= top; ++m) {
    total += count_tuples(y / saturating_pow(m, j), j + 1, last);
  }
  return total;
}

std::uint64_t count_representations(std::uint64_t n, unsigned j, unsigned last) {
  const std::uint64_t top = iroot(n, j);
  if (j == last) return saturating_pow(top, j) == n ? 1 : 0;
  std::uint64_t total = 0;
  for (std::uint64_t m = 1; m <= top; ++m) {
    const std::uint64_t mj = saturating_pow(m, j);
    if (n % mj == 0) total += count_representations(n / mj, j + 1, last);
  }
  return total;
}

}  // namespace

double eta_diagnostic(int h) { return 1.0 / (2.0 * h - 1.0); }

CountComparison count_h_free(std::uint64_t x, int h, std::span<const std::uint64_t> excluded,
                             const SieveOptions& options) {
  if (x == 0) throw std::invalid_argument("x must be >= 1");
  if (h < 2) throw std::invalid_argument("h must be >= 2");
  if (excluded.size() > kMaxExcludedPrimes) throw std::invalid_argument("at most 10 excluded primes");
  check_excluded(excluded);

  CountComparison c;
  c.x = x;
  c.h = h;
  c.excluded.assign(excluded.begin(), excluded.end());
  const auto limit = static_cast<std::uint8_t>(h - 1);
  c.exact = sieve_reduce<std::uint64_t>(1, x, options, [&](std::span<const SieveRecord> records, std::uint64_t& acc) {
    for (const SieveRecord& r : records) {
      if (r.max_exponent <= limit && coprime_to(r.n, excluded)) ++acc;
    }
  });

  double density = 1.0 / zeta_real(static_cast<double>(h)).value;
  for (const std::uint64_t q : excluded) {
    const double qh = std::pow(static_cast<double>(q), h);
    density *= (qh - qh / static_cast<double>(q)) / (qh - 1.0);
  }
  c.predicted = density * static_cast<double>(x);
  c.scale = std::ldexp(std::pow(static_cast<double>(x), 1.0 / h), static_cast<int>(excluded.size()));
  finish(c);
  return c;
}

CountComparison count_h_full(std::uint64_t x, int h, const ConstantEvaluator& constants,
                             std::span<const std::uint64_t> excluded, unsigned threads) {
  if (x == 0) throw std::invalid_argument("x must be >= 1");
  if (h < 2 || h > 16) throw std::invalid_argument("h must lie in [2, 16]");
  check_excluded(excluded);

  CountComparison c;
  c.x = x;
  c.h = h;
  c.excluded.assign(excluded.begin(), excluded.end());
  c.exact = count_h_full_exact(x, h, excluded, threads);
  const double xd = static_cast<double>(x);
  for (int i = 0; i < h; ++i) {
    c.predicted += constants.gamma_coefficient(i, h, excluded).value * std::pow(xd, 1.0 / (h + i));
  }
  c.scale = std::pow(xd, eta_diagnostic(h));
  finish(c);
  return c;
}

std::uint64_t k_h_value(std::uint64_t n, int h) {
  if (n == 0) throw std::invalid_argument("n must be >= 1");
  if (h < 2) throw std::invalid_argument("h must be >= 2");
  return count_representations(n, static_cast<unsigned>(h), static_cast<unsigned>(2 * h - 1));
}

std::uint64_t s_h_exact(std::uint64_t y, int h) {
  if (y == 0) return 0;
  if (h < 2) throw std::invalid_argument("h must be >= 2");
  return count_tuples(y, static_cast<unsigned>(h), static_cast<unsigned>(2 * h - 1));
}

CountComparison s_h_partial(std::uint64_t y, int h) {
  if (y == 0) throw std::invalid_argument("y must be >= 1");
  CountComparison c;
  c.x = y;
  c.h = h;
  c.exact = s_h_exact(y, h);
  const double yd = static_cast<double>(y);
  for (int r = h; r <= 2 * h - 1; ++r) c.predicted += c_rh(r, h).value * std::pow(yd, 1.0 / r);
  c.scale = std::pow(yd, eta_diagnostic(h));
  finish(c);
  return c;
}

}  // namespace omega
