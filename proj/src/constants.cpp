#include "omega/constants.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "omega/zeta.hpp"

namespace omega {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_h(int h) {
  if (h < 2) throw std::invalid_argument("h must be >= 2");
}

struct Weighted {
  double weight;
  const ConstantValue& term;
};

// sum_i w_i x_i + offset, with bounds propagated linearly.
ConstantValue linear(std::string name, int h, std::uint64_t P, std::initializer_list<Weighted> terms,
                     double offset = 0.0, double offset_error = 0.0) {
  ConstantValue out;
  out.name = std::move(name);
  out.h = h;
  out.truncation_prime = P;
  double value = offset;
  double bound = offset_error;
  double magnitude = std::abs(offset);
  for (const auto& [w, t] : terms) {
    value += w * t.value;
    bound += std::abs(w) * t.tail_bound;
    magnitude += std::abs(w * t.value);
  }
  out.value = value;
  out.tail_bound = bound + 4.0 * kEps * magnitude;
  return out;
}

// x^2 + x
ConstantValue square_plus_self(const ConstantValue& x) {
  ConstantValue out = x;
  out.value = x.value * x.value + x.value;
  out.tail_bound = std::abs(2.0 * x.value + 1.0) * x.tail_bound + x.tail_bound * x.tail_bound +
                   4.0 * kEps * (x.value * x.value + std::abs(x.value));
  return out;
}

ConstantValue product_of(std::string name, int h, const ConstantValue& a, const ConstantValue& b) {
  ConstantValue out;
  out.name = std::move(name);
  out.h = h;
  out.truncation_prime = std::max(a.truncation_prime, b.truncation_prime);
  out.value = a.value * b.value;
  out.tail_bound = std::abs(a.value) * b.tail_bound + std::abs(b.value) * a.tail_bound +
                   a.tail_bound * b.tail_bound + 2.0 * kEps * std::abs(out.value);
  return out;
}

double dbl(std::uint64_t p) { return static_cast<double>(p); }

// --- power series in v = 1/p --------------------------------------------

Series one_minus_vk(std::size_t k) { return series::add(series::monomial(0), series::monomial(k, -1.0)); }

// 1 - v + v^h
Series one_minus_v_plus_vh(int h) {
  return series::add(one_minus_vk(1), series::monomial(static_cast<std::size_t>(h)));
}

ConstantValue b1_sum(const PrimeSumEvaluator& sums) {
  const std::size_t L = sums.series_length(1.0);
  Series c(L, 0.0);
  for (std::size_t k = 2; k < L; ++k) c[k] = -1.0 / static_cast<double>(k);
  PrimeSeries s{[](std::uint64_t p) {
                  const double x = 1.0 / dbl(p);
                  if (p < 10'000) return std::log1p(-x) + x;
                  // log(1-x) + x without the cancellation; next term < x^6/6
                  return -x * x * (0.5 + x * (1.0 / 3.0 + x * (0.25 + x * 0.2)));
                },
                1.0, std::move(c)};
  return sums.sum("sum_p(log(1-1/p)+1/p)", s);
}

ConstantValue b2_minus_b1_sum(const PrimeSumEvaluator& sums) {
  const std::size_t L = sums.series_length(1.0);
  Series c(L, 1.0);
  c[0] = c[1] = 0.0;
  PrimeSeries s{[](std::uint64_t p) { return 1.0 / (dbl(p) * (dbl(p) - 1.0)); }, 1.0, std::move(c)};
  return sums.sum("sum_p 1/(p(p-1))", s);
}

}  // namespace

ConstantValue c_rh(int r, int h) {
  if (h < 2 || r < h || r > 2 * h - 1) {
    throw std::invalid_argument("C_{r,h} needs h <= r <= 2h-1");
  }
  ConstantValue out;
  out.name = "C_rh";
  out.h = h;
  out.value = 1.0;
  for (int j = h; j <= 2 * h - 1; ++j) {
    if (j == r) continue;
    const ConstantValue z = zeta_real(static_cast<double>(j) / r);
    const double prev = out.value;
    out.value = prev * z.value;
    out.tail_bound = std::abs(prev) * z.tail_bound + std::abs(z.value) * out.tail_bound +
                     out.tail_bound * z.tail_bound + 2.0 * kEps * std::abs(out.value);
  }
  return out;
}

ConstantEvaluator::ConstantEvaluator(ConstantsConfig config)
    : config_(config), sums_(config.truncation_prime, config.tail_mode) {}

template <class Fn>
ConstantValue ConstantEvaluator::cached(const std::string& key, Fn&& compute) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  ConstantValue v = compute();
  std::lock_guard lock(mutex_);
  return cache_.emplace(key, std::move(v)).first->second;
}

ConstantValue ConstantEvaluator::euler_gamma() const {
  // rounding of the literal to binary64
  return ConstantValue{"gamma", 0, kEulerGamma, 0, kEps};
}

ConstantValue ConstantEvaluator::zeta2() const {
  return cached("zeta2", [] {
    ConstantValue z = zeta_real(2.0);
    z.name = "zeta(2)";
    return z;
  });
}

ConstantValue ConstantEvaluator::b1_prime_sum() const {
  return cached("b1_sum", [&] { return b1_sum(sums_); });
}

ConstantValue ConstantEvaluator::b2_minus_b1() const {
  return cached("b2_minus_b1", [&] { return b2_minus_b1_sum(sums_); });
}

ConstantValue ConstantEvaluator::mertens_b1() const {
  return cached("B1", [&] {
    return linear("B1", 0, sums_.truncation_prime(), {{1.0, euler_gamma()}, {1.0, b1_prime_sum()}});
  });
}

ConstantValue ConstantEvaluator::mertens_b2() const {
  return cached("B2", [&] {
    return linear("B2", 0, sums_.truncation_prime(), {{1.0, mertens_b1()}, {1.0, b2_minus_b1()}});
  });
}

ConstantValue ConstantEvaluator::c1_correction(int h) const {
  require_h(h);
  return cached("c1corr:" + std::to_string(h), [&] {
    const std::size_t L = sums_.series_length(1.0);
    const auto uh = static_cast<std::size_t>(h);
    // v^h (1 - v) / (1 - v^h)
    Series c = series::divide(series::multiply(series::monomial(uh), one_minus_vk(1), L), one_minus_vk(uh), L);
    PrimeSeries s{[h](std::uint64_t p) {
                    const double x = dbl(p);
                    return (x - 1.0) / (x * (std::pow(x, h) - 1.0));
                  },
                  1.0, std::move(c)};
    ConstantValue v = sums_.sum("sum_p (p-1)/(p(p^h-1))", s);
    v.h = h;
    return v;
  });
}

ConstantValue ConstantEvaluator::c2_correction(int h) const {
  require_h(h);
  return cached("c2corr:" + std::to_string(h), [&] {
    const std::size_t L = sums_.series_length(1.0);
    const auto uh = static_cast<std::size_t>(h);
    // (v (1 - v^(h-1)) / (1 - v^h))^2
    const Series base =
        series::divide(series::multiply(series::monomial(1), one_minus_vk(uh - 1), L), one_minus_vk(uh), L);
    PrimeSeries s{[h](std::uint64_t p) {
                    const double x = dbl(p);
                    const double t = (std::pow(x, h - 1) - 1.0) / (std::pow(x, h) - 1.0);
                    return t * t;
                  },
                  1.0, series::multiply(base, base, L)};
    ConstantValue v = sums_.sum("sum_p ((p^(h-1)-1)/(p^h-1))^2", s);
    v.h = h;
    return v;
  });
}

ConstantValue ConstantEvaluator::c3_correction(int h) const {
  require_h(h);
  return cached("c3corr:" + std::to_string(h), [&] {
    const std::size_t L = sums_.series_length(1.0);
    const auto uh = static_cast<std::size_t>(h);
    Series c = series::divide(series::monomial(uh, static_cast<double>(h)), one_minus_vk(uh), L);
    PrimeSeries s{[h](std::uint64_t p) { return static_cast<double>(h) / (std::pow(dbl(p), h) - 1.0); }, 1.0,
                  std::move(c)};
    ConstantValue v = sums_.sum("sum_p h/(p^h-1)", s);
    v.h = h;
    return v;
  });
}

ConstantValue ConstantEvaluator::c4_correction(int h) const {
  require_h(h);
  return cached("c4corr:" + std::to_string(h), [&] {
    const std::size_t L = sums_.series_length(1.0);
    const auto uh = static_cast<std::size_t>(h);
    const double hd = h;
    // v (1 - h v^(h-1) + (h-1) v^h) / ((1-v)(1-v^h)), squared
    const Series numerator =
        series::add(series::add(series::monomial(1), series::monomial(uh, -hd)), series::monomial(uh + 1, hd - 1.0));
    const Series base =
        series::divide(numerator, series::multiply(one_minus_vk(1), one_minus_vk(uh), L), L);
    PrimeSeries s{[h, hd](std::uint64_t p) {
                    const double x = dbl(p);
                    const double ph = std::pow(x, h);
                    const double t = (ph - hd * x + hd - 1.0) / ((x - 1.0) * (ph - 1.0));
                    return t * t;
                  },
                  1.0, series::multiply(base, base, L)};
    ConstantValue v = sums_.sum("sum_p ((p^h-hp+h-1)/((p-1)(p^h-1)))^2", s);
    v.h = h;
    return v;
  });
}

ConstantValue ConstantEvaluator::c1(int h) const {
  require_h(h);
  return cached("C1:" + std::to_string(h), [&] {
    return linear("C1", h, sums_.truncation_prime(), {{1.0, mertens_b1()}, {-1.0, c1_correction(h)}});
  });
}

ConstantValue ConstantEvaluator::c2(int h) const {
  require_h(h);
  return cached("C2:" + std::to_string(h), [&] {
    return linear("C2", h, sums_.truncation_prime(),
                  {{1.0, square_plus_self(c1(h))}, {-1.0, zeta2()}, {-1.0, c2_correction(h)}});
  });
}

ConstantValue ConstantEvaluator::c3(int h) const {
  require_h(h);
  return cached("C3:" + std::to_string(h), [&] {
    return linear("C3", h, sums_.truncation_prime(), {{1.0, mertens_b2()}, {-1.0, c3_correction(h)}});
  });
}

ConstantValue ConstantEvaluator::c4(int h) const {
  require_h(h);
  return cached("C4:" + std::to_string(h), [&] {
    return linear("C4", h, sums_.truncation_prime(),
                  {{1.0, square_plus_self(c3(h))}, {-1.0, zeta2()}, {-1.0, c4_correction(h)}});
  });
}

ConstantValue ConstantEvaluator::l_h(int h, int r) const {
  require_h(h);
  if (r <= h) throw std::invalid_argument("L_h(r) needs r > h");
  return cached("L:" + std::to_string(h) + ":" + std::to_string(r), [&] {
    const double alpha = 1.0 / h;
    const std::size_t L = sums_.series_length(alpha);
    // v = p^(-1/h): v^r / (1 - v + v^h)
    Series c = series::divide(series::monomial(static_cast<std::size_t>(r)), one_minus_v_plus_vh(h), L);
    PrimeSeries s{[h, r](std::uint64_t p) {
                    const double x = dbl(p);
                    return 1.0 / (std::pow(x, static_cast<double>(r) / h - 1.0) *
                                  (x - std::pow(x, 1.0 - 1.0 / h) + 1.0));
                  },
                  alpha, std::move(c)};
    ConstantValue v = sums_.sum("L_h(r)", s);
    v.h = h;
    return v;
  });
}

ConstantValue ConstantEvaluator::d2_correction(int h) const {
  require_h(h);
  return cached("d2corr:" + std::to_string(h), [&] {
    const double alpha = 1.0 / h;
    const std::size_t L = sums_.series_length(alpha);
    const Series base =
        series::divide(series::monomial(static_cast<std::size_t>(h)), one_minus_v_plus_vh(h), L);
    PrimeSeries s{[h](std::uint64_t p) {
                    const double x = dbl(p);
                    const double t = 1.0 / (x - std::pow(x, 1.0 - 1.0 / h) + 1.0);
                    return t * t;
                  },
                  alpha, series::multiply(base, base, L)};
    ConstantValue v = sums_.sum("sum_p (1/(p-p^(1-1/h)+1))^2", s);
    v.h = h;
    return v;
  });
}

ConstantValue ConstantEvaluator::b3_correction(int h) const {
  require_h(h);
  return cached("b3corr:" + std::to_string(h), [&] {
    const double alpha = 1.0 / h;
    const std::size_t L = sums_.series_length(alpha);
    const auto uh = static_cast<std::size_t>(h);
    const double hd = h;
    // v^(h+1) ((h+1) - h v - 2h v^(h-1) + (2h-1) v^h) / ((1-v^h)(1-v)(1-v+v^h))
    Series numerator = series::add(series::monomial(0, hd + 1.0), series::monomial(1, -hd));
    numerator = series::add(numerator, series::monomial(uh - 1, -2.0 * hd));
    numerator = series::add(numerator, series::monomial(uh, 2.0 * hd - 1.0));
    numerator = series::multiply(series::monomial(uh + 1), numerator, L);
    const Series denominator = series::multiply(
        series::multiply(one_minus_vk(uh), one_minus_vk(1), L), one_minus_v_plus_vh(h), L);
    PrimeSeries s{[hd](std::uint64_t p) {
                    const double x = dbl(p);
                    const double r = std::pow(x, 1.0 / hd);  // p^(1/h)
                    const double num = (hd + 1.0) * x * r - hd * x - 2.0 * hd * r * r + (2.0 * hd - 1.0) * r;
                    const double den = (x - 1.0) * (r - 1.0) * (x * r + r - x);
                    return num / den;
                  },
                  alpha, series::divide(numerator, denominator, L)};
    ConstantValue v = sums_.sum("B3 prime sum", s);
    v.h = h;
    return v;
  });
}

ConstantValue ConstantEvaluator::b4_correction(int h) const {
  require_h(h);
  return cached("b4corr:" + std::to_string(h), [&] {
    const double alpha = 1.0 / h;
    const std::size_t L = sums_.series_length(alpha);
    const auto uh = static_cast<std::size_t>(h);
    const double hd = h;
    // (h - (h-1) v) v^h / ((1-v)(1-v+v^h)), squared
    const Series numerator = series::multiply(
        series::add(series::monomial(0, hd), series::monomial(1, -(hd - 1.0))), series::monomial(uh), L);
    const Series base =
        series::divide(numerator, series::multiply(one_minus_vk(1), one_minus_v_plus_vh(h), L), L);
    PrimeSeries s{[hd](std::uint64_t p) {
                    const double x = dbl(p);
                    const double r = std::pow(x, 1.0 / hd);
                    const double t = (hd * (r - 1.0) + 1.0) / ((r - 1.0) * (x - x / r + 1.0));
                    return t * t;
                  },
                  alpha, series::multiply(base, base, L)};
    ConstantValue v = sums_.sum("B4 prime sum", s);
    v.h = h;
    return v;
  });
}

ConstantValue ConstantEvaluator::d1(int h) const {
  require_h(h);
  return cached("D1:" + std::to_string(h), [&] {
    const double log_h = std::log(static_cast<double>(h));
    return linear("D1", h, sums_.truncation_prime(),
                  {{1.0, mertens_b1()}, {1.0, l_h(h, h + 1)}, {-1.0, l_h(h, 2 * h)}}, -log_h,
                  kEps * log_h);
  });
}

ConstantValue ConstantEvaluator::d2(int h) const {
  require_h(h);
  return cached("D2:" + std::to_string(h), [&] {
    return linear("D2", h, sums_.truncation_prime(),
                  {{1.0, square_plus_self(d1(h))}, {-1.0, zeta2()}, {-1.0, d2_correction(h)}});
  });
}

ConstantValue ConstantEvaluator::b3(int h) const {
  require_h(h);
  return cached("B3:" + std::to_string(h), [&] {
    const double hd = h;
    const double log_h = std::log(hd);
    return linear("B3", h, sums_.truncation_prime(), {{hd, mertens_b2()}, {1.0, b3_correction(h)}},
                  -hd * log_h, kEps * hd * log_h);
  });
}

ConstantValue ConstantEvaluator::b4(int h) const {
  require_h(h);
  return cached("B4:" + std::to_string(h), [&] {
    const double hd = h;
    return linear("B4", h, sums_.truncation_prime(),
                  {{1.0, square_plus_self(b3(h))}, {-hd * hd, zeta2()}, {-1.0, b4_correction(h)}});
  });
}

ConstantValue ConstantEvaluator::gamma0_product(int h) const {
  require_h(h);
  return cached("gamma0_product:" + std::to_string(h), [&] {
    const double alpha = 1.0 / h;
    const std::size_t L = sums_.series_length(alpha);
    // local factor 1 + v^(h+1) + ... + v^(2h-1) in v = p^(-1/h)
    Series local = series::monomial(0);
    for (int k = h + 1; k <= 2 * h - 1; ++k) local = series::add(local, series::monomial(static_cast<std::size_t>(k)));
    PrimeSeries s{[h](std::uint64_t p) {
                    const double x = dbl(p);
                    const double r = std::pow(x, 1.0 / h);
                    return std::log1p((x - r) / (x * x * (r - 1.0)));
                  },
                  alpha, series::log(local, L)};
    ConstantValue v = sums_.product("gamma0 (Euler product)", s);
    v.h = h;
    return v;
  });
}

ConstantValue ConstantEvaluator::euler_product_g(double s, int h, std::span<const std::uint64_t> excluded) const {
  require_h(h);
  if (!(s > 1.0 / (2.0 * h + 2.0))) throw std::invalid_argument("G(s) needs s > 1/(2h+2)");
  for (std::size_t i = 0; i < excluded.size(); ++i) {
    for (std::size_t j = i + 1; j < excluded.size(); ++j) {
      if (excluded[i] == excluded[j]) throw std::invalid_argument("excluded primes must be distinct");
    }
  }
  char key[64];
  std::snprintf(key, sizeof key, "G:%d:%.17g", h, s);
  const ConstantValue full = cached(key, [&] {
    const CoefficientPolynomial poly = a_coefficients(h);
    const std::size_t L = sums_.series_length(s);
    const Series local = series::from_integers(poly.coefficients);  // P_h(v)
    PrimeSeries ps{[h, s](std::uint64_t p) {
                     // factored form; the expanded polynomial cancels badly near v = 1
                     const double v = std::pow(dbl(p), -s);
                     const double vh = std::pow(v, h);
                     double acc = std::log1p(vh - v) + std::log1p(-vh) - std::log1p(-v);
                     for (int j = h + 1; j <= 2 * h - 1; ++j) acc += std::log1p(-std::pow(v, j));
                     return acc;
                   },
                   s, series::log(local, L)};
    ConstantValue v = sums_.product("G", ps);
    v.h = h;
    return v;
  });
  if (excluded.empty()) return full;
  ConstantValue out = full;
  for (const std::uint64_t q : excluded) {
    const double qd = dbl(q);
    const double factor = 1.0 + std::pow(qd, -h * s) / (1.0 - std::pow(qd, -s));
    out.value /= factor;
    out.tail_bound /= factor;
  }
  out.tail_bound += 4.0 * kEps * static_cast<double>(excluded.size()) * std::abs(out.value);
  return out;
}

ConstantValue ConstantEvaluator::gamma_coefficient(int i, int h, std::span<const std::uint64_t> excluded) const {
  require_h(h);
  if (i < 0 || i > h - 1) throw std::invalid_argument("gamma coefficient index must lie in [0, h-1]");
  const ConstantValue g = euler_product_g(1.0 / (h + i), h, excluded);
  ConstantValue out = product_of("gamma_" + std::to_string(i), h, c_rh(h + i, h), g);
  return out;
}

ConstantValue mertens_b1(std::uint64_t truncation_prime, TailMode mode) {
  return ConstantEvaluator({truncation_prime, mode}).mertens_b1();
}

ConstantValue mertens_b2(std::uint64_t truncation_prime, TailMode mode) {
  return ConstantEvaluator({truncation_prime, mode}).mertens_b2();
}

}  // namespace omega
