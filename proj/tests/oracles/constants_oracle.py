#!/usr/bin/env python3
"""High-precision reference values for the prime-sum constants.

Independent of the C++ library: uses mpmath's own prime zeta function and
exact rational power-series arithmetic. Each prime sum sum_p f(p) is written
as a power series in v = p^(-alpha),
    sum_p f(p) = sum_{p <= M} f(p) + sum_k c_k * (P(k alpha) - sum_{p <= M} p^(-k alpha)),
with P the prime zeta function. The output is frozen into the unit tests.

Usage: python3 constants_oracle.py [h ...]
"""
import sys
from fractions import Fraction

import mpmath as mp

mp.mp.dps = 40
M = 2000         # primes below M are summed in closed form
K = 160          # series length


def primes_below(n):
    sieve = bytearray([1]) * n
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(n ** 0.5) + 1):
        if sieve[i]:
            sieve[i * i::i] = bytearray(len(sieve[i * i::i]))
    return [i for i in range(n) if sieve[i]]


PRIMES = primes_below(M)


def poly(coeffs):
    return [Fraction(c) for c in coeffs]


def mul(a, b):
    out = [Fraction(0)] * min(K, len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if i + j >= K:
                break
            out[i + j] += x * y
    return out


def div(a, b):
    # power series a / b, b[0] != 0
    out = [Fraction(0)] * K
    a = a + [Fraction(0)] * (K - len(a))
    for k in range(K):
        s = a[k] - sum(out[j] * b[k - j] for j in range(max(0, k - len(b) + 1), k))
        out[k] = s / b[0]
    return out


def log_series(f):
    # log of a series with f[0] == 1
    f = f + [Fraction(0)] * (K - len(f))
    out = [Fraction(0)] * K
    for k in range(1, K):
        s = k * f[k] - sum(j * out[j] * f[k - j] for j in range(1, k))
        out[k] = s / k
    return out


def monomial(k, c=1):
    return [Fraction(0)] * k + [Fraction(c)]


def add(*ps):
    n = max(len(p) for p in ps)
    out = [Fraction(0)] * n
    for p in ps:
        for i, c in enumerate(p):
            out[i] += c
    return out


def scale(p, c):
    return [x * c for x in p]


def prime_sum(closed, series, alpha):
    """sum over all primes of f(p^(-alpha)); closed(v) is f in closed form and
    series its power-series coefficients in v."""
    alpha = mp.mpf(alpha)
    total = mp.mpf(0)
    for p in PRIMES:
        total += closed(mp.mpf(p) ** (-alpha))
    for k, c in enumerate(series):
        if c == 0 or k == 0:
            continue
        s = k * alpha
        tail = mp.primezeta(s) - mp.fsum(mp.mpf(p) ** (-s) for p in PRIMES)
        total += mp.mpf(c.numerator) / c.denominator * tail
        if abs(tail) < mp.mpf(10) ** -35:
            break
    return total


def constants(h):
    one = poly([1])
    v_h = monomial(h)
    one_minus_vh = add(one, scale(v_h, -1))
    one_minus_v = poly([1, -1])
    # alpha = 1, v = 1/p
    b1 = [Fraction(0), Fraction(0)] + [Fraction(-1, k) for k in range(2, K)]
    b2mb1 = [Fraction(0), Fraction(0)] + [Fraction(1)] * (K - 2)
    c1corr = div(mul(v_h, one_minus_v), one_minus_vh)
    c2base = div(mul(monomial(1), add(one, scale(monomial(h - 1), -1))), one_minus_vh)
    c3corr = div(scale(v_h, h), one_minus_vh)
    num4 = add(one, scale(monomial(h - 1), -h), scale(monomial(h), h - 1))
    c4base = div(mul(monomial(1), num4), mul(one_minus_v, one_minus_vh))

    def from_p(f):
        return lambda v: f(1 / v)

    B1 = mp.euler + prime_sum(from_p(lambda p: mp.log(1 - 1 / p) + 1 / p), b1, 1)
    B2 = B1 + prime_sum(from_p(lambda p: 1 / (p * (p - 1))), b2mb1, 1)
    z2 = mp.zeta(2)
    C1 = B1 - prime_sum(from_p(lambda p: (p - 1) / (p * (p ** h - 1))), c1corr, 1)
    C2 = C1 ** 2 + C1 - z2 - prime_sum(
        from_p(lambda p: ((p ** (h - 1) - 1) / (p ** h - 1)) ** 2), mul(c2base, c2base), 1)
    C3 = B2 - prime_sum(from_p(lambda p: h / (p ** h - 1)), c3corr, 1)
    C4 = C3 ** 2 + C3 - z2 - prime_sum(
        from_p(lambda p: ((p ** h - h * p + h - 1) / ((p - 1) * (p ** h - 1))) ** 2),
        mul(c4base, c4base), 1)

    # alpha = 1/h, v = p^(-1/h)
    a = mp.mpf(1) / h
    den = add(one_minus_v, v_h)                  # 1 - v + v^h

    def L(r):
        return prime_sum(lambda v: v ** r / (1 - v + v ** h), div(monomial(r), den), a)

    D1 = B1 - mp.log(h) + L(h + 1) - L(2 * h)
    d2 = div(v_h, den)
    D2 = D1 ** 2 + D1 - z2 - prime_sum(lambda v: (v ** h / (1 - v + v ** h)) ** 2, mul(d2, d2), a)

    def b3_closed(v):
        p = v ** -h
        q = v ** -1
        return (((h + 1) * p * q - h * p - 2 * h * q ** 2 + (2 * h - 1) * q)
                / ((p - 1) * (q - 1) * (p * q + q - p)))

    nb3 = add(poly([h + 1, -h]), scale(monomial(h - 1), -2 * h), scale(monomial(h), 2 * h - 1))
    b3 = div(mul(monomial(h + 1), nb3), mul(mul(one_minus_vh, one_minus_v), den))
    B3 = h * (B2 - mp.log(h)) + prime_sum(b3_closed, b3, a)

    def b4_closed(v):
        p = v ** -h
        q = v ** -1
        return ((h * (q - 1) + 1) / ((q - 1) * (p - p / q + 1))) ** 2

    b4 = div(mul(poly([h, -(h - 1)]), v_h), mul(one_minus_v, den))
    B4 = B3 ** 2 + B3 - h * h * z2 - prime_sum(b4_closed, mul(b4, b4), a)

    def g_closed(v):
        p = v ** -h
        q = v ** -1
        return mp.log(1 + (p - q) / (p ** 2 * (q - 1)))

    gamma_local = add(one, *[monomial(k) for k in range(h + 1, 2 * h)])
    gamma0 = mp.exp(prime_sum(g_closed, log_series(gamma_local), a))
    return dict(B1=B1, B2=B2, C1=C1, C2=C2, C3=C3, C4=C4, L_h1=L(h + 1), L_2h=L(2 * h),
                D1=D1, D2=D2, B3=B3, B4=B4, gamma0=gamma0)


if __name__ == "__main__":
    hs = [int(a) for a in sys.argv[1:]] or [2, 3]
    for h in hs:
        for name, value in constants(h).items():
            print(f"h={h} {name:7s} {mp.nstr(value, 20)}")
