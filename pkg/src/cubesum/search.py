"""Bounded search for a^3 + b^3 = n*c^3 and the map to y^2 = x^3 - 432n^2.

For each denominator c, every solution has d = a + b > 0 dividing N = n*c^3
with a^2 - ab + b^2 = N/d >= d^2/4, so d^3 <= 4N. Given d, the pair (a, b)
is the root pair of X^2 - dX + (d^2 - N/d)/3, which is tested exactly with
integer square roots. This replaces a scan over a by a scan over divisors.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .profile import factorize


@dataclass(frozen=True)
class CubeSumWitness:
    a: int
    b: int
    c: int

    def verify(self, n: int) -> bool:
        return self.a**3 + self.b**3 == n * self.c**3 and self.c > 0

    def as_tuple(self) -> tuple:
        return (self.a, self.b, self.c)


@dataclass(frozen=True)
class CurvePoint:
    u: Fraction
    v: Fraction

    def on_curve(self, n: int) -> bool:
        return self.v**2 == self.u**3 - 432 * n * n


def _icbrt(m: int) -> int:
    """Floor of the real cube root of m >= 0."""
    if m < 2:
        return m
    r = 1 << (m.bit_length() // 3 + 1)  # above the root; Newton descends
    while True:
        s = (2 * r + m // (r * r)) // 3
        if s >= r:
            break
        r = s
    while r**3 > m:
        r -= 1
    while (r + 1) ** 3 <= m:
        r += 1
    return r


def _small_factor_table(limit: int) -> list:
    spf = list(range(limit + 1))
    for p in range(2, isqrt(limit) + 1):
        if spf[p] == p:
            for q in range(p * p, limit + 1, p):
                if spf[q] == q:
                    spf[q] = p
    return spf


def _divisors_upto(factors: list, cap: int) -> list:
    divs = [1]
    for p, e in factors:
        new = []
        for d in divs:
            x = d
            for _ in range(e):
                x *= p
                if x > cap:
                    break
                new.append(x)
        divs += new
    return divs


def _solutions_for(N: int, factors: list) -> list:
    out = []
    for d in _divisors_upto(factors, _icbrt(4 * N)):
        r = 4 * (N // d) - d * d
        if r < 0 or r % 3:
            continue
        m = isqrt(r // 3)
        if m * m != r // 3 or (d + m) % 2:
            continue
        out.append(((d + m) // 2, (d - m) // 2))
    return out


def search_cube_sum(n: int, bound: int):
    """First primitive (a, b, c) with a^3 + b^3 = n*c^3, 1 <= c <= bound.

    Order: increasing c, then decreasing a, with a >= b. Returns None when
    nothing exists up to the bound; that is evidence, not proof.
    """
    if n < 1 or bound < 1:
        raise ValueError("n and bound must be positive")
    n_fac = factorize(n)
    spf = _small_factor_table(bound)
    for c in range(1, bound + 1):
        fac = dict(n_fac)
        m = c
        while m > 1:
            p = spf[m]
            fac[p] = fac.get(p, 0) + 3
            m //= p
        N = n * c**3
        best = None
        for a, b in _solutions_for(N, sorted(fac.items())):
            if gcd(gcd(a, b), c) != 1:
                continue
            if best is None or a > best[0]:
                best = (a, b)
        if best is not None:
            w = CubeSumWitness(best[0], best[1], c)
            if not w.verify(n):
                raise AssertionError(f"bad witness {w} for n={n}")
            return w
    return None


def witness_to_point(w: CubeSumWitness, n: int) -> CurvePoint:
    s = w.a + w.b
    if s == 0:
        raise ValueError("a + b = 0 gives no point")
    return CurvePoint(Fraction(12 * n * w.c, s), Fraction(36 * n * (w.a - w.b), s))
