"""Exact arithmetic in the Eisenstein integers Z[zeta], zeta^2 + zeta + 1 = 0.

Elements are stored as ``re + zc*zeta`` with Python ints, so there is no
overflow at any size.
"""
from __future__ import annotations

import random
from dataclasses import dataclass


@dataclass(frozen=True)
class EisensteinInt:
    re: int
    zc: int = 0

    @classmethod
    def coerce(cls, x) -> "EisensteinInt":
        if isinstance(x, EisensteinInt):
            return x
        if isinstance(x, int):
            return cls(x, 0)
        raise TypeError(f"cannot interpret {x!r} as an Eisenstein integer")

    def __add__(self, other):
        try:
            other = EisensteinInt.coerce(other)
        except TypeError:
            return NotImplemented
        return EisensteinInt(self.re + other.re, self.zc + other.zc)

    __radd__ = __add__

    def __neg__(self):
        return EisensteinInt(-self.re, -self.zc)

    def __sub__(self, other):
        try:
            other = EisensteinInt.coerce(other)
        except TypeError:
            return NotImplemented
        return EisensteinInt(self.re - other.re, self.zc - other.zc)

    def __rsub__(self, other):
        return EisensteinInt.coerce(other) - self

    def __mul__(self, other):
        try:
            other = EisensteinInt.coerce(other)
        except TypeError:
            return NotImplemented
        a, b, c, d = self.re, self.zc, other.re, other.zc
        # (a + b z)(c + d z) = ac + (ad + bc) z + bd z^2,  z^2 = -1 - z
        return EisensteinInt(a * c - b * d, a * d + b * c - b * d)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not defined in Z[zeta]")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other):
        return ediv(self, other)

    def __floordiv__(self, other):
        return ediv(self, other)[0]

    def __mod__(self, other):
        return ediv(self, other)[1]

    def __bool__(self):
        return bool(self.re or self.zc)

    def conj(self) -> "EisensteinInt":
        return conj(self)

    def norm(self) -> int:
        return norm(self)

    def __str__(self):
        if not self.zc:
            return str(self.re)
        z = "ζ" if abs(self.zc) == 1 else f"{abs(self.zc)}ζ"
        if not self.re:
            return z if self.zc > 0 else f"-{z}"
        return f"{self.re}{'+' if self.zc > 0 else '-'}{z}"


ZERO = EisensteinInt(0, 0)
ONE = EisensteinInt(1, 0)
ZETA = EisensteinInt(0, 1)
# the ramified prime above 3
P3 = EisensteinInt(1, -1)
UNITS = (ONE, ZETA, EisensteinInt(-1, -1), -ONE, -ZETA, EisensteinInt(1, 1))


def conj(z: EisensteinInt) -> EisensteinInt:
    # conj(zeta) = zeta^2 = -1 - zeta
    return EisensteinInt(z.re - z.zc, -z.zc)


def norm(z: EisensteinInt) -> int:
    return z.re * z.re - z.re * z.zc + z.zc * z.zc


def _round_div(num: int, den: int) -> int:
    """Nearest integer to num/den (den > 0), ties toward zero."""
    q, r = divmod(num, den)
    twice = 2 * r
    if twice > den or (twice == den and q < 0):
        q += 1
    return q


def ediv(a, b):
    """Euclidean division: ``a = q*b + r`` with ``norm(r) < norm(b)``.

    The quotient rounds each coordinate of ``a*conj(b)/norm(b)`` to the
    nearest integer, ties toward zero.
    """
    a, b = EisensteinInt.coerce(a), EisensteinInt.coerce(b)
    nb = norm(b)
    if nb == 0:
        raise ZeroDivisionError("division by zero in Z[zeta]")
    t = a * conj(b)
    q = EisensteinInt(_round_div(t.re, nb), _round_div(t.zc, nb))
    return q, a - q * b


def divides(d, a) -> bool:
    return not ediv(a, d)[1]


def gcd(a, b) -> EisensteinInt:
    """A greatest common divisor, defined up to units."""
    a, b = EisensteinInt.coerce(a), EisensteinInt.coerce(b)
    if not a and not b:
        raise ValueError("gcd(0, 0) is undefined")
    while b:
        a, b = b, ediv(a, b)[1]
    return a


def associates(z: EisensteinInt) -> list[EisensteinInt]:
    return [u * z for u in UNITS]


def is_primary(z: EisensteinInt) -> bool:
    return z.re % 3 == 2 and z.zc % 3 == 0


def primary_associate(z) -> EisensteinInt:
    """The unique associate congruent to 2 mod 3."""
    z = EisensteinInt.coerce(z)
    if norm(z) % 3 == 0:
        raise ValueError(f"{z} has norm divisible by 3; no primary associate")
    for w in associates(z):
        if is_primary(w):
            return w
    raise AssertionError("unreachable: some associate is always primary")


@dataclass(frozen=True)
class PrimeSplitting:
    """Conjugate primary pair (pi, pi') above a prime ell = 1 mod 3.

    ``pi`` is the member with positive zeta coefficient.
    """
    ell: int
    pi: EisensteinInt
    pi_conj: EisensteinInt

    def root_of_unity(self, side: int = 0) -> int:
        """The r in F_ell with zeta = r modulo pi (side 0) or pi' (side 1)."""
        p = self.pi if side == 0 else self.pi_conj
        return residue_root(p, self.ell)


def residue_root(pi: EisensteinInt, ell: int) -> int:
    """Image of zeta in Z[zeta]/(pi) = F_ell for a degree-one prime pi."""
    if pi.zc % ell == 0:
        raise ValueError(f"{pi} is not a degree-one prime above {ell}")
    # pi = a + b*zeta = 0 mod pi  =>  zeta = -a/b
    return (-pi.re * pow(pi.zc, -1, ell)) % ell


def split_prime(ell: int, seed=None) -> PrimeSplitting:
    """Factor ell = pi * pi' for a prime ell = 1 mod 3.

    A nontrivial cube root of unity r mod ell is found by raising random
    residues to the power (ell-1)/3; then pi = gcd(ell, r - zeta) is made
    primary. The output does not depend on the random choices.
    """
    from .profile import is_prime

    if ell % 3 != 1 or not is_prime(ell):
        raise ValueError(f"{ell} is not a prime congruent to 1 mod 3")
    rng = random.Random(seed)
    e = (ell - 1) // 3
    while True:
        r = pow(rng.randrange(2, ell), e, ell)
        if r != 1:
            break
    pi = primary_associate(gcd(EisensteinInt(ell), EisensteinInt(r, -1)))
    if norm(pi) != ell:
        raise AssertionError(f"splitting of {ell} failed: got {pi}")
    if pi.zc < 0:
        pi = conj(pi)
    return PrimeSplitting(ell, pi, conj(pi))
