"""Cube tests in finite residue fields and the ring Z[zeta]/9.

Cubic symbol values are returned as exponents k in {0, 1, 2}, standing for
zeta^k; 0 means "is a cube". Every condition at the prime 1 - zeta is
decided modulo (1 - zeta)^4 = (9), which is all the precision needed.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .eisenstein import EisensteinInt, norm, residue_root


def is_cube_mod_ell(a: int, ell: int) -> bool:
    if a % ell == 0:
        raise ValueError(f"{a} is divisible by {ell}")
    if ell % 3 == 2:
        return True  # cubing permutes F_ell^*
    return pow(a, (ell - 1) // 3, ell) == 1


def _exponent_of(value: int, r: int, ell: int) -> int:
    if value == 1:
        return 0
    if value == r:
        return 1
    if value == r * r % ell:
        return 2
    raise ArithmeticError(f"{value} is not a cube root of unity mod {ell}")


def cubic_symbol(alpha, pi: EisensteinInt) -> int:
    """Exponent k with alpha^((N(pi)-1)/3) = zeta^k modulo pi.

    ``pi`` must be a degree-one prime (prime norm ell = 1 mod 3). The value
    depends only on the ideal (pi), not on the associate passed.
    """
    alpha = EisensteinInt.coerce(alpha)
    ell = norm(pi)
    r = residue_root(pi, ell)
    a = (alpha.re + alpha.zc * r) % ell
    if a == 0:
        raise ValueError(f"{pi} divides {alpha}")
    return _exponent_of(pow(a, (ell - 1) // 3, ell), r, ell)


@dataclass(frozen=True)
class Fp2Elem:
    """x + y*tau in F_ell[tau]/(tau^2 + tau + 1), ell = 2 mod 3."""
    x: int
    y: int
    ell: int

    def __post_init__(self):
        object.__setattr__(self, "x", self.x % self.ell)
        object.__setattr__(self, "y", self.y % self.ell)

    @classmethod
    def reduce(cls, z: EisensteinInt, ell: int) -> "Fp2Elem":
        return cls(z.re, z.zc, ell)

    def __mul__(self, other: "Fp2Elem") -> "Fp2Elem":
        a, b, c, d = self.x, self.y, other.x, other.y
        return Fp2Elem(a * c - b * d, a * d + b * c - b * d, self.ell)

    def __pow__(self, k: int) -> "Fp2Elem":
        result, base = Fp2Elem(1, 0, self.ell), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __bool__(self):
        return bool(self.x or self.y)


def _fp2_power(z: Fp2Elem) -> Fp2Elem:
    if not z:
        raise ValueError("zero is not a unit of F_ell^2")
    if z.ell % 3 != 2:
        raise ValueError(f"{z.ell} is not 2 mod 3; F_ell[tau] is not a field")
    return z ** ((z.ell * z.ell - 1) // 3)


def is_cube_in_Fp2(z: Fp2Elem) -> bool:
    return _fp2_power(z) == Fp2Elem(1, 0, z.ell)


def cubic_symbol_inert(alpha, ell: int) -> int:
    """Cubic residue symbol of alpha at an inert prime ell = 2 mod 3."""
    w = _fp2_power(Fp2Elem.reduce(EisensteinInt.coerce(alpha), ell))
    for k, root in enumerate((Fp2Elem(1, 0, ell), Fp2Elem(0, 1, ell), Fp2Elem(-1, -1, ell))):
        if w == root:
            return k
    raise ArithmeticError("power is not a cube root of unity")


@dataclass(frozen=True)
class Mod9Elem:
    re: int
    zc: int

    def __post_init__(self):
        object.__setattr__(self, "re", self.re % 9)
        object.__setattr__(self, "zc", self.zc % 9)

    def __mul__(self, other: "Mod9Elem") -> "Mod9Elem":
        return mod9_mul(self, other)

    def __pow__(self, k: int) -> "Mod9Elem":
        if k < 0:
            return mod9_inv(self) ** (-k)
        result = Mod9Elem(1, 0)
        for _ in range(k):
            result = result * self
        return result

    def is_unit(self) -> bool:
        # a + b*zeta is a unit mod (1 - zeta) iff a + b is prime to 3
        return (self.re + self.zc) % 3 != 0


def mod9_reduce(z) -> Mod9Elem:
    z = EisensteinInt.coerce(z)
    return Mod9Elem(z.re, z.zc)


def mod9_mul(a: Mod9Elem, b: Mod9Elem) -> Mod9Elem:
    return Mod9Elem(a.re * b.re - a.zc * b.zc, a.re * b.zc + a.zc * b.re - a.zc * b.zc)


@lru_cache(maxsize=None)
def _units_mod9() -> tuple:
    return tuple(u for u in (Mod9Elem(a, b) for a in range(9) for b in range(9)) if u.is_unit())


def mod9_inv(z: Mod9Elem) -> Mod9Elem:
    if not z.is_unit():
        raise ValueError(f"{z} is not invertible mod 9")
    one = Mod9Elem(1, 0)
    for u in _units_mod9():
        if mod9_mul(z, u) == one:
            return u
    raise AssertionError("unit without inverse")


@lru_cache(maxsize=None)
def unit_cubes_mod9() -> frozenset:
    """All cubes of units of Z[zeta]/9, by enumeration of the 54 units."""
    return frozenset(u * u * u for u in _units_mod9())


def is_unit_cube_mod9(u: Mod9Elem) -> bool:
    if not u.is_unit():
        raise ValueError(f"{u} is not a unit mod 9")
    return u in unit_cubes_mod9()


# 1 + (1 - zeta)^3, generator of the U^3/U^4 part of the image at 1 - zeta
ONE_PLUS_P3 = mod9_reduce(EisensteinInt(1) + EisensteinInt(1, -1) ** 3)
