"""dim_F3 of the phi-Selmer group of E_{16n^2} over Q(zeta), computed two ways.

Candidates are pairs (x^2, x) with x an S_n-unit modulo cubes, written as an
exponent vector over F_3 on the ordered generators [zeta, g_1, ..., g_m].
The direct method enumerates all 3^(m+1) vectors and keeps those meeting
the local condition at every place dividing n and at 1 - zeta. Places away
from n and 3 impose nothing on S_n-units, so they are not checked.

The closed form dispatches on residues mod 9 and cubic residue symbols.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache

import numpy as np

from .eisenstein import ZETA, EisensteinInt, ediv
from .errors import InternalInconsistency, UnreachableCase
from .modular import (
    ONE_PLUS_P3,
    Mod9Elem,
    cubic_symbol,
    cubic_symbol_inert,
    is_unit_cube_mod9,
    unit_cubes_mod9,
    mod9_inv,
    mod9_reduce,
)
from .profile import TwoPrimeProfile, is_prime


class Method(str, Enum):
    CLOSED_FORM = "closed"
    DIRECT = "direct"


@dataclass(frozen=True)
class SelmerBasisElement:
    exponents: tuple
    label: str

    def pair_label(self, is_n: bool = False) -> str:
        if is_n:
            return "(n^2, n)"
        return f"(x^2, x) with x = {self.label}"


@dataclass
class SelmerReport:
    dim: int
    method: Method
    basis: list = field(default_factory=list)
    generators: list = field(default_factory=list)
    branch: str = ""
    trace: list = field(default_factory=list)
    n_exponents: tuple = ()

    def basis_labels(self) -> list:
        return [b.pair_label(b.exponents == self.n_exponents) for b in self.basis]


@dataclass(frozen=True)
class Place:
    label: str
    kind: str  # "split" or "inert"
    ell: int
    element: EisensteinInt
    uniformizer: int  # index of the generator that is a uniformizer here


class SelmerSetup:
    """Generators, places and residue data of one profile, built once."""

    def __init__(self, profile: TwoPrimeProfile):
        self.profile = profile
        self.generators = sunit_generators(profile)
        self.labels = [label for label, _ in self.generators]
        self.places = []
        for idx, (label, g) in enumerate(self.generators[1:], start=1):
            if g.zc == 0:
                self.places.append(Place(label, "inert", g.re, g, idx))
            else:
                self.places.append(Place(label, "split", g.norm(), g, idx))
        self.n_vec = _exponents_of_n(profile, self.generators)
        # character table: chi[q][i] = cubic symbol of generator i at place q
        self.chi = [
            [None if i == q.uniformizer else _symbol_at(g, q) for i, (_, g) in enumerate(self.generators)]
            for q in self.places
        ]
        self.mod9 = [mod9_reduce(g) for _, g in self.generators]
        self.first_p_gen = mod9_reduce(ZETA) if profile.n_is_pm1_mod_9 else mod9_reduce(profile.n)

    def place(self, label: str) -> Place:
        for q in self.places:
            if q.label == label:
                return q
        raise KeyError(label)

    def at_q(self, x, q: Place) -> bool:
        qi = self.places.index(q)
        for j in range(3):
            y = [(a - j * b) % 3 for a, b in zip(x, self.n_vec)]
            if y[q.uniformizer]:
                continue  # valuation not divisible by 3
            s = sum(yi * c for yi, c in zip(y, self.chi[qi]) if c is not None) % 3
            if s == 0:
                return True
        return False

    def residue_mod9(self, x) -> Mod9Elem:
        r = Mod9Elem(1, 0)
        for a, g in zip(x, self.mod9):
            r = r * g ** (a % 3)
        return r

    def at_p(self, x) -> bool:
        r = self.residue_mod9(x)
        g1_inv, g2_inv = mod9_inv(self.first_p_gen), mod9_inv(ONE_PLUS_P3)
        for j in range(3):
            for k in range(3):
                if is_unit_cube_mod9(r * g1_inv ** j * g2_inv ** k):
                    return True
        return False

    def all_vectors(self) -> np.ndarray:
        w = len(self.generators)
        return np.array(list(itertools.product(range(3), repeat=w)), dtype=np.int64).reshape(-1, w)

    def at_q_many(self, X: np.ndarray, q: Place) -> np.ndarray:
        qi = self.places.index(q)
        chi = np.array([0 if c is None else c for c in self.chi[qi]], dtype=np.int64)
        n_vec = np.array(self.n_vec, dtype=np.int64)
        ok = np.zeros(len(X), dtype=bool)
        for j in range(3):
            Y = (X - j * n_vec) % 3
            ok |= (Y[:, q.uniformizer] == 0) & ((Y @ chi) % 3 == 0)
        return ok

    def at_p_many(self, X: np.ndarray) -> np.ndarray:
        # residues mod 9 encoded as 9*re + zc
        idx = np.full(len(X), 9 * 1 + 0, dtype=np.int64)
        table = _mod9_table()
        for i, g in enumerate(self.mod9):
            powers = np.array([_code(g ** a) for a in range(3)], dtype=np.int64)
            idx = table[idx, powers[X[:, i]]]
        good = np.zeros(81, dtype=bool)
        g1, g2 = self.first_p_gen, ONE_PLUS_P3
        for c in unit_cubes_mod9():
            for j in range(3):
                for k in range(3):
                    good[_code(c * g1 ** j * g2 ** k)] = True
        return good[idx]

    def label_of(self, x) -> str:
        parts = []
        for a, name in zip(x, self.labels):
            a %= 3
            if a == 1:
                parts.append(name)
            elif a == 2:
                parts.append(f"{name}^2")
        return "*".join(parts) or "1"


def _code(z: Mod9Elem) -> int:
    return 9 * z.re + z.zc


@lru_cache(maxsize=None)
def _mod9_table() -> np.ndarray:
    t = np.zeros((81, 81), dtype=np.int64)
    for a in range(81):
        for b in range(81):
            t[a, b] = _code(Mod9Elem(*divmod(a, 9)) * Mod9Elem(*divmod(b, 9)))
    return t


def _symbol_at(g: EisensteinInt, q: Place) -> int:
    if q.kind == "split":
        return cubic_symbol(g, q.element)
    return cubic_symbol_inert(g, q.ell)


def _exponents_of_n(profile: TwoPrimeProfile, generators) -> tuple:
    """Exponent vector of n itself, including the root-of-unity part."""
    vec = [0] * len(generators)
    prod = EisensteinInt(1)
    ell_exp = dict(profile.primes)
    for i, (_, g) in enumerate(generators[1:], start=1):
        ell = g.re if g.zc == 0 else g.norm()
        vec[i] = ell_exp[ell]
        prod = prod * g ** ell_exp[ell]
    unit, rem = ediv(EisensteinInt(profile.n), prod)
    if rem:
        raise InternalInconsistency("generators do not multiply to n")
    for k in range(3):
        if unit in (ZETA**k, -(ZETA**k)):
            vec[0] = k
            break
    else:
        raise InternalInconsistency(f"n / prod(generators) = {unit} is not a unit")
    return tuple(v % 3 for v in vec)


def sunit_generators(profile: TwoPrimeProfile) -> list:
    """[(label, element)]: zeta, then pi, pi' per split prime, then inert primes.

    -1 is a cube, so zeta alone generates the roots of unity modulo cubes.
    """
    gens = [("zeta", ZETA)]
    for ell, _ in profile.primes:
        if ell % 3 == 1:
            s = profile.splittings[ell]
            gens.append((f"pi_{ell}", s.pi))
            gens.append((f"pi'_{ell}", s.pi_conj))
        else:
            gens.append((str(ell), EisensteinInt(ell)))
    return gens


def _setup(profile_or_setup) -> SelmerSetup:
    if isinstance(profile_or_setup, SelmerSetup):
        return profile_or_setup
    return SelmerSetup(profile_or_setup)


def local_condition_at_q(x, q, profile) -> bool:
    """Is (x^2, x) in the local image <(n^2, n)> at the place q dividing n?

    True iff x * n^-j is a cube in the completion for some j: the valuation
    must vanish mod 3 and the unit part must be a cube in the residue field.
    ``q`` is a place label such as "pi_7", "pi'_7" or "2".
    """
    setup = _setup(profile)
    exps = x.exponents if isinstance(x, SelmerBasisElement) else tuple(x)
    return setup.at_q(exps, setup.place(q) if isinstance(q, str) else q)


def local_condition_at_p(x, profile) -> bool:
    """Membership in the local image at 1 - zeta, decided modulo 9."""
    setup = _setup(profile)
    exps = x.exponents if isinstance(x, SelmerBasisElement) else tuple(x)
    return setup.at_p(exps)


def _span(vectors, width: int) -> set:
    span = {(0,) * width}
    for v in vectors:
        span = {tuple((s + c * a) % 3 for s, a in zip(w, v)) for w in span for c in range(3)}
    return span


def dim_selmer_direct(profile: TwoPrimeProfile, keep_trace: bool = True) -> SelmerReport:
    setup = _setup(profile)
    width = len(setup.generators)
    X = setup.all_vectors()
    checks = {q.label: setup.at_q_many(X, q) for q in setup.places}
    checks["p"] = setup.at_p_many(X)
    ok = np.logical_and.reduce(list(checks.values()))
    accepted = [tuple(int(a) for a in row) for row in X[ok]]
    trace = []
    if keep_trace:
        names = list(checks)
        trace = [
            (tuple(int(a) for a in X[i]), {k: bool(checks[k][i]) for k in names})
            for i in range(len(X))
        ]

    acc = set(accepted)
    # basis starts from (n^2, n), which is always a Selmer element
    basis_vecs = []
    span = {(0,) * width}
    for v in [setup.n_vec] + accepted:
        if v in acc and v not in span:
            basis_vecs.append(v)
            span = _span(basis_vecs, width)
    if span != acc:
        raise InternalInconsistency(
            f"n={setup.profile.n}: accepted set of size {len(acc)} is not a subgroup"
        )
    dim = len(basis_vecs)
    if 3**dim != len(acc):
        raise InternalInconsistency(f"n={setup.profile.n}: {len(acc)} is not a power of 3")
    return SelmerReport(
        dim=dim,
        method=Method.DIRECT,
        basis=[SelmerBasisElement(v, setup.label_of(v)) for v in basis_vecs],
        generators=setup.labels,
        trace=trace,
        n_exponents=setup.n_vec,
    )


def accepted_set(profile) -> set:
    """All accepted exponent vectors of the direct method."""
    setup = _setup(profile)
    return {
        x
        for x in itertools.product(range(3), repeat=len(setup.generators))
        if setup.at_p(x) and all(setup.at_q(x, q) for q in setup.places)
    }


def _closed_dispatch(p: TwoPrimeProfile) -> tuple[int, str]:
    n9 = p.n_mod_9
    pm1 = p.n_is_pm1_mod_9
    if p.k1 + p.k2 != 2:
        raise UnreachableCase(f"closed form covers two primes only, got {p.primes}")
    r1, r2 = p.ell_mod_9
    if p.k1 == 0:
        pair = sorted((r1, r2))
        if p.exponents in ((1, 1), (2, 2)):
            if pair == [2, 5]:
                return 1, "inert pair, l1*l2 type: residues {2, 5} mod 9"
            if pair == [8, 8]:
                return 3, "inert pair, l1*l2 type: both 8 mod 9"
            if n9 in (4, 7):
                return 2, "inert pair, l1*l2 type: n = 4, 7 mod 9"
        else:
            if r1 == r2 and r1 in (2, 5):
                return 1, "inert pair, l1^2*l2 type: l1 = l2 = 2 or 5 mod 9"
            if pair == [8, 8]:
                return 3, "inert pair, l1^2*l2 type: both 8 mod 9"
            if n9 in (2, 5):
                return 2, "inert pair, l1^2*l2 type: n = 2, 5 mod 9"
    elif p.k1 == 1:
        cube = p.symbols["l2|pi_l1"] == 0
        if not pm1:
            if cube:
                return 3, "split+inert, n != +-1 mod 9: l2 a cube mod l1"
            return 1, "split+inert, n != +-1 mod 9: l2 not a cube mod l1"
        if r1 == 1 and r2 == 8 and cube:
            return 4, "split+inert, n = +-1 mod 9: l1 = 1, l2 = 8 mod 9, l2 a cube mod l1"
        return 2, "split+inert, n = +-1 mod 9: otherwise"
    else:
        both = p.symbols["pi_l1|pi_l2"] == 0 and p.symbols["pi'_l1|pi_l2"] == 0
        if n9 == 1:
            if r1 == r2 == 1 and both:
                return 5, "split pair, n = 1 mod 9: l1 = l2 = 1 mod 9, pi and pi' cubes mod pi_l2"
            return 3, "split pair, n = 1 mod 9: otherwise"
        if n9 in (4, 7):
            if both:
                return 4, "split pair, n = 4, 7 mod 9: pi and pi' cubes mod pi_l2"
            return 2, "split pair, n = 4, 7 mod 9: otherwise"
    raise UnreachableCase(f"no closed-form branch for n={p.n} {p.primes}")


def dim_selmer_closed(profile: TwoPrimeProfile) -> SelmerReport:
    dim, branch = _closed_dispatch(profile)
    return SelmerReport(
        dim=dim,
        method=Method.CLOSED_FORM,
        generators=[label for label, _ in sunit_generators(profile)],
        branch=branch,
    )


def dim_selmer_all_inert(primes) -> int:
    """Closed form for n whose prime factors are all 2 mod 3 (any number k).

    ``primes`` is a sequence of (ell, e) with e in {1, 2}.
    """
    primes = list(primes)
    if not primes:
        raise ValueError("need at least one prime")
    n = 1
    for ell, e in primes:
        if ell == 3 or ell % 3 != 2 or not is_prime(ell):
            raise ValueError(f"{ell} is not a prime congruent to 2 mod 3")
        if e not in (1, 2):
            raise ValueError(f"exponent {e} of {ell} is not 1 or 2")
        n *= ell**e
    if len({ell for ell, _ in primes}) != len(primes):
        raise ValueError("primes must be distinct")
    k = len(primes)
    if n % 9 not in (1, 8):
        return k
    if all(ell % 9 == 8 for ell, _ in primes):
        return k + 1
    return k - 1
