import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubesum.eisenstein import (
    ONE,
    P3,
    UNITS,
    ZETA,
    EisensteinInt as E,
    associates,
    conj,
    divides,
    ediv,
    gcd,
    is_primary,
    norm,
    primary_associate,
    split_prime,
)
from cubesum.profile import is_prime

coord = st.integers(-10**6, 10**6)
elems = st.builds(E, coord, coord)
nonzero = elems.filter(bool)


def test_ring_examples():
    assert P3 * P3 == E(0, -3)
    assert conj(E(2, 3)) == E(-1, -3)
    assert -E(0) == E(0)
    assert ZETA * ZETA == E(-1, -1)
    assert ZETA**3 == ONE


def test_norm_examples():
    assert norm(P3) == 3
    assert norm(E(2, 3)) == 7
    assert norm(E(0)) == 0


@given(elems, elems, elems)
def test_ring_laws(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a - a == E(0)


@given(elems)
def test_norm_is_z_times_conj(z):
    prod = z * conj(z)
    assert prod == E(norm(z), 0)
    assert norm(z) >= 0
    assert (norm(z) == 0) == (not z)


@settings(max_examples=500)
@given(elems, elems)
def test_norm_multiplicative(a, b):
    assert norm(a * b) == norm(a) * norm(b)


@settings(max_examples=500)
@given(elems, nonzero)
def test_divmod_norm_bound(a, b):
    q, r = ediv(a, b)
    assert a == q * b + r
    assert norm(r) < norm(b)


def test_divmod_examples():
    z = E(4, -7)
    assert divmod(z, ONE) == (z, E(0))
    q, r = divmod(E(7), E(2, 3))
    assert not r and q * E(2, 3) == E(7) and q in associates(E(-1, -3))
    q, r = divmod(E(5), E(2))
    assert q in (E(2), E(3)) and norm(r) == 1
    with pytest.raises(ZeroDivisionError):
        ediv(ONE, E(0))


def test_gcd_examples():
    z = E(3, 5)
    assert gcd(z, 0) == z
    assert gcd(7, E(2, -1)) in associates(E(2, -1))
    assert gcd(4, 6) in associates(E(2))
    with pytest.raises(ValueError):
        gcd(0, 0)


@given(nonzero, nonzero)
def test_gcd_divides_both(a, b):
    g = gcd(a, b)
    assert divides(g, a) and divides(g, b)


def test_primary_associate_examples():
    assert primary_associate(E(2, 3)) == E(2, 3)
    assert primary_associate(E(2, -1)) == E(-1, -3)
    with pytest.raises(ValueError):
        primary_associate(P3)


def test_exactly_one_primary_associate():
    for a in range(-15, 16):
        for b in range(-15, 16):
            z = E(a, b)
            if norm(z) % 3 == 0:
                continue
            assert sum(is_primary(u * z) for u in UNITS) == 1
            assert primary_associate(z) in associates(z)


def test_split_prime_examples():
    s = split_prime(7)
    assert (s.pi, s.pi_conj) == (E(2, 3), E(-1, -3))
    assert s.pi * s.pi_conj == E(7)
    s = split_prime(13)
    assert (s.pi, s.pi_conj) == (E(-1, 3), E(-4, -3))
    for bad in (11, 3, 49, 1):
        with pytest.raises(ValueError):
            split_prime(bad)


def test_split_prime_all_below_10000():
    for ell in range(7, 10**4, 6):
        if not is_prime(ell):
            continue
        s = split_prime(ell)
        assert norm(s.pi) == ell
        assert is_primary(s.pi) and s.pi.zc > 0
        assert s.pi_conj == conj(s.pi)
        assert s.pi * s.pi_conj in associates(E(ell))


@pytest.mark.parametrize("seed", [0, 1, 2, 99])
def test_split_prime_does_not_depend_on_seed(seed):
    assert split_prime(10009, seed) == split_prime(10009)


def test_big_integers():
    big = E(2**200 + 1, -(3**130))
    q, r = ediv(big * E(17, 4) + E(1), E(17, 4))
    assert r == E(1) and q == big
