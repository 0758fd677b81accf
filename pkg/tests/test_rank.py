import pytest

from cubesum.errors import InternalInconsistency
from cubesum.profile import factor_two_primes
from cubesum.rank import CubeSumStatus, Unconditional, consistency_check, rank_verdict, root_number
from cubesum.selmer import dim_selmer_direct


def test_root_number_examples():
    assert root_number(factor_two_primes(262)) == 1
    assert root_number(factor_two_primes(14)) == 1
    assert root_number(factor_two_primes(22)) == -1


@pytest.mark.parametrize(
    "n, t, upper, ranks, status",
    [
        (262, 1, 0, (0,), CubeSumStatus.PROVEN_NOT_CUBE_SUM),
        (281 * 89, 2, 1, (1,), CubeSumStatus.CUBE_SUM_IF_SHA_EVEN),
        (53 * 71, 3, 2, (2, 0), CubeSumStatus.EVEN_RANK_SET_IF_SHA_EVEN),
        (19 * 467, 4, 3, (3, 1), CubeSumStatus.CUBE_SUM_IF_SHA_EVEN),
        (199 * 109, 5, 4, (4, 2, 0), CubeSumStatus.EVEN_RANK_SET_IF_SHA_EVEN),
    ],
)
def test_verdicts(n, t, upper, ranks, status):
    p = factor_two_primes(n)
    v = rank_verdict(p, dim_selmer_direct(p))
    assert v.t == t and v.rank_upper == upper
    assert v.possible_ranks_if_sha_even == ranks
    assert v.cube_sum_status == status
    assert (v.unconditional == Unconditional.RANK_ZERO_PROVEN) == (t == 1)
    assert consistency_check(v)


def test_dimension_out_of_range():
    p = factor_two_primes(262)
    for t in (0, 4):
        with pytest.raises(InternalInconsistency):
            rank_verdict(p, t)


def test_consistency_examples():
    assert consistency_check(rank_verdict(factor_two_primes(262), 1))
    p = factor_two_primes(22)
    v = rank_verdict(p, dim_selmer_direct(p))
    assert v.t == 2 and v.root_number == -1 and consistency_check(v)
    assert not consistency_check(rank_verdict(p, 1))


def test_to_dict():
    p = factor_two_primes(262)
    assert rank_verdict(p, 1).to_dict() == {
        "t": 1, "rank_upper": 0, "parity": 0, "possible_ranks": [0],
        "unconditional": "rank_zero", "cube_sum": "proven_not", "root_number": 1,
    }
