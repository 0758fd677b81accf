"""From Selmer dimension to a cube-sum verdict, checked against a search.

t = 1 proves n is not a sum of two rational cubes. When t is even the rank
is odd if the 3-part of Sha has even dimension, so a point of infinite order
exists; a short search often finds one, though not always (n = 22 needs a
denominator far beyond this bound).
"""
from cubesum.profile import factor_two_primes
from cubesum.rank import rank_verdict
from cubesum.search import search_cube_sum, witness_to_point
from cubesum.selmer import dim_selmer_direct

for n in (20, 14, 262, 22, 35, 65, 3763):
    p = factor_two_primes(n)
    v = rank_verdict(p, dim_selmer_direct(p, keep_trace=False))
    w = search_cube_sum(n, 300)
    line = f"n = {n:5}  t = {v.t}  rank <= {v.rank_upper}  {v.cube_sum_status.value:26}"
    if w:
        pt = witness_to_point(w, n)
        line += f"  {w.a}^3 + {w.b}^3 = {n} * {w.c}^3, point ({pt.u}, {pt.v})"
    else:
        line += "  no witness with c <= 300"
    print(line)
