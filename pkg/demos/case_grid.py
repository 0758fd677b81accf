"""How the Selmer dimension is distributed over the case grid.

Groups every n = l1^a * l2^b with primes below 100 by the number of split
primes and by n mod 9, and counts the dimensions that occur.
"""
from collections import Counter, defaultdict

from cubesum.audit import two_prime_factorizations
from cubesum.profile import profile_from_factors
from cubesum.selmer import dim_selmer_closed

table = defaultdict(Counter)
for factors in two_prime_factorizations(100):
    p = profile_from_factors(factors)
    cls = "+-1" if p.n_is_pm1_mod_9 else "other"
    table[(p.k1, cls)][dim_selmer_closed(p).dim] += 1

print("k1  n mod 9   dimension counts")
for (k1, cls), counts in sorted(table.items()):
    dims = ", ".join(f"t={t}: {c}" for t, c in sorted(counts.items()))
    print(f"{k1:2}  {cls:7}   {dims}")
