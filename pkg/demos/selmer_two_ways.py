"""Compute a Selmer dimension by enumeration and by closed form, side by side.

The candidates for n = 1339 = 13 * 103 are the 3^5 exponent vectors over
the generators [zeta, pi_13, pi'_13, pi_103, pi'_103]. Each is checked at
the four places above 13 and 103 and at 1 - zeta.
"""
from cubesum.profile import factor_two_primes
from cubesum.selmer import SelmerSetup, dim_selmer_closed, dim_selmer_direct

n = 1339
profile = factor_two_primes(n)
setup = SelmerSetup(profile)

print(f"n = {n}, primes {profile.primes}, n mod 9 = {profile.n_mod_9}")
for label, g in setup.generators:
    print(f"  generator {label:8} = {g}")
print(f"n as an exponent vector: {setup.n_vec}")

# how each place narrows the candidate set
X = setup.all_vectors()
alive = X
print(f"\nall candidates                  : {len(alive):3}")
for q in setup.places:
    alive = alive[setup.at_q_many(alive, q)]
    print(f"after the condition at {q.label:8}: {len(alive):3} candidates")
alive = alive[setup.at_p_many(alive)]
print(f"after the condition at 1 - zeta : {len(alive):3} candidates")

direct = dim_selmer_direct(profile)
closed = dim_selmer_closed(profile)
print(f"\ndirect enumeration: 3^{direct.dim} = {3 ** direct.dim} elements")
for label in direct.basis_labels():
    print(f"  {label}")
print(f"closed form: {closed.dim} via branch '{closed.branch}'")
