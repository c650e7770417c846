"""Minimal non-trivial r-covers and the cover-weight inequality.

A family of sets r-covers W when every r-subset of W lies inside some
member.  For minimal non-trivial covers of a t-set the exact inequality

    (|E| - 1) * (r - 1/m) - sum(|A|) <= -t,      m = m_r(K_t),

holds; equivalently the weight phi(E) = (|E|-1)/m + sum(|A|-r) is at
least t - r.  The reduction sequence replaces members by their r-subsets
one at a time and never increases the weight.
"""

import itertools

from ramseykit import (
    check_cover_inequality,
    cover_inequality_lhs,
    enumerate_minimal_nontrivial_covers,
    phi,
    reduction_sequence,
)

print("== all minimal non-trivial 2-covers of a 4-set by proper subsets ==")
W = (1, 2, 3, 4)
candidates = [
    A for size in (2, 3) for A in itertools.combinations(W, size)
]
families = enumerate_minimal_nontrivial_covers(W, candidates, 2)
print(f"{len(families)} families\n")
for fam in families:
    lhs = cover_inequality_lhs(fam, 4)
    print(f"  {fam.members}")
    print(f"    weight phi = {phi(fam, 4)},  inequality LHS = {lhs} <= -4: "
          f"{check_cover_inequality(fam, 4)}")

print("\n== the triangle cover of a 3-set achieves equality ==")
tri = enumerate_minimal_nontrivial_covers(
    (1, 2, 3), list(itertools.combinations((1, 2, 3), 2)), 2
)[0]
print(f"members {tri.members}: LHS = {cover_inequality_lhs(tri, 3)} = -t exactly")

print("\n== reduction sequence: weights never increase ==")
fam = families[-1]
print(f"start from {fam.members}")
for step, weight in reduction_sequence(fam, 4):
    print(f"  phi = {str(weight):>5}   {step.members}")
