"""Exact maximum r-density of small hypergraphs.

The density of F is the maximum over vertex subsets U (|U| > r, at least
one induced edge) of (e(F[U]) - 1) / (|U| - r), with conventions 0 and
1/r for edgeless and single-edge F.  Everything is computed in exact
rational arithmetic.
"""

from fractions import Fraction

from ramseykit import (
    UniformHypergraph,
    clique_density,
    complete_hypergraph,
    max_r_density,
    max_r_density_with_witness,
)

print("== closed form for complete r-graphs ==")
print("m_r(K_t) = (C(t,r) - 1) / (t - r)\n")
print(f"{'t':>3} {'r':>3} {'density':>10}")
for r in (2, 3, 4):
    for t in range(r + 1, 8):
        print(f"{t:>3} {r:>3} {str(clique_density(t, r)):>10}")

print("\n== the closed form matches the subset scan ==")
for r in (2, 3):
    for t in range(r + 1, 7):
        scan = max_r_density(complete_hypergraph(t, r))
        formula = clique_density(t, r)
        assert scan == formula
        print(f"K_{t}^({r}): scan {scan} == formula {formula}")

print("\n== densities of a few sparse graphs ==")
path = UniformHypergraph(4, 2, [(1, 2), (2, 3), (3, 4)])
cycle = UniformHypergraph(5, 2, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])
bowtie = UniformHypergraph(5, 2, [(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)])
for name, F in [("path P4", path), ("cycle C5", cycle), ("bowtie", bowtie)]:
    value, witness = max_r_density_with_witness(F)
    print(f"{name:>9}: density {value}, attained on {witness}")

print("\n== a 3-uniform example: tight pair of tetrahedra ==")
K4 = complete_hypergraph(4, 3)
double = UniformHypergraph(
    5, 3, list(K4.edges) + [(2, 3, 5), (2, 4, 5), (3, 4, 5)]
)
value, witness = max_r_density_with_witness(double)
print(f"two K_4^(3) glued on a triangle: density {value} on {witness}")
assert value > clique_density(4, 3) - Fraction(1, 2)
