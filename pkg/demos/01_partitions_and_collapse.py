"""Young diagrams, orbit types, and collapses."""

import numpy as np

from nilduality import Family, OrbitFilter, Partition, collapse, enumerate_orbits, transpose
from nilduality.orbits import hasse_edges
from nilduality.partition import dominance_matrix

p = Partition([3, 3, 1])
print("p =", p, "size", p.size, "transpose", transpose(p))

# the orbits of sp_6 and o_6 are partitions of 6 with parity rules
for fam in (Family.C, Family.D):
    orbs = enumerate_orbits(fam, 6)
    print(f"type {fam}, size 6:", " ".join(str(q) for q in orbs))

# a partition of the wrong type is pushed down to the largest typed one below it
for q, fam in [(Partition([4, 2]), Family.D), (Partition([3, 1]), Family.C), (Partition([4]), Family.D)]:
    print(f"{fam}-collapse of {q}: {collapse(q, fam)}")

# dominance order as a boolean matrix, rows dominated by columns
orbs = enumerate_orbits(Family.C, 6)
leq = dominance_matrix(orbs)
print(np.asarray(leq, dtype=int))
print("comparable pairs:", int(leq.sum()), "of", leq.size)

# covering relations of the special orbits
special = enumerate_orbits(Family.C, 6, OrbitFilter.SPECIAL)
for small, big in hasse_edges(special):
    print(f"  {small} < {big}")
