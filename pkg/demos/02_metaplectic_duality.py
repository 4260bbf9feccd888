"""The metaplectic duality on sp_2n and its two halves.

md_LS sends every orbit of sp_2n to a special orbit of o_2n, reversing
dominance. md_SP then moves special o_2n orbits to the metaplectic special
orbits of sp_2n.
"""

from nilduality import Family, OrbitFilter, enumerate_orbits, md_BV, md_LS, md_SP

size = 8
print(f"{'orbit':>16} {'md_LS':>16} {'md_SP':>16}")
for p in enumerate_orbits(Family.C, size):
    d = md_LS(p)
    print(f"{str(p):>16} {str(d):>16} {str(md_SP(d)):>16}")

image = {md_BV(p) for p in enumerate_orbits(Family.C, size)}
ms = set(enumerate_orbits(Family.C, size, OrbitFilter.METAPLECTIC_SPECIAL))
print("image of md_BV equals the metaplectic special set:", image == ms)

# zero orbit goes to the principal orbit, principal to minimal
for n in range(1, 6):
    print(n, md_BV([1] * (2 * n)), md_BV([2 * n]))
