"""Infinitesimal characters and the stable-range theta lift."""

from nilduality import (
    Family,
    enumerate_orbits,
    infinitesimal_character,
    is_metaplectic_integral,
    prepend_row,
    row_pairing,
    theta_lift_character,
    theta_lift_orbit,
    unipotent_attachment,
)

n = 3
for p in enumerate_orbits(Family.C, 2 * n):
    chi = infinitesimal_character(p, n)
    tag = "integral" if is_metaplectic_integral(chi) else ""
    print(f"{str(p):>12}  {str(chi):<16} {tag}")

# adding a row of length 2a to the orbit lifts its character by (1/2, ..., (2a-1)/2)
p, a = enumerate_orbits(Family.C, 4)[1], 3
left = infinitesimal_character(prepend_row(p, 2 * a), 2 + a)
right = theta_lift_character(infinitesimal_character(p, 2), a)
print(p, "->", left, "==", right, left == right)
print("lifted orbit:", theta_lift_orbit(p, a))

rp = row_pairing([6, 4, 2, 2, 1, 1])
print(rp)
print("core orbit:", rp.core())

chi, orbit = unipotent_attachment([4, 2])
print("attached to 4,2:", chi, "and", orbit)
