"""
nilduality: combinatorics of nilpotent orbits in the classical Lie algebras.

Modules:

- ``partition``: Young diagrams and dominance order.
- ``orbits``: types A/B/C/D, special and metaplectic special orbits, Hasse diagrams.
- ``collapses``: B/C/D-collapses, with a brute-force oracle.
- ``duality``: Lusztig-Spaltenstein, Spaltenstein and Barbasch-Vogan dualities,
  their metaplectic counterparts, and the orbit side of the theta lift.
- ``characters``: infinitesimal characters, their theta lift, row pairings.
- ``verify``: exhaustive finite-range checks C1..C14.
- ``cli``: the ``nilduality`` command.
"""

from .characters import (
    HalfInt,
    InfChar,
    RowPairing,
    infinitesimal_character,
    is_metaplectic_integral,
    rho,
    row_pairing,
    theta_lift_character,
    unipotent_attachment,
)
from .collapses import collapse, collapse_oracle
from .duality import DualPair, d_BV, d_LS, d_SP, md_BV, md_LS, md_SP, theta_lift_orbit
from .errors import *  # noqa: F401,F403
from .orbits import (
    Family,
    OrbitFilter,
    enumerate_orbits,
    hasse_edges,
    is_metaplectic_special,
    is_special,
    is_type,
)
from .partition import (
    Partition,
    dominance_leq,
    enumerate_partitions,
    grow,
    prepend_column,
    prepend_row,
    shrink,
    strip_first_column,
    strip_first_row,
    transpose,
)
from .verify import CheckReport, run_all, run_check

__version__ = "0.1.0"
