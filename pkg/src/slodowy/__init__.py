"""Nilpotent orbits of sl_N, Slodowy slices, and the combinatorics of their symplectic resolutions."""

from .partitions import Partition, count_resolutions, dominates, dual, orbit_dim, parse
from .slices import SlicePair, count_slice_resolutions, decompose_quiver, decompose_young, make_slice_pair, slice_dim

__all__ = [
    "Partition",
    "SlicePair",
    "count_resolutions",
    "count_slice_resolutions",
    "decompose_quiver",
    "decompose_young",
    "dominates",
    "dual",
    "make_slice_pair",
    "orbit_dim",
    "parse",
    "slice_dim",
]
