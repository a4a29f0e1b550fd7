"""Exact computations for theta lifts on covers of symplectic groups."""

from .groups import GroupElement, HeisenbergElement, WeylElement
from .matrix import Matrix
from .orbits import SymplecticPartition, dominance, o_c, orbit_dim
from .scalars import GF, QQ, MuR, PAdicScalar, PrimeFieldElement

__all__ = [
    "GF",
    "QQ",
    "GroupElement",
    "HeisenbergElement",
    "Matrix",
    "MuR",
    "PAdicScalar",
    "PrimeFieldElement",
    "SymplecticPartition",
    "WeylElement",
    "dominance",
    "o_c",
    "orbit_dim",
]

__version__ = "0.1.0"
