"""Exact engine for the action of the longest restricted Weyl element on
the subspace of vectors invariant under the centralizer of a maximal split
torus of a simple real Lie algebra."""

from .rootsys import (
    RootSystem,
    build_root_system,
    dominate,
    reflect,
    weight_multiplicity,
    weyl_dimension,
)
from .so1n import check_star, invariant_tableau, so1n_dim, so1n_sign, tableau_unique

__all__ = [
    "RootSystem",
    "build_root_system",
    "dominate",
    "reflect",
    "weight_multiplicity",
    "weyl_dimension",
    "check_star",
    "invariant_tableau",
    "so1n_dim",
    "so1n_sign",
    "tableau_unique",
]
