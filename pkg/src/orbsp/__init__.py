"""Triangulations of surfaces with order-2 orbifold points and their algebras.

Combinatorial triangulations built from three puzzle-piece triangle types,
flips and flip graphs, weighted quivers and skew-symmetrizable matrix
mutation, mod-2 cochain complexes with cocycle colorings, and species with
potential over towers of finite fields.
"""

from .surface import Surface, validate_surface, closed_form_counts
from .surface import Excluded, Malformed

__all__ = [
    "Surface",
    "validate_surface",
    "closed_form_counts",
    "Excluded",
    "Malformed",
]
