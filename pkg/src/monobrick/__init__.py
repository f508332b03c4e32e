"""Monobrick enumeration and verification over two Nakayama families."""

from monobrick.arcs import (
    Algebra,
    Arc,
    Crossing,
    HomKind,
    arc_length,
    crossing_kind,
    hom_kind,
    socle_series,
    submodule_arcs,
)

__all__ = [
    "Algebra",
    "Arc",
    "Crossing",
    "HomKind",
    "arc_length",
    "crossing_kind",
    "hom_kind",
    "socle_series",
    "submodule_arcs",
]

__version__ = "0.1.0"
