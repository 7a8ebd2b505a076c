"""Finite set-theoretic Yang-Baxter machinery.

Submodules: core (quadratic sets and condition checks), retract
(retraction towers, multipermutation level), groups (translation image
group, automorphisms), graphs (the labelled action graph), extensions
(twisted unions), enumeration (exhaustive census up to isomorphism),
fixtures (worked-example corpus), files (JSON I/O) and cli.
"""

from .core import (
    PropertyReport,
    QuadraticSet,
    Relation,
    check_conditions,
    check_ybe,
    is_homomorphism,
    relations,
    restrict,
)
from .retract import Retraction, RetractTower, mpl, retract_orbit, tower

__all__ = [
    "PropertyReport",
    "QuadraticSet",
    "Relation",
    "Retraction",
    "RetractTower",
    "check_conditions",
    "check_ybe",
    "is_homomorphism",
    "mpl",
    "relations",
    "restrict",
    "retract_orbit",
    "tower",
]
