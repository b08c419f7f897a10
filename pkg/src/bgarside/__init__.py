"""Curve-diagram engine for the Artin group of type B inside the braid group.

Exact-rational geometry computes curve diagrams; their reduced wall-crossing
words are complete invariants; winding and wall-crossing labelings read off
the classical and dual Garside lengths, cross-checked against independent
algebraic oracles.
"""

from .words import (
    BRAID,
    TYPE_B,
    GroupTag,
    GroupWord,
    WordError,
    braid,
    format_word,
    free_reduce,
    generator,
    identity,
    invert,
    parse_word,
    psi,
    typeb,
    word,
)
from .disc import DiscModel, GeometryError, PLHomeo, Polyline, act, apply_homeo, base_diagram, half_twist
from .crossings import (
    CanonicalForm,
    CrossingLetter,
    CrossingWord,
    canonical_form,
    elements_equal,
    extract,
    is_identity,
    is_r_symmetric,
    reduce_word,
)
from .labels import (
    AmbiguousMinimalWalk,
    LabelSummary,
    LabelWalk,
    label_summary,
    wcr_labels,
    win_labels,
)

__all__ = [name for name in dir() if not name.startswith("_")]
