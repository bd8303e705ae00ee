"""Dyck triangle, Catalan numbers as sums of squares, and Dyck word enumeration."""

from ._core import (
    CapExceeded,
    InvalidNode,
    InvalidWord,
    OutOfRange,
    OutOfTable,
    Triangle,
    ballot,
    binomial,
    catalan,
    column_term,
    decompose,
    enumerate,
    ij_to_nk,
    midpoint_histogram,
    nk_to_ij,
    unbalance_profile,
    validate,
    validate_by_positions,
)

__all__ = [
    "CapExceeded",
    "InvalidNode",
    "InvalidWord",
    "OutOfRange",
    "OutOfTable",
    "Triangle",
    "ballot",
    "binomial",
    "catalan",
    "column_term",
    "decompose",
    "enumerate",
    "ij_to_nk",
    "midpoint_histogram",
    "nk_to_ij",
    "unbalance_profile",
    "validate",
    "validate_by_positions",
]
