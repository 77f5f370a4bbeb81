"""
Builders for the two base algebras.

The tables come from the golden store; cross_check() compares them with
the 5x5 matrix realization they were derived from.
"""

import logging
from typing import Optional

import numpy as np

from app.exceptions import DomainError
from app.models.algebra import LieAlgebra
from app.services import orthogonal
from app.services.golden import GoldenStore, get_store

logger = logging.getLogger(__name__)

ALGEBRA_KEYS = {3: "o5-p3", 2: "o51-p2"}


def build_o5_p3(store: Optional[GoldenStore] = None) -> LieAlgebra:
    """o(5) = sp(4) over GF(3) in the Chevalley basis h1, h2, x1..x4, y1..y4."""
    return (store or get_store()).algebra("o5-p3")


def build_o51_p2(store: Optional[GoldenStore] = None) -> LieAlgebra:
    """The simple derived algebra o^(1)(5) over GF(2)."""
    return (store or get_store()).algebra("o51-p2")


def build_o5_p2_full() -> LieAlgebra:
    """The 15-dimensional, non-simple o(5) over GF(2)."""
    return orthogonal.full_orthogonal_p2()


def build_base(p: int, store: Optional[GoldenStore] = None) -> LieAlgebra:
    if p == 3:
        return build_o5_p3(store)
    if p == 2:
        return build_o51_p2(store)
    raise DomainError(f"no base algebra for p = {p}")


def cross_check(p: int, store: Optional[GoldenStore] = None) -> list:
    """
    Compare the golden table with the matrix realization.

    Returns:
        List of (a, b) label pairs whose brackets differ (empty if identical)
    """
    golden = build_base(p, store)
    oracle = orthogonal.orthogonal_realization(p)
    mismatches = []
    for i in range(golden.dim):
        for j in range(i + 1, golden.dim):
            if np.any(golden.table[i, j] != oracle.table[i, j]):
                mismatches.append((golden.basis[i], golden.basis[j]))
    if mismatches:
        logger.warning("Golden table %s differs from the matrix realization on %d pairs",
                       golden.name, len(mismatches))
    return mismatches
