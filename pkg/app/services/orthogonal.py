"""
Matrix realization of o(5) preserving the antidiagonal form B on k^5.

For p = 3 the algebra {X : X^T B + B X = 0} is 10-dimensional and
isomorphic to sp(4); its elements are A B with A skew. For p = 2 the
condition only asks B X to be symmetric, giving the 15-dimensional
o(5) whose derived algebra is the simple o^(1)(5).

The structure constants produced here are the oracle against which the
frozen golden tables are checked.
"""

import logging
from typing import Dict, List, Tuple

import numpy as np

from app.exceptions import DomainError
from app.models.algebra import LieAlgebra, basis_labels
from app.models.fields import get_field
from app.services.linalg import PreparedSolver

logger = logging.getLogger(__name__)

SIZE = 5


def _unit(field, i: int, j: int):
    """Matrix unit E_ij with 1-based indices."""
    E = field.Zeros((SIZE, SIZE))
    E[i - 1, j - 1] = 1
    return E


def antidiagonal_form(field):
    B = field.Zeros((SIZE, SIZE))
    for i in range(SIZE):
        B[i, SIZE - 1 - i] = 1
    return B


def commutator(X, Y):
    return X @ Y - Y @ X


def _skew(field, i: int, j: int):
    return _unit(field, i, j) - _unit(field, j, i)


def _symmetric(field, i: int, j: int):
    if i == j:
        return _unit(field, i, i)
    return _unit(field, i, j) + _unit(field, j, i)


def chevalley_matrices(p: int) -> Dict[str, object]:
    """
    Matrices of h1, h2, x1..x4, y1..y4 in the 5x5 realization.

    p = 3: x1 = A25 B, x2 = A34 B, y1 = A14 B, y2 = -A23 B with
    x3 = [x1, x2], x4 = [x2, x3]. p = 2: x1 = B S34, x2 = B S25,
    y1 = B S23, y2 = B S14 with x3 = [x1, x2], x4 = [x1, x3].
    """
    field = get_field(p)
    B = antidiagonal_form(field)
    m = {}
    if p == 3:
        m["x1"] = _skew(field, 2, 5) @ B
        m["x2"] = _skew(field, 3, 4) @ B
        m["y1"] = _skew(field, 1, 4) @ B
        m["y2"] = -(_skew(field, 2, 3) @ B)
        m["x3"] = commutator(m["x1"], m["x2"])
        m["x4"] = commutator(m["x2"], m["x3"])
        m["y3"] = commutator(m["y1"], m["y2"])
        m["y4"] = commutator(m["y2"], m["y3"])
    elif p == 2:
        m["x1"] = B @ _symmetric(field, 3, 4)
        m["x2"] = B @ _symmetric(field, 2, 5)
        m["y1"] = B @ _symmetric(field, 2, 3)
        m["y2"] = B @ _symmetric(field, 1, 4)
        m["x3"] = commutator(m["x1"], m["x2"])
        m["x4"] = commutator(m["x1"], m["x3"])
        m["y3"] = commutator(m["y1"], m["y2"])
        m["y4"] = commutator(m["y1"], m["y3"])
    else:
        raise DomainError(f"the o(5) oracle covers p = 2 and p = 3, not p = {p}")
    m["h1"] = commutator(m["x1"], m["y1"])
    m["h2"] = commutator(m["x2"], m["y2"])
    return {label: m[label] for label in basis_labels(2, 4)}


def preserves_form(X, p: int) -> bool:
    """X^T B + B X = 0."""
    B = antidiagonal_form(type(X))
    return bool(np.all(X.T @ B + B @ X == 0))


def algebra_from_matrices(labels: List[str], matrices: List, name: str) -> LieAlgebra:
    """
    Structure constants of the span of the given matrices.

    Each commutator is decomposed in the basis by one linear solve.
    """
    field = type(matrices[0])
    n = len(matrices)
    M = field.Zeros((SIZE * SIZE, n))
    for j, X in enumerate(matrices):
        M[:, j] = X.reshape(-1)
    solver = PreparedSolver(M)
    if solver.rank != n:
        raise DomainError(f"{name}: the {n} matrices are linearly dependent")
    table = field.Zeros((n, n, n))
    for i in range(n):
        for j in range(i + 1, n):
            cert = solver.solve(commutator(matrices[i], matrices[j]).reshape(-1))
            if not cert.feasible:
                raise DomainError(f"{name}: [{labels[i]}, {labels[j]}] leaves the span")
            table[i, j] = cert.solution
            table[j, i] = -cert.solution
    logger.info("Built %s from %d matrices", name, n)
    return LieAlgebra(labels, table, name=name)


def orthogonal_realization(p: int) -> LieAlgebra:
    """
    The Chevalley-basis algebra computed from matrices: o(5) at p = 3,
    o^(1)(5) at p = 2.
    """
    matrices = chevalley_matrices(p)
    name = "o5-p3" if p == 3 else "o51-p2"
    return algebra_from_matrices(list(matrices), list(matrices.values()), name)


def full_orthogonal_p2() -> LieAlgebra:
    """
    The 15-dimensional o(5) over GF(2): the Chevalley basis of its derived
    algebra followed by d_i = B E_ii.
    """
    field = get_field(2)
    B = antidiagonal_form(field)
    matrices = chevalley_matrices(2)
    labels = list(matrices)
    mats = list(matrices.values())
    for i in range(1, SIZE + 1):
        labels.append(f"d{i}")
        mats.append(B @ _unit(field, i, i))
    return algebra_from_matrices(labels, mats, "o5-p2")


def generator_relations(p: int) -> List[Tuple[str, str, str]]:
    """Defining relations [a, b] = c of the Chevalley basis."""
    last = ("x2", "x3") if p == 3 else ("x1", "x3")
    last_y = ("y2", "y3") if p == 3 else ("y1", "y3")
    return [
        ("x1", "y1", "h1"), ("x2", "y2", "h2"),
        ("x1", "x2", "x3"), (*last, "x4"),
        ("y1", "y2", "y3"), (*last_y, "y4"),
    ]
