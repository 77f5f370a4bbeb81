"""
Exact linear algebra over GF(q) on galois FieldArrays.

Row reduction is delegated to FieldArray.row_reduce(), whose reduced
row echelon form is canonical; solutions are read off with free
variables set to zero, so every answer is deterministic.
"""

import logging
from dataclasses import dataclass, field as dataclass_field
from typing import Optional

import numpy as np

logger = logging.getLogger(__name__)


@dataclass
class LinearSystemCertificate:
    """Outcome of solving A x = b over a finite field."""

    rows: int
    cols: int
    rank: int
    solution: Optional[object] = None
    witness: Optional[object] = None
    pivots: list = dataclass_field(default_factory=list)

    @property
    def feasible(self) -> bool:
        return self.solution is not None

    def check(self, A, b) -> bool:
        """
        Verify the certificate against the system it claims to solve.

        A solution must satisfy A x = b; a witness y must satisfy
        y A = 0 and y . b != 0.
        """
        if self.solution is not None:
            return bool(np.all(A @ self.solution == b))
        y = self.witness
        return bool(np.all(y @ A == 0)) and int(y @ b) != 0

    def to_json(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "rank": self.rank,
            "feasible": self.feasible,
            "solution": None if self.solution is None else [int(v) for v in self.solution],
            "witness": None if self.witness is None else [int(v) for v in self.witness],
        }


def zeros(field, *shape):
    return field.Zeros(shape)


def rank(A) -> int:
    """Rank of a FieldArray matrix (0 for empty matrices)."""
    if A.size == 0:
        return 0
    return int(np.linalg.matrix_rank(A))


def row_reduce(A):
    """Reduced row echelon form and pivot columns."""
    R = A.row_reduce()
    return R, pivot_columns(R)


def pivot_columns(R, ncols: Optional[int] = None) -> list:
    """Pivot column of each nonzero row of an echelon matrix."""
    ncols = R.shape[1] if ncols is None else ncols
    pivots = []
    for row in R[:, :ncols]:
        nz = np.flatnonzero(row)
        if nz.size == 0:
            break
        pivots.append(int(nz[0]))
    return pivots


def nullspace(A):
    """Basis of {x : A x = 0} as rows of a FieldArray."""
    field = type(A)
    if A.shape[0] == 0:
        return field.Identity(A.shape[1])
    return A.null_space()


def left_nullspace(A):
    """Basis of {y : y A = 0} as rows of a FieldArray."""
    field = type(A)
    if A.shape[1] == 0:
        return field.Identity(A.shape[0])
    return A.left_null_space()


def span_rank(vectors, field, dim: int) -> int:
    """Rank of a list of vectors of length dim."""
    if not vectors:
        return 0
    M = field.Zeros((len(vectors), dim))
    for i, v in enumerate(vectors):
        M[i] = v
    return rank(M)


def decompose(basis_matrix, v):
    """
    Coordinates of v in the column span of basis_matrix.

    Returns:
        Coordinate vector, or None when v is outside the span
    """
    cert = solve_with_certificate(basis_matrix, v)
    return cert.solution


class PreparedSolver:
    """
    Solves A x = b repeatedly for a fixed A.

    The reduction [A | I] -> [R | E] is computed once, with E A = R. A
    system is then feasible iff (E b) vanishes beyond the rank, and the
    first such nonzero row of E is an infeasibility witness.
    """

    def __init__(self, A):
        self.field = type(A)
        self.A = A
        self.shape = A.shape
        m, n = A.shape
        augmented = self.field.Zeros((m, n + m))
        augmented[:, :n] = A
        augmented[:, n:] = self.field.Identity(m)
        if m and n:
            reduced = augmented.row_reduce(ncols=n)
        else:
            reduced = augmented
        self.R = reduced[:, :n]
        self.E = reduced[:, n:]
        self.pivots = pivot_columns(self.R)
        self.rank = len(self.pivots)
        logger.debug("Prepared %dx%d system of rank %d", m, n, self.rank)

    def solve(self, b) -> LinearSystemCertificate:
        m, n = self.shape
        y = self.E @ b if m else self.field.Zeros(0)
        residual = np.flatnonzero(y[self.rank:])
        if residual.size:
            row = self.rank + int(residual[0])
            return LinearSystemCertificate(m, n, self.rank, witness=self.E[row].copy(),
                                           pivots=list(self.pivots))
        x = self.field.Zeros(n)
        for r, col in enumerate(self.pivots):
            x[col] = y[r]
        return LinearSystemCertificate(m, n, self.rank, solution=x, pivots=list(self.pivots))


def solve_with_certificate(A, b) -> LinearSystemCertificate:
    """Solve A x = b once; see PreparedSolver for repeated solves."""
    return PreparedSolver(A).solve(b)
