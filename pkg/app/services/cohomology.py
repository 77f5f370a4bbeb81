"""
Chevalley-Eilenberg cochain complex with adjoint or trivial coefficients.

The differential follows the convention fixed by d(a)(g) = [a, g] on
0-cochains and d(phi)(u, v) = phi([u, v]) on trivial 1-cochains, and
satisfies d(a (x) w) = a (x) dw + da ^ w. It is the negative of the
textbook alternating-sum differential, which is what is computed here,
batched over integer tensors mod p.
"""

import itertools
import logging
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from app.exceptions import DomainError, NotACocycleError
from app.models.algebra import LieAlgebra
from app.models.cochain import ADJOINT, TRIVIAL, Cochain, sort_with_sign
from app.services import linalg

logger = logging.getLogger(__name__)

MAX_DEGREE = 4


class CochainComplex:
    """C^q(L; M) for M the adjoint or trivial module, over a prime field."""

    def __init__(self, L: LieAlgebra, module: str = ADJOINT, batch_size: int = 64):
        """
        Initialize the complex.

        Args:
            L: Lie algebra over a prime field
            module: "adjoint" or "trivial"
            batch_size: Basis cochains differentiated per tensor batch
        """
        if L.field.degree != 1:
            raise DomainError("cochain complexes are computed over prime fields only")
        if module not in (ADJOINT, TRIVIAL):
            raise DomainError(f"unknown coefficient module {module!r}")
        self.L = L
        self.p = L.p
        self.n = L.dim
        self.module = module
        self.m = self.n if module == ADJOINT else 1
        self.T = L.int_table()
        self.batch_size = batch_size
        self._wedges: Dict[int, np.ndarray] = {}
        self._matrices: Dict[int, object] = {}
        self._solvers: Dict[int, linalg.PreparedSolver] = {}

    # ------------------------------------------------------------------
    # Bases and coordinates
    # ------------------------------------------------------------------
    def wedges(self, q: int) -> np.ndarray:
        if q not in self._wedges:
            combos = list(itertools.combinations(range(self.n), q))
            self._wedges[q] = np.array(combos, dtype=np.int64).reshape(len(combos), q)
        return self._wedges[q]

    def dim(self, q: int) -> int:
        return self.m * len(self.wedges(q))

    def basis(self, q: int) -> List[Tuple[int, Tuple[int, ...]]]:
        """Basis keys (k, wedge) in coordinate order: position k * #wedges + wedge index."""
        return [(k, tuple(int(a) for a in w)) for k in range(self.m) for w in self.wedges(q)]

    def zero(self, q: int) -> Cochain:
        return Cochain(self.L.basis, self.p, q, self.module)

    def to_vector(self, c: Cochain) -> np.ndarray:
        self._check(c)
        return c.to_vector()

    def from_vector(self, v, q: int) -> Cochain:
        return Cochain.from_vector(np.asarray(v, dtype=np.int64), self.L.basis, self.p, q, self.module)

    def _check(self, c: Cochain):
        if c.basis != tuple(self.L.basis) or c.p != self.p or c.module != self.module:
            raise DomainError("cochain does not belong to this complex")
        if c.q > MAX_DEGREE - 1:
            raise DomainError(f"differentials are computed up to C^{MAX_DEGREE}")

    # ------------------------------------------------------------------
    # Tensors
    # ------------------------------------------------------------------
    def _to_tensors(self, vectors: np.ndarray, q: int) -> np.ndarray:
        """Alternating tensors (B, n, ..., n, m) of a batch of coordinate vectors."""
        B = vectors.shape[0]
        W = self.wedges(q)
        coeffs = vectors.reshape(B, self.m, len(W)).transpose(0, 2, 1)  # (B, wedge, k)
        out = np.zeros((B,) + (self.n,) * q + (self.m,), dtype=np.int64)
        if q == 0:
            out[:] = coeffs[:, 0, :]
            return out
        batch = np.arange(B)[:, None, None]
        k = np.arange(self.m)[None, None, :]
        for perm in itertools.permutations(range(q)):
            sign, _ = sort_with_sign(perm)
            index = (batch,) + tuple(W[:, i][None, :, None] for i in perm) + (k,)
            out[index] = sign * coeffs
        return out

    def _to_vectors(self, tensors: np.ndarray, q: int) -> np.ndarray:
        W = self.wedges(q)
        if q == 0:
            return tensors.reshape(tensors.shape[0], self.m) % self.p
        picked = tensors[(slice(None),) + tuple(W[:, i] for i in range(q))]  # (B, nw, m)
        return picked.transpose(0, 2, 1).reshape(tensors.shape[0], -1) % self.p

    def _d_tensors(self, C: np.ndarray, q: int) -> np.ndarray:
        """d on a batch of alternating q-tensors, returning (q+1)-tensors."""
        T = self.T
        result = np.zeros((C.shape[0],) + (self.n,) * (q + 1) + (self.m,), dtype=np.int64)
        if self.module == ADJOINT:
            # A[b, a0, a1..aq, k] = [e_a0, c(e_a1, ..., e_aq)]_k
            A = np.einsum('zlk,b...l->bz...k', T, C)
            for i in range(q + 1):
                result += (-1) ** i * np.moveaxis(A, 1, 1 + i)
        if q >= 1:
            # G[b, x, y, a2..aq, k] = c([e_x, e_y], e_a2, ...)
            G = np.einsum('xyl,bl...->bxy...', T, C)
            for i in range(q + 1):
                for j in range(i + 1, q + 1):
                    result += (-1) ** (i + j) * np.moveaxis(G, [1, 2], [1 + i, 1 + j])
        return (-result) % self.p

    # ------------------------------------------------------------------
    # Differential
    # ------------------------------------------------------------------
    def differential(self, c: Cochain) -> Cochain:
        """d c as a (q+1)-cochain."""
        self._check(c)
        C = c.to_tensor()[None, ...]
        D = self._d_tensors(C, c.q)
        return Cochain.from_tensor(D[0], self.L.basis, self.p, self.module)

    def matrix(self, q: int):
        """Matrix of d: C^q -> C^(q+1) as a FieldArray of shape (dim q+1, dim q)."""
        if q not in self._matrices:
            if q > MAX_DEGREE - 1:
                raise DomainError(f"differentials are computed up to C^{MAX_DEGREE}")
            rows, cols = self.dim(q + 1), self.dim(q)
            M = np.zeros((rows, cols), dtype=np.int64)
            for start in range(0, cols, self.batch_size):
                stop = min(start + self.batch_size, cols)
                unit = np.zeros((stop - start, cols), dtype=np.int64)
                unit[np.arange(stop - start), np.arange(start, stop)] = 1
                images = self._to_vectors(self._d_tensors(self._to_tensors(unit, q), q), q + 1)
                M[:, start:stop] = images.T
            self._matrices[q] = self.L.field(M % self.p)
            logger.info("Built d_%d of %s: %dx%d", q, self.L.name, rows, cols)
        return self._matrices[q]

    def solver(self, q: int) -> linalg.PreparedSolver:
        """Prepared solver for d x = w with x in C^q."""
        if q not in self._solvers:
            self._solvers[q] = linalg.PreparedSolver(self.matrix(q))
        return self._solvers[q]

    # ------------------------------------------------------------------
    # Cohomology
    # ------------------------------------------------------------------
    def rank(self, q: int) -> int:
        """Rank of d on C^q (0 below degree 0)."""
        if q < 0:
            return 0
        return self.solver(q).rank

    def z_dim(self, q: int) -> int:
        return self.dim(q) - self.rank(q)

    def b_dim(self, q: int) -> int:
        return self.rank(q - 1)

    def h_dim(self, q: int) -> int:
        """dim H^q = dim Z^q - dim B^q."""
        h = self.z_dim(q) - self.b_dim(q)
        logger.info("dim H^%d(%s; %s) = %d", q, self.L.name, self.module, h)
        return h

    def is_cocycle(self, c: Cochain) -> bool:
        return self.differential(c).is_zero()

    def solve_coboundary(self, w: Cochain) -> Tuple[Optional[Cochain], linalg.LinearSystemCertificate]:
        """
        Find a with d a = w.

        Returns:
            (a, certificate); a is None when w is not a coboundary, in which
            case the certificate carries a witness functional
        """
        self._check(w)
        if w.q < 1:
            raise DomainError("0-cochains are never coboundaries")
        q = w.q - 1
        target = self.L.field(w.to_vector() % self.p)
        cert = self.solver(q).solve(target)
        if not cert.feasible:
            return None, cert
        return self.from_vector(np.asarray(cert.solution, dtype=np.int64), q), cert

    def cohomologous(self, c1: Cochain, c2: Cochain) -> bool:
        for c in (c1, c2):
            if not self.is_cocycle(c):
                raise NotACocycleError(f"{c.name or 'cochain'} is not closed")
        solution, _ = self.solve_coboundary(c1 - c2)
        return solution is not None

    def class_rank(self, cocycles: Sequence[Cochain]) -> int:
        """Rank of the span of the classes of the given q-cocycles in H^q."""
        if not cocycles:
            return 0
        q = cocycles[0].q
        for c in cocycles:
            if not self.is_cocycle(c):
                raise NotACocycleError(f"{c.name or 'cochain'} is not closed")
        columns = np.stack([c.to_vector() for c in cocycles], axis=1)
        if q == 0:
            return linalg.rank(self.L.field(columns % self.p))
        B = np.asarray(self.matrix(q - 1), dtype=np.int64)
        combined = self.L.field(np.hstack([B, columns]) % self.p)
        return linalg.rank(combined) - self.rank(q - 1)


def trivial_differential(L: LieAlgebra, phi: Cochain) -> Cochain:
    """d of a cochain with trivial coefficients, e.g. d(y4*)."""
    return CochainComplex(L, TRIVIAL).differential(phi)
