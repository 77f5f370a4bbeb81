"""
Structural computations on Lie algebras over finite fields.

Subspaces are handled as FieldArray matrices whose rows span them; all
spans are reduced with galois row reduction, so dimensions are exact.
"""

import logging
from dataclasses import asdict, dataclass
from typing import Dict, List, Optional

import numpy as np

from app.config import Config
from app.exceptions import ConsistencyError, DomainError
from app.models.algebra import LieAlgebra
from app.services import linalg

logger = logging.getLogger(__name__)


# ----------------------------------------------------------------------
# Subspaces
# ----------------------------------------------------------------------
def span(rows, field, dim: int):
    """Echelon basis (as rows) of the span of the given rows."""
    if rows is None or len(rows) == 0:
        return field.Zeros((0, dim))
    R = rows.row_reduce()
    nonzero = [i for i in range(R.shape[0]) if np.any(R[i] != 0)]
    return R[nonzero]


def bracket_spaces(L: LieAlgebra, U, V):
    """Span of [u, v] for u, v running over the rows of U and V."""
    n = L.dim
    if U.shape[0] == 0 or V.shape[0] == 0:
        return L.field.Zeros((0, n))
    left = (U @ L.table.reshape(n, n * n)).reshape(U.shape[0], n, n)
    products = [V @ left[a] for a in range(U.shape[0])]
    stacked = L.field.Zeros((U.shape[0] * V.shape[0], n))
    for a, block in enumerate(products):
        stacked[a * V.shape[0]:(a + 1) * V.shape[0]] = block
    return span(stacked, L.field, n)


def whole(L: LieAlgebra):
    return L.field.Identity(L.dim)


def derived_algebra(L: LieAlgebra):
    """Rows spanning [L, L]."""
    n = L.dim
    return span(L.table.reshape(n * n, n), L.field, n)


def derived_series(L: LieAlgebra) -> List[int]:
    """Dimensions of L, L', L'', ... until the series stabilizes."""
    current = whole(L)
    dims = [L.dim]
    while True:
        nxt = bracket_spaces(L, current, current)
        if nxt.shape[0] == current.shape[0]:
            return dims
        dims.append(nxt.shape[0])
        current = nxt
        if nxt.shape[0] == 0:
            return dims


def lower_central_series(L: LieAlgebra) -> List[int]:
    """Dimensions of L, [L, L], [L, [L, L]], ... until it stabilizes."""
    current = whole(L)
    dims = [L.dim]
    while True:
        nxt = bracket_spaces(L, whole(L), current)
        if nxt.shape[0] == current.shape[0]:
            return dims
        dims.append(nxt.shape[0])
        current = nxt
        if nxt.shape[0] == 0:
            return dims


def center(L: LieAlgebra):
    """Rows spanning {v : [e_i, v] = 0 for all i}."""
    n = L.dim
    stacked = L.field.Zeros((n * n, n))
    for i in range(n):
        stacked[i * n:(i + 1) * n] = L.ad_basis(i)
    return linalg.nullspace(stacked)


def ideal_closure(L: LieAlgebra, v):
    """Rows spanning the smallest ideal containing v."""
    n = L.dim
    current = span(v.reshape(1, n), L.field, n)
    while current.shape[0]:
        images = [current @ L.ad_basis(i).T for i in range(n)]
        stacked = L.field.Zeros((current.shape[0] * (n + 1), n))
        stacked[:current.shape[0]] = current
        for i, block in enumerate(images):
            stacked[(i + 1) * current.shape[0]:(i + 2) * current.shape[0]] = block
        nxt = span(stacked, L.field, n)
        if nxt.shape[0] == current.shape[0]:
            break
        current = nxt
    return current


def enveloping_dimension(L: LieAlgebra) -> int:
    """
    Dimension of the associative algebra generated by the identity and
    the ad matrices, grown word length by word length.
    """
    n = L.dim
    generators = L.ad_matrices()
    current = span(L.field.Identity(n).reshape(1, n * n), L.field, n * n)
    while True:
        blocks = [current]
        for g in generators:
            # row r of current is a flattened matrix M; store g @ M flattened
            mats = current.reshape(current.shape[0], n, n)
            block = L.field.Zeros((current.shape[0], n * n))
            for r in range(current.shape[0]):
                block[r] = (g @ mats[r]).reshape(-1)
            blocks.append(block)
        stacked = L.field.Zeros((sum(b.shape[0] for b in blocks), n * n))
        offset = 0
        for b in blocks:
            stacked[offset:offset + b.shape[0]] = b
            offset += b.shape[0]
        nxt = span(stacked, L.field, n * n)
        if nxt.shape[0] == current.shape[0] or nxt.shape[0] == n * n:
            return nxt.shape[0]
        current = nxt


def is_simple(L: LieAlgebra) -> bool:
    """
    Simplicity test.

    Rejects when [L, L] != L or some basis vector generates a proper ideal.
    Otherwise accepts iff the ad matrices generate all of End(L), which
    makes L irreducible under its own adjoint action.
    """
    if L.dim < 2:
        return False
    if derived_algebra(L).shape[0] != L.dim:
        return False
    for i in range(L.dim):
        if ideal_closure(L, L.unit(i)).shape[0] != L.dim:
            return False
    return enveloping_dimension(L) == L.dim ** 2


# ----------------------------------------------------------------------
# Gradings and weights
# ----------------------------------------------------------------------
def check_grading(L: LieAlgebra, modulus: Optional[int] = None) -> list:
    """Basis pairs whose bracket leaves the summed degree (empty when graded)."""
    if L.grading is None:
        raise DomainError(f"{L.name} carries no grading")
    problems = []
    g = L.grading
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            for k in np.flatnonzero(L.table[i, j]):
                target = g[i] + g[j]
                ok = (g[k] - target) % modulus == 0 if modulus else g[k] == target
                if not ok:
                    problems.append({"pair": [L.basis[i], L.basis[j]], "component": L.basis[int(k)]})
    return problems


def check_weights(L: LieAlgebra, cartan: tuple = ("h1", "h2")) -> list:
    """
    Weight consistency: ad h acts on every basis vector by its weight,
    and brackets add weights mod p.
    """
    if L.weights is None:
        raise DomainError(f"{L.name} carries no weights")
    problems = []
    p = L.p
    for a, label in enumerate(cartan):
        h = L.index(label)
        for i in range(L.dim):
            expected = L.field(L.weights[i][a] % p) * L.unit(i)
            if np.any(L.bracket(L.unit(h), L.unit(i)) != expected):
                problems.append({"cartan": label, "vector": L.basis[i]})
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            for k in np.flatnonzero(L.table[i, j]):
                if any((L.weights[i][a] + L.weights[j][a] - L.weights[int(k)][a]) % p
                       for a in range(len(cartan))):
                    problems.append({"pair": [L.basis[i], L.basis[j]], "component": L.basis[int(k)]})
    return problems


# ----------------------------------------------------------------------
# Maps
# ----------------------------------------------------------------------
def apply_map(M, v):
    """Image of a coordinate vector under a matrix whose columns are images of basis vectors."""
    return M @ v


def isomorphism_defects(M, A: LieAlgebra, B: LieAlgebra) -> list:
    """Basis pairs (i, j) with M[e_i, e_j]_A != [M e_i, M e_j]_B."""
    n = A.dim
    lhs = (A.table.reshape(n * n, n) @ M.T).reshape(n, n, n)
    # X[i, b, k] = sum_a M[a, i] T_B[a, b, k]
    X = (M.T @ B.table.reshape(n, n * n)).reshape(n, n, n)
    rhs = A.field.Zeros((n, n, n))
    for i in range(n):
        # (X[i].T @ M)[k, j] = [M e_i, M e_j]_k
        rhs[i] = (X[i].T @ M).T
    defects = []
    for i in range(n):
        for j in range(i + 1, n):
            if np.any(lhs[i, j] != rhs[i, j]):
                defects.append((A.basis[i], A.basis[j]))
    return defects


def verify_isomorphism(M, A: LieAlgebra, B: LieAlgebra) -> bool:
    """
    True iff M is invertible and a bracket homomorphism A -> B.

    Args:
        M: Square FieldArray; column i is the image of A's i-th basis vector in B's basis
    """
    if A.dim != B.dim or M.shape != (A.dim, A.dim):
        return False
    if linalg.rank(M) != A.dim:
        return False
    defects = isomorphism_defects(M, A, B)
    if defects:
        logger.info("Map fails on %d basis pairs, first %s", len(defects), defects[0])
    return not defects


def involution_sigma(L: LieAlgebra):
    """
    The involution x_i <-> y_i, h_i -> -h_i of the Chevalley basis.

    Raises:
        ConsistencyError: if the map is not an automorphism of L
    """
    M = L.field.Zeros((L.dim, L.dim))
    for i, label in enumerate(L.basis):
        if label[0] == "h":
            M[i, i] = -L.field(1)
        elif label[0] in "xy":
            other = ("y" if label[0] == "x" else "x") + label[1:]
            M[L.index(other), i] = 1
        else:
            raise DomainError(f"sigma is defined on Chevalley labels only, got {label!r}")
    defects = isomorphism_defects(M, L, L)
    if defects:
        raise ConsistencyError(f"sigma is not an automorphism of {L.name}: fails on {defects[:3]}")
    return M


# ----------------------------------------------------------------------
# Fingerprints
# ----------------------------------------------------------------------
@dataclass
class Fingerprint:
    """Isomorphism invariants of a Lie algebra over GF(q)."""

    dimension: int
    derived_series: List[int]
    lower_central_series: List[int]
    center_dim: int
    killing_rank: int
    derivation_dim: int
    sandwich_count: Optional[int] = None
    nilpotency_indices: Optional[Dict[int, int]] = None

    def to_json(self) -> dict:
        data = asdict(self)
        if self.nilpotency_indices is not None:
            data["nilpotency_indices"] = {str(k): v for k, v in sorted(self.nilpotency_indices.items())}
        return data


def killing_form(L: LieAlgebra):
    n = L.dim
    ads = L.ad_matrices()
    K = L.field.Zeros((n, n))
    for i in range(n):
        for j in range(i, n):
            K[i, j] = K[j, i] = (ads[i] @ ads[j]).diagonal().sum()
    return K


def derivation_dim(L: LieAlgebra) -> int:
    """
    dim Der(L) from the linear conditions
    D[e_i, e_j] = [D e_i, e_j] + [e_i, D e_j] on the entries of D.
    """
    n = L.dim
    T = L.table
    # unknown D[a, b] at position a * n + b; D e_j = sum_a D[a, j] e_a
    rows = L.field.Zeros((n * n * n, n * n))
    r = 0
    for i in range(n):
        for j in range(n):
            for k in range(n):
                row = L.field.Zeros((n, n))
                # D[e_i, e_j]_k = sum_c T[i, j, c] D[k, c]
                row[k, :] += T[i, j, :]
                # [D e_i, e_j]_k = sum_a D[a, i] T[a, j, k]
                row[:, i] -= T[:, j, k]
                # [e_i, D e_j]_k = sum_b D[b, j] T[i, b, k]
                row[:, j] -= T[i, :, k]
                rows[r] = row.reshape(-1)
                r += 1
    return n * n - linalg.rank(rows)


def _enumerated_invariants(L: LieAlgebra, chunk: int = 4096):
    """Sandwich count and ad-nilpotency multiset over all nonzero vectors."""
    n, p = L.dim, L.p
    ads = np.stack([np.asarray(a, dtype=np.int64) for a in L.ad_matrices()]).reshape(n, n * n)
    total = p ** n
    sandwiches = 0
    indices: Dict[int, int] = {}
    for start in range(1, total, chunk):
        codes = np.arange(start, min(start + chunk, total), dtype=np.int64)
        digits = (codes[:, None] // (p ** np.arange(n, dtype=np.int64))[None, :]) % p
        ad = (digits @ ads).reshape(-1, n, n) % p
        square = np.matmul(ad, ad) % p
        sandwiches += int(np.sum(~np.any(square.reshape(len(codes), -1), axis=1)))
        power = ad.copy()
        found = np.zeros(len(codes), dtype=np.int64)
        for k in range(1, n + 1):
            zero = ~np.any(power.reshape(len(codes), -1), axis=1) & (found == 0)
            found[zero] = k
            power = np.matmul(power, ad) % p
        for k, count in zip(*np.unique(found, return_counts=True)):
            indices[int(k)] = indices.get(int(k), 0) + int(count)
    return sandwiches, indices


def fingerprint(L: LieAlgebra, limit: Optional[int] = None) -> Fingerprint:
    """
    Compute the isomorphism invariants of L.

    Vector-enumeration invariants (sandwich count, nilpotency indices with
    0 meaning "not nilpotent") are only computed over prime fields with
    q^n at most the enumeration limit.
    """
    limit = limit if limit is not None else Config.FINGERPRINT_ENUMERATION_LIMIT
    fp = Fingerprint(
        dimension=L.dim,
        derived_series=derived_series(L),
        lower_central_series=lower_central_series(L),
        center_dim=center(L).shape[0],
        killing_rank=linalg.rank(killing_form(L)),
        derivation_dim=derivation_dim(L),
    )
    if L.field.degree == 1 and L.field.order ** L.dim <= limit:
        fp.sandwich_count, fp.nilpotency_indices = _enumerated_invariants(L)
    logger.info("Fingerprint of %s: %s", L.name, fp)
    return fp
