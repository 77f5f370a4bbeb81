"""
Lie algebras as structure-constant tables over a finite field.

The table is a FieldArray T of shape (n, n, n) with
[e_i, e_j] = sum_k T[i, j, k] e_k. It is stored in full (antisymmetric
and with zero diagonal), which makes brackets two matrix products.
"""

import json
from typing import Dict, List, Optional, Sequence

import numpy as np

from app.exceptions import DomainError, GoldenDataError
from app.models import fields


class LieAlgebra:
    """Finite-dimensional Lie algebra (or candidate) with optional grading and weights."""

    def __init__(self, basis: Sequence[str], table, name: Optional[str] = None,
                 grading: Optional[Sequence[int]] = None,
                 weights: Optional[Sequence[Sequence[int]]] = None):
        """
        Initialize from a full structure-constant table.

        Args:
            basis: Ordered basis labels
            table: FieldArray of shape (n, n, n)
            name: Optional display name
            grading: Optional integer degree per basis vector
            weights: Optional weight vector per basis vector
        """
        n = len(basis)
        if table.shape != (n, n, n):
            raise DomainError(f"table shape {table.shape} does not match {n} basis vectors")
        self.basis = list(basis)
        self.field = type(table)
        self.p = int(self.field.characteristic)
        self.table = table
        self.name = name
        self.grading = list(grading) if grading is not None else None
        self.weights = [list(w) for w in weights] if weights is not None else None
        self._index = {label: i for i, label in enumerate(self.basis)}

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------
    @classmethod
    def from_structure_constants(cls, basis: Sequence[str], sc: list, field,
                                 **kwargs) -> "LieAlgebra":
        """
        Build from a sparse list [[i, j, [[k, c], ...]], ...] given for i < j.

        Coefficients are integers (read as c * 1) or field-element JSON values.
        """
        n = len(basis)
        table = field.Zeros((n, n, n))
        for i, j, entries in sc:
            for k, c in entries:
                value = fields.from_json_value(field, c)
                table[i, j, k] += value
                table[j, i, k] -= value
        return cls(basis, table, **kwargs)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise DomainError(f"unknown basis vector {label!r}")

    def element(self, coords: Dict[str, int]):
        """Vector from a {label: coefficient} mapping."""
        v = self.field.Zeros(self.dim)
        for label, c in coords.items():
            v[self.index(label)] += fields.coerce(self.field, c)
        return v

    def unit(self, i: int):
        v = self.field.Zeros(self.dim)
        v[i] = 1
        return v

    # ------------------------------------------------------------------
    # Brackets
    # ------------------------------------------------------------------
    def bracket(self, u, v):
        """[u, v] for coordinate vectors u, v."""
        n = self.dim
        left = (u @ self.table.reshape(n, n * n)).reshape(n, n)
        return v @ left

    def bracket_basis(self, i: int, j: int):
        return self.table[i, j].copy()

    def ad(self, u):
        """Matrix of ad u acting on column vectors."""
        n = self.dim
        return (u @ self.table.reshape(n, n * n)).reshape(n, n).T

    def ad_basis(self, i: int):
        return self.table[i].T.copy()

    def ad_matrices(self) -> list:
        return [self.ad_basis(i) for i in range(self.dim)]

    def jacobi_tensor(self):
        """
        J[i, j, l, k]: coefficient of e_k in the cyclic sum
        [[e_i, e_j], e_l] + [[e_j, e_l], e_i] + [[e_l, e_i], e_j].
        """
        n = self.dim
        A = (self.table.reshape(n * n, n) @ self.table.reshape(n, n * n)).reshape(n, n, n, n)
        return A + A.transpose(2, 0, 1, 3) + A.transpose(1, 2, 0, 3)

    def jacobi_violations(self) -> list:
        """Basis triples i < j < l whose Jacobi sum is nonzero, with the residual vector."""
        J = self.jacobi_tensor()
        violations = []
        n = self.dim
        for i in range(n):
            for j in range(i + 1, n):
                for l in range(j + 1, n):
                    residual = J[i, j, l]
                    if np.any(residual != 0):
                        violations.append({
                            "triple": [self.basis[i], self.basis[j], self.basis[l]],
                            "residual": self.format_vector(residual),
                        })
        return violations

    def is_alternating(self) -> bool:
        T = self.table
        diagonal_zero = all(not np.any(T[i, i] != 0) for i in range(self.dim))
        return diagonal_zero and bool(np.all(T == -T.transpose(1, 0, 2)))

    # ------------------------------------------------------------------
    # Conversions
    # ------------------------------------------------------------------
    def over(self, field) -> "LieAlgebra":
        """Extension of scalars to a field of the same characteristic."""
        if field.characteristic != self.p:
            raise DomainError("cannot change the characteristic of an algebra")
        if field is self.field:
            return self
        if self.field.degree != 1:
            raise DomainError("only prime-field tables can be extended")
        table = fields.coerce_array(field, np.asarray(self.table, dtype=np.int64))
        return LieAlgebra(self.basis, table, name=self.name, grading=self.grading, weights=self.weights)

    def int_table(self) -> np.ndarray:
        """Structure constants as a plain integer array (prime fields only)."""
        if self.field.degree != 1:
            raise DomainError("integer tables exist only over prime fields")
        return np.asarray(self.table, dtype=np.int64)

    def structure_constants(self) -> list:
        """Sparse [[i, j, [[k, c], ...]], ...] list for i < j, zero entries omitted."""
        sc = []
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                entries = [[int(k), fields.to_json_value(self.table[i, j, k])]
                           for k in np.flatnonzero(self.table[i, j])]
                if entries:
                    sc.append([i, j, entries])
        return sc

    def format_vector(self, v) -> str:
        terms = []
        for k in np.flatnonzero(v):
            c = fields.to_json_value(v[k])
            terms.append(f"{self.basis[k]}" if c == 1 else f"{c}*{self.basis[k]}")
        return " + ".join(terms) or "0"

    def to_json(self) -> dict:
        data = {
            "p": self.p,
            "field": fields.describe(self.field),
            "basis": self.basis,
            "sc": self.structure_constants(),
        }
        if self.name:
            data["name"] = self.name
        if self.grading is not None:
            data["grading"] = self.grading
        if self.weights is not None:
            data["weights"] = self.weights
        return data

    @classmethod
    def from_json(cls, data: dict) -> "LieAlgebra":
        try:
            field = fields.from_descriptor(data.get("field", data["p"]))
            return cls.from_structure_constants(
                data["basis"], data["sc"], field,
                name=data.get("name"),
                grading=data.get("grading"),
                weights=data.get("weights"),
            )
        except KeyError as exc:
            raise GoldenDataError(f"algebra JSON is missing {exc}")

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2)

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return (self.basis == other.basis and self.field is other.field
                and bool(np.all(self.table == other.table)))

    def __repr__(self):
        label = self.name or "LieAlgebra"
        return f"<{label} dim={self.dim} over {self.field.name}>"


def basis_labels(count_h: int, count_x: int) -> List[str]:
    """Chevalley-style labels h1.., x1.., y1.. ."""
    return ([f"h{i + 1}" for i in range(count_h)]
            + [f"x{i + 1}" for i in range(count_x)]
            + [f"y{i + 1}" for i in range(count_x)])
