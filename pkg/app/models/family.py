"""
Multiparameter deformation families.

A family is the base bracket plus finitely many 2-cochains c_m indexed
by parameter monomials m:

    [a, b]_t = [a, b] + sum_m t^m c_m(a, b)

The Jacobi sum of [.,.]_t is a polynomial in t whose coefficient at m is
sum over m1 + m2 = m of J(c_m1, c_m2), with c_0 the base bracket and
J(a, b)(x, y, z) = a(b(x, y), z) + cyclic.
"""

import itertools
import json
import logging
from typing import Dict, List, Optional, Sequence

import numpy as np

from app.exceptions import DomainError, ParameterMismatchError
from app.models import fields
from app.models.algebra import LieAlgebra
from app.models.cochain import ADJOINT, Cochain
from app.models.polys import Monomial, ParamPoly, graded_lex_key, monomial_str

logger = logging.getLogger(__name__)


def cyclic_compose(A: np.ndarray, B: np.ndarray, p: int) -> np.ndarray:
    """
    J(a, b) for 2-cochain tensors A, B of shape (n, n, n):
    J[x, y, z, k] = sum_l B[x, y, l] A[l, z, k] + cyclic in (x, y, z).
    """
    M = np.einsum('xyl,lzk->xyzk', B, A)
    return (M + M.transpose(2, 0, 1, 3) + M.transpose(1, 2, 0, 3)) % p


def add_monomials(m1: Monomial, m2: Monomial) -> Monomial:
    return tuple(a + b for a, b in zip(m1, m2))


class DeformationFamily:
    """Base algebra plus a map from parameter monomials to 2-cochains."""

    def __init__(self, base: LieAlgebra, terms: Dict[Monomial, Cochain],
                 params: Sequence[str], name: Optional[str] = None,
                 labels: Optional[Dict[Monomial, str]] = None):
        """
        Initialize the family.

        Args:
            base: Base algebra over a prime field
            terms: Nonzero parameter monomial -> adjoint 2-cochain
            params: Parameter names, one per monomial exponent
            name: Display name
            labels: Optional human-readable name of each term
        """
        if base.field.degree != 1:
            raise DomainError("families are defined over prime fields")
        self.base = base
        self.p = base.p
        self.params = list(params)
        self.nvars = len(self.params)
        self.name = name
        self.terms: Dict[Monomial, Cochain] = {}
        self.labels = dict(labels or {})
        for m, c in terms.items():
            m = tuple(m)
            if len(m) != self.nvars:
                raise ParameterMismatchError(f"monomial {m} does not match parameters {self.params}")
            if not any(m):
                raise DomainError("the constant term of a family is the base bracket")
            if c.q != 2 or c.module != ADJOINT or c.basis != tuple(base.basis):
                raise DomainError(f"term at {monomial_str(m)} is not an adjoint 2-cochain of {base.name}")
            if not c.is_zero():
                self.terms[m] = c

    @property
    def zero_monomial(self) -> Monomial:
        return (0,) * self.nvars

    def monomials(self) -> List[Monomial]:
        return sorted(self.terms, key=graded_lex_key)

    def term(self, m: Monomial) -> Cochain:
        return self.terms.get(tuple(m), Cochain.zero(self.base.basis, self.p, 2))

    def max_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=0)

    def tensors(self) -> Dict[Monomial, np.ndarray]:
        """Structure tensors keyed by monomial, the base bracket at the zero monomial."""
        out = {self.zero_monomial: self.base.int_table()}
        for m, c in self.terms.items():
            out[m] = c.to_tensor()
        return out

    # ------------------------------------------------------------------
    # Parametric structure constants
    # ------------------------------------------------------------------
    def bracket_polys(self, a: str, b: str) -> Dict[str, ParamPoly]:
        """Nonzero components of [a, b]_t as polynomials in the parameters."""
        i, j = self.base.index(a), self.base.index(b)
        components: Dict[int, Dict[Monomial, int]] = {}
        for m, T in self.tensors().items():
            for k in np.flatnonzero(T[i, j]):
                components.setdefault(int(k), {})[m] = int(T[i, j, k])
        result = {}
        for k, terms in sorted(components.items()):
            poly = ParamPoly(self.p, self.nvars, terms)
            if poly:
                result[self.base.basis[k]] = poly
        return result

    # ------------------------------------------------------------------
    # Jacobi identity
    # ------------------------------------------------------------------
    def jacobi_residual(self) -> Dict[Monomial, np.ndarray]:
        """Nonzero coefficients of the Jacobi sum, keyed by monomial."""
        tensors = self.tensors()
        residual: Dict[Monomial, np.ndarray] = {}
        for (m1, T1), (m2, T2) in itertools.product(tensors.items(), repeat=2):
            m = add_monomials(m1, m2)
            J = cyclic_compose(T1, T2, self.p)
            residual[m] = (residual.get(m, 0) + J) % self.p
        return {m: R for m, R in residual.items() if np.any(R)}

    def jacobi_report(self) -> list:
        """Basis triples with a nonzero residual polynomial, rendered per component."""
        residual = self.jacobi_residual()
        if not residual:
            return []
        n = self.base.dim
        report = []
        for i, j, l in itertools.combinations(range(n), 3):
            for k in range(n):
                terms = {m: int(R[i, j, l, k]) for m, R in residual.items() if R[i, j, l, k]}
                if terms:
                    poly = ParamPoly(self.p, self.nvars, terms)
                    report.append({
                        "triple": [self.base.basis[i], self.base.basis[j], self.base.basis[l]],
                        "component": self.base.basis[k],
                        "residual": repr(poly),
                    })
        logger.warning("Family %s violates Jacobi on %d components", self.name, len(report))
        return report

    def is_alternating(self) -> bool:
        return all(not np.any(T.diagonal(axis1=0, axis2=1)) for T in self.tensors().values())

    # ------------------------------------------------------------------
    # Specialization
    # ------------------------------------------------------------------
    def specialize(self, t: Sequence, field=None) -> LieAlgebra:
        """
        The concrete algebra at a parameter tuple.

        Args:
            t: Parameter values (ints, or elements of one field GF(p^k))
            field: Field to work over; inferred from t, else the prime field
        """
        t = list(t)
        if len(t) != self.nvars:
            raise ParameterMismatchError(f"{self.name} takes {self.nvars} parameters, got {len(t)}")
        if field is None:
            field = next((type(v) for v in t if hasattr(type(v), "characteristic")),
                         self.base.field)
        if field.characteristic != self.p:
            raise ParameterMismatchError(f"parameters over {field.name} for a family in characteristic {self.p}")
        values = [fields.coerce(field, v) for v in t]
        table = fields.coerce_array(field, self.base.int_table())
        for m, c in self.terms.items():
            scalar = ParamPoly.monomial(self.p, m).specialize(values)
            table = table + scalar * fields.coerce_array(field, c.to_tensor())
        label = f"{self.name}({', '.join(str(fields.to_json_value(v)) for v in values)})"
        return LieAlgebra(self.base.basis, table, name=label,
                          grading=self.base.grading, weights=self.base.weights)

    # ------------------------------------------------------------------
    # Serialization
    # ------------------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "name": self.name,
            "algebra": self.base.name,
            "p": self.p,
            "params": self.params,
            "terms": [{
                "monomial": list(m),
                "label": self.labels.get(m),
                "cochain": self.terms[m].to_json(),
            } for m in self.monomials()],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2)

    def __repr__(self):
        parts = [f"{monomial_str(m)}*{self.labels.get(m, '?')}" for m in self.monomials()]
        return f"<DeformationFamily {self.name}: [,] + {' + '.join(parts)}>"
