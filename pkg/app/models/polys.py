"""
Sparse multivariate polynomials over GF(p) in the deformation parameters.

A ParamPoly maps exponent vectors (t_1^e_1 ... t_n^e_n) to nonzero
integer coefficients reduced mod p. Zero coefficients are never stored.
"""

from typing import Dict, Iterable, Optional, Tuple

from app.exceptions import ParameterMismatchError
from app.models.fields import coerce

Monomial = Tuple[int, ...]


def monomial_degree(m: Monomial) -> int:
    return sum(m)


def monomial_str(m: Monomial) -> str:
    """Render t1^2*t4 style; the empty monomial renders as 1."""
    parts = []
    for i, e in enumerate(m):
        if e == 1:
            parts.append(f"t{i + 1}")
        elif e > 1:
            parts.append(f"t{i + 1}^{e}")
    return "*".join(parts) or "1"


def graded_lex_key(m: Monomial) -> tuple:
    """Sort key: total degree first, then t1 < t2 < ... lexicographically."""
    return (sum(m), tuple(-e for e in m))


class ParamPoly:
    """Polynomial in n parameters with coefficients in the prime field GF(p)."""

    __slots__ = ("p", "nvars", "terms")

    def __init__(self, p: int, nvars: int, terms: Optional[Dict[Monomial, int]] = None):
        self.p = p
        self.nvars = nvars
        self.terms: Dict[Monomial, int] = {}
        for m, c in (terms or {}).items():
            if len(m) != nvars:
                raise ParameterMismatchError(f"monomial {m} has {len(m)} exponents, expected {nvars}")
            c %= p
            if c:
                self.terms[tuple(m)] = c

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------
    @classmethod
    def zero(cls, p: int, nvars: int) -> "ParamPoly":
        return cls(p, nvars)

    @classmethod
    def constant(cls, p: int, nvars: int, c: int) -> "ParamPoly":
        return cls(p, nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, p: int, nvars: int, i: int) -> "ParamPoly":
        """The parameter t_{i+1} (0-based index i)."""
        m = [0] * nvars
        m[i] = 1
        return cls(p, nvars, {tuple(m): 1})

    @classmethod
    def monomial(cls, p: int, m: Monomial, c: int = 1) -> "ParamPoly":
        return cls(p, len(m), {tuple(m): c})

    @classmethod
    def variables(cls, p: int, nvars: int) -> list:
        return [cls.variable(p, nvars, i) for i in range(nvars)]

    # ------------------------------------------------------------------
    # Ring operations
    # ------------------------------------------------------------------
    def _coerce(self, other) -> "ParamPoly":
        if isinstance(other, ParamPoly):
            if other.p != self.p or other.nvars != self.nvars:
                raise ParameterMismatchError("polynomials over different rings")
            return other
        return ParamPoly.constant(self.p, self.nvars, int(other))

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, 0) + c
        return ParamPoly(self.p, self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return ParamPoly(self.p, self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        terms: Dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                terms[m] = terms.get(m, 0) + c1 * c2
        return ParamPoly(self.p, self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = ParamPoly.constant(self.p, self.nvars, 1)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, ParamPoly):
            return self.p == other.p and self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, int):
            return self == ParamPoly.constant(self.p, self.nvars, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # ------------------------------------------------------------------
    # Queries
    # ------------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, m: Monomial) -> int:
        return self.terms.get(tuple(m), 0)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def constant_term(self) -> int:
        return self.coefficient((0,) * self.nvars)

    def monomials(self) -> list:
        return sorted(self.terms, key=graded_lex_key)

    def specialize(self, t: Iterable):
        """
        Evaluate at a parameter tuple.

        Args:
            t: Field elements (galois scalars over GF(p^k)) or ints

        Returns:
            Field element when t holds field elements, else int mod p
        """
        t = list(t)
        if len(t) != self.nvars:
            raise ParameterMismatchError(f"expected {self.nvars} parameters, got {len(t)}")
        field = next((type(v) for v in t if hasattr(type(v), "characteristic")), None)
        if field is None:
            total = 0
            for m, c in self.terms.items():
                term = c
                for v, e in zip(t, m):
                    term = term * pow(int(v), e, self.p)
                total += term
            return total % self.p
        values = [coerce(field, v) for v in t]
        total = field(0)
        for m, c in self.terms.items():
            term = coerce(field, c)
            for v, e in zip(values, m):
                if e:
                    term = term * v ** e
            total = total + term
        return total

    # ------------------------------------------------------------------
    # Serialization
    # ------------------------------------------------------------------
    def to_json(self) -> list:
        return [[list(m), c] for m, c in sorted(self.terms.items(), key=lambda mc: graded_lex_key(mc[0]))]

    @classmethod
    def from_json(cls, p: int, nvars: int, data: list) -> "ParamPoly":
        return cls(p, nvars, {tuple(m): int(c) for m, c in data})

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in self.monomials():
            c = self.terms[m]
            mono = monomial_str(m)
            if mono == "1":
                parts.append(str(c))
            else:
                parts.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(parts)
