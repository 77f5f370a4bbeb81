"""
Truncated divided-power algebra in x, y, t.

The space O(3; N) has basis x^(i) y^(j) t^(k) with 0 <= i < p^N1,
0 <= j < p^N2, 0 <= k < p^N3, product w^(i) w^(j) = binom(i+j, i) w^(i+j)
per generator and derivatives d_w w^(i) = w^(i-1).
"""

import itertools
from functools import lru_cache
from typing import Dict, Sequence, Tuple

import numpy as np

from app.exceptions import DividedPowerOverflowError, DomainError
from app.models import fields

Exponent = Tuple[int, int, int]
GENERATORS = ("x", "y", "t")


class DividedPowerSpace:
    """Index bookkeeping and product tables for one (field, N)."""

    def __init__(self, field, N: Sequence[int]):
        self.field = field
        self.p = int(field.characteristic)
        self.N = tuple(int(n) for n in N)
        if len(self.N) != 3 or min(self.N) < 1:
            raise DomainError(f"shearing vector must be three positive integers, got {N}")
        self.bounds = tuple(self.p ** n for n in self.N)
        self.exponents = list(itertools.product(*(range(b) for b in self.bounds)))
        self.dim = len(self.exponents)
        self.position = {e: r for r, e in enumerate(self.exponents)}
        self._build_product()
        self._build_derivatives()
        # Delta acts diagonally: x d_x x^(i) = i x^(i)
        self.delta_diag = fields.coerce_array(field, [2 - i - j for i, j, _ in self.exponents])
        self.degrees = [i + j + 2 * k for i, j, k in self.exponents]

    def _build_product(self):
        left, right, target, coeff, overflow = [], [], [], [], []
        for a, ea in enumerate(self.exponents):
            for b, eb in enumerate(self.exponents):
                total = tuple(u + v for u, v in zip(ea, eb))
                c = 1
                for u, v in zip(ea, eb):
                    c = c * fields.lucas_binom(u + v, u, self.p) % self.p
                if c == 0:
                    continue
                if any(s >= bound for s, bound in zip(total, self.bounds)):
                    overflow.append((a, b))
                    continue
                left.append(a)
                right.append(b)
                target.append(self.position[total])
                coeff.append(c)
        self.left = np.array(left, dtype=np.int64)
        self.right = np.array(right, dtype=np.int64)
        self.coeff = fields.coerce_array(self.field, coeff)
        scatter = self.field.Zeros((len(target), self.dim))
        scatter[np.arange(len(target)), np.array(target, dtype=np.int64)] = 1
        self.scatter = scatter
        self.overflow = overflow

    def _build_derivatives(self):
        self.derivatives = {}
        for g, name in enumerate(GENERATORS):
            src, dst = [], []
            for r, e in enumerate(self.exponents):
                if e[g] > 0:
                    lowered = list(e)
                    lowered[g] -= 1
                    src.append(r)
                    dst.append(self.position[tuple(lowered)])
            self.derivatives[name] = (np.array(src, dtype=np.int64), np.array(dst, dtype=np.int64))

    def zero(self) -> "DividedPowerElement":
        return DividedPowerElement(self, self.field.Zeros(self.dim))

    def monomial(self, exponent: Exponent, coeff=1) -> "DividedPowerElement":
        """The element coeff * x^(i) y^(j) t^(k)."""
        exponent = tuple(exponent)
        if exponent not in self.position:
            raise DividedPowerOverflowError(f"exponent {exponent} exceeds bounds {self.bounds}")
        v = self.field.Zeros(self.dim)
        v[self.position[exponent]] = fields.coerce(self.field, coeff)
        return DividedPowerElement(self, v)

    def from_terms(self, terms: Dict[Exponent, object]) -> "DividedPowerElement":
        result = self.zero()
        for e, c in terms.items():
            result = result + self.monomial(e, c)
        return result

    def random(self, rng) -> "DividedPowerElement":
        codes = rng.integers(0, self.field.order, size=self.dim)
        return DividedPowerElement(self, self.field(codes))


@lru_cache(maxsize=None)
def get_space(field, N: Tuple[int, int, int] = (1, 1, 1)) -> DividedPowerSpace:
    return DividedPowerSpace(field, N)


class DividedPowerElement:
    """Element of O(3; N) over a finite field."""

    __slots__ = ("space", "vector")

    def __init__(self, space: DividedPowerSpace, vector):
        self.space = space
        self.vector = vector

    def _check(self, other: "DividedPowerElement"):
        if other.space is not self.space:
            raise DomainError("divided-power elements over different spaces")

    def __add__(self, other):
        self._check(other)
        return DividedPowerElement(self.space, self.vector + other.vector)

    def __sub__(self, other):
        self._check(other)
        return DividedPowerElement(self.space, self.vector - other.vector)

    def __neg__(self):
        return DividedPowerElement(self.space, -self.vector)

    def scale(self, c) -> "DividedPowerElement":
        return DividedPowerElement(self.space, self.vector * fields.coerce(self.space.field, c))

    def __mul__(self, other):
        if isinstance(other, DividedPowerElement):
            return dp_multiply(self, other)
        return self.scale(other)

    __rmul__ = scale

    def __eq__(self, other):
        if not isinstance(other, DividedPowerElement):
            return NotImplemented
        return other.space is self.space and bool(np.all(self.vector == other.vector))

    def is_zero(self) -> bool:
        return not np.any(self.vector != 0)

    def derivative(self, generator: str) -> "DividedPowerElement":
        src, dst = self.space.derivatives[generator]
        out = self.space.field.Zeros(self.space.dim)
        out[dst] = self.vector[src]
        return DividedPowerElement(self.space, out)

    def delta(self) -> "DividedPowerElement":
        """2f - x d_x f - y d_y f."""
        return DividedPowerElement(self.space, self.vector * self.space.delta_diag)

    def terms(self) -> Dict[Exponent, object]:
        return {self.space.exponents[r]: self.vector[r] for r in np.flatnonzero(self.vector)}

    def degrees(self) -> set:
        """Degrees of the monomials present, with deg x = deg y = 1, deg t = 2."""
        return {self.space.degrees[r] for r in np.flatnonzero(self.vector)}

    def to_json(self) -> dict:
        return {
            "N": list(self.space.N),
            "p": self.space.p,
            "coeffs": [[*e, fields.to_json_value(c)] for e, c in sorted(self.terms().items())],
        }

    def __repr__(self):
        parts = []
        for (i, j, k), c in sorted(self.terms().items()):
            mono = "".join(f"{g}^({e})" for g, e in zip(GENERATORS, (i, j, k)) if e) or "1"
            value = fields.to_json_value(c)
            parts.append(mono if value == 1 else f"{value}*{mono}")
        return " + ".join(parts) or "0"


def dp_multiply(f: DividedPowerElement, g: DividedPowerElement) -> DividedPowerElement:
    """
    Product in the divided-power algebra.

    Raises:
        DividedPowerOverflowError: if a nonzero coefficient lands outside the bounds
    """
    f._check(g)
    space = f.space
    for a, b in space.overflow:
        if f.vector[a] != 0 and g.vector[b] != 0:
            raise DividedPowerOverflowError(
                f"product of {space.exponents[a]} and {space.exponents[b]} exceeds bounds {space.bounds}")
    weighted = f.vector[space.left] * g.vector[space.right] * space.coeff
    return DividedPowerElement(space, weighted @ space.scatter)


def contact_bracket(f: DividedPowerElement, g: DividedPowerElement) -> DividedPowerElement:
    """
    [f, g] = Delta f * d_t g - d_t f * Delta g + d_x f * d_y g - d_y f * d_x g.
    """
    f._check(g)
    return (dp_multiply(f.delta(), g.derivative("t"))
            - dp_multiply(f.derivative("t"), g.delta())
            + dp_multiply(f.derivative("x"), g.derivative("y"))
            - dp_multiply(f.derivative("y"), g.derivative("x")))
