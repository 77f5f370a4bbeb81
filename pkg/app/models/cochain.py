"""
Cochains of a Lie algebra with adjoint or trivial coefficients.

A q-cochain is a sum of terms  e_k (x) (g_i1* ^ ... ^ g_iq*)  with
i1 < ... < iq and integer coefficients mod p. Reordering a wedge
monomial multiplies by the sign of the permutation; a repeated index
kills the term. The evaluation convention is (a* ^ b*)(a, b) = 1.
"""

import itertools
import re
from typing import Dict, Iterable, Optional, Sequence, Tuple

import numpy as np

from app.exceptions import DomainError, GoldenDataError

ADJOINT = "adjoint"
TRIVIAL = "trivial"

Key = Tuple[int, Tuple[int, ...]]


def sort_with_sign(indices: Sequence[int]) -> Tuple[int, Tuple[int, ...]]:
    """
    Sort a wedge monomial.

    Returns:
        (sign, sorted indices); sign is 0 when an index repeats
    """
    idx = list(indices)
    if len(set(idx)) != len(idx):
        return 0, ()
    inversions = sum(1 for a, b in itertools.combinations(idx, 2) if a > b)
    return (-1) ** inversions, tuple(sorted(idx))


class Cochain:
    """Sparse q-cochain over the prime field GF(p)."""

    def __init__(self, basis: Sequence[str], p: int, q: int, module: str = ADJOINT,
                 terms: Optional[Dict[Key, int]] = None, name: Optional[str] = None):
        if module not in (ADJOINT, TRIVIAL):
            raise DomainError(f"unknown coefficient module {module!r}")
        self.basis = tuple(basis)
        self.p = p
        self.q = q
        self.module = module
        self.name = name
        self.terms: Dict[Key, int] = {}
        for (k, idx), c in (terms or {}).items():
            self.add_term(k, idx, c)

    # ------------------------------------------------------------------
    # Term bookkeeping
    # ------------------------------------------------------------------
    @property
    def n(self) -> int:
        return len(self.basis)

    @property
    def module_dim(self) -> int:
        return self.n if self.module == ADJOINT else 1

    def add_term(self, k: int, indices: Sequence[int], c: int):
        """Add c * e_k (x) wedge(indices), normalizing the wedge order."""
        if len(indices) != self.q:
            raise DomainError(f"wedge of length {len(indices)} in a {self.q}-cochain")
        sign, idx = sort_with_sign(indices)
        if sign == 0:
            return
        key = (0 if self.module == TRIVIAL else k, idx)
        value = (self.terms.get(key, 0) + sign * c) % self.p
        if value:
            self.terms[key] = value
        else:
            self.terms.pop(key, None)

    def _like(self, terms=None, q=None, module=None) -> "Cochain":
        return Cochain(self.basis, self.p, self.q if q is None else q,
                       self.module if module is None else module, terms)

    def copy(self) -> "Cochain":
        return self._like(dict(self.terms))

    @classmethod
    def zero(cls, basis, p: int, q: int, module: str = ADJOINT) -> "Cochain":
        return cls(basis, p, q, module)

    # ------------------------------------------------------------------
    # Vector-space operations
    # ------------------------------------------------------------------
    def _check(self, other: "Cochain"):
        if (self.basis, self.p, self.q, self.module) != (other.basis, other.p, other.q, other.module):
            raise DomainError("cochains live in different spaces")

    def __add__(self, other: "Cochain") -> "Cochain":
        self._check(other)
        result = self.copy()
        for (k, idx), c in other.terms.items():
            result.add_term(k, idx, c)
        return result

    def __neg__(self) -> "Cochain":
        return self.scale(-1)

    def __sub__(self, other: "Cochain") -> "Cochain":
        return self + (-other)

    def scale(self, c: int) -> "Cochain":
        return self._like({key: v * c for key, v in self.terms.items()})

    def __rmul__(self, c: int) -> "Cochain":
        return self.scale(c)

    def __eq__(self, other):
        if not isinstance(other, Cochain):
            return NotImplemented
        return (self.basis, self.p, self.q, self.module, self.terms) == \
            (other.basis, other.p, other.q, other.module, other.terms)

    def __hash__(self):
        return hash((self.basis, self.p, self.q, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    # ------------------------------------------------------------------
    # Evaluation and tensors
    # ------------------------------------------------------------------
    def evaluate(self, args: Sequence[int]) -> np.ndarray:
        """Value on basis vectors e_args as an integer vector mod p."""
        out = np.zeros(self.module_dim, dtype=np.int64)
        sign, idx = sort_with_sign(args)
        if sign == 0:
            return out
        for (k, key_idx), c in self.terms.items():
            if key_idx == idx:
                out[k] += sign * c
        return out % self.p

    def to_tensor(self) -> np.ndarray:
        """Alternating array T[a_1, ..., a_q, k] of values on basis tuples."""
        shape = (self.n,) * self.q + (self.module_dim,)
        T = np.zeros(shape, dtype=np.int64)
        for (k, idx), c in self.terms.items():
            for perm in itertools.permutations(range(self.q)):
                sign, _ = sort_with_sign(perm)
                T[tuple(idx[i] for i in perm) + (k,)] += sign * c
        return T % self.p

    @classmethod
    def from_tensor(cls, T: np.ndarray, basis, p: int, module: str = ADJOINT) -> "Cochain":
        """Read the strictly increasing entries of an alternating tensor."""
        q = T.ndim - 1
        result = cls(basis, p, q, module)
        T = np.asarray(T, dtype=np.int64) % p
        for position in zip(*np.nonzero(T)):
            idx = position[:-1]
            if all(a < b for a, b in zip(idx, idx[1:])):
                result.terms[(int(position[-1]), tuple(int(a) for a in idx))] = int(T[position])
        return result

    def to_vector(self) -> np.ndarray:
        """Coordinates in the basis e_k (x) wedge, wedges in lexicographic order."""
        position = {idx: r for r, idx in enumerate(itertools.combinations(range(self.n), self.q))}
        v = np.zeros(self.module_dim * len(position), dtype=np.int64)
        for (k, idx), c in self.terms.items():
            v[k * len(position) + position[idx]] = c
        return v

    @classmethod
    def from_vector(cls, v, basis, p: int, q: int, module: str = ADJOINT) -> "Cochain":
        wedges = list(itertools.combinations(range(len(basis)), q))
        result = cls(basis, p, q, module)
        v = np.asarray(v, dtype=np.int64) % p
        for r in np.flatnonzero(v):
            k, w = divmod(int(r), len(wedges))
            result.terms[(k, wedges[w])] = int(v[r])
        return result

    # ------------------------------------------------------------------
    # Gradings and automorphisms
    # ------------------------------------------------------------------
    def term_degrees(self, grading: Sequence[int]) -> set:
        """Degrees deg(e_k) - sum(deg g_i) of all terms."""
        degrees = set()
        for k, idx in self.terms:
            head = grading[k] if self.module == ADJOINT else 0
            degrees.add(head - sum(grading[i] for i in idx))
        return degrees

    def degree(self, grading: Sequence[int]) -> Optional[int]:
        """The common degree of all terms, None if inhomogeneous or zero."""
        degrees = self.term_degrees(grading)
        return degrees.pop() if len(degrees) == 1 else None

    def term_weights(self, weights: Sequence[Sequence[int]]) -> set:
        found = set()
        for k, idx in self.terms:
            w = np.array(weights[k] if self.module == ADJOINT else [0] * len(weights[0]))
            for i in idx:
                w = w - np.array(weights[i])
            found.add(tuple(int(a) for a in w))
        return found

    def transform(self, M: np.ndarray, M_inv: np.ndarray) -> "Cochain":
        """
        Push forward along an automorphism phi with matrix M (columns are
        images of basis vectors): (phi.c)(x, ...) = phi(c(phi^-1 x, ...)).
        """
        T = self.to_tensor()
        if self.module == ADJOINT:
            T = np.tensordot(T, M, axes=([self.q], [1])) % self.p
        for axis in range(self.q):
            # contract argument slot `axis` with M_inv, keeping the slot position
            T = np.moveaxis(np.tensordot(T, M_inv, axes=([axis], [0])), -1, axis) % self.p
        return Cochain.from_tensor(T, self.basis, self.p, self.module)

    def permute(self, perm: Sequence[int]) -> "Cochain":
        """Relabel basis vectors e_i -> e_perm[i] in both the value and the duals."""
        result = self._like()
        for (k, idx), c in self.terms.items():
            head = k if self.module == TRIVIAL else perm[k]
            result.add_term(head, [perm[i] for i in idx], c)
        return result

    # ------------------------------------------------------------------
    # Rendering and serialization
    # ------------------------------------------------------------------
    def sorted_terms(self) -> list:
        return sorted(self.terms.items())

    def pretty(self) -> str:
        """Render in the notation  2*x1 (x) (y3* ^ y4*)  using unicode symbols."""
        if not self.terms:
            return "0"
        parts = []
        for (k, idx), c in self.sorted_terms():
            wedge = "∧".join(f"{self.basis[i]}*" for i in idx)
            head = "" if self.module == TRIVIAL else f"{self.basis[k]}⊗"
            body = f"{head}({wedge})" if self.q else self.basis[k]
            parts.append(body if c == 1 else f"{c}{body}")
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "module": self.module,
            "terms": [[None if self.module == TRIVIAL else k, list(idx), c]
                      for (k, idx), c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, data: dict, basis, p: int) -> "Cochain":
        module = data.get("module", ADJOINT)
        result = cls(basis, p, data["q"], module)
        for k, idx, c in data["terms"]:
            result.add_term(0 if k is None else k, idx, c)
        return result

    def __repr__(self):
        label = f"{self.name}: " if self.name else ""
        return f"<Cochain {label}q={self.q} {self.pretty()}>"


# ----------------------------------------------------------------------
# Formula parsing
# ----------------------------------------------------------------------
_NOISE = re.compile(r"\\left|\\right|\\,|\\;|\\quad|\\\\|&|\{\}|\\otimes|\\wedge|\\wg|"
                    r"\^\s*\*|\^\s*\{\*\}|[⊗∧*^()\[\]]")
_SYMBOL = re.compile(r"([hxy])_?\{?(\d+)\}?")
_COEFF = re.compile(r"^\s*(\d+)")


def _split_terms(text: str) -> Iterable[Tuple[int, str]]:
    sign, start = 1, 0
    for m in re.finditer(r"[+-]", text):
        chunk = text[start:m.start()]
        if chunk.strip():
            yield sign, chunk
        sign = 1 if m.group() == "+" else -1
        start = m.end()
    chunk = text[start:]
    if chunk.strip():
        yield sign, chunk


def parse_cochain(text: str, basis: Sequence[str], p: int, module: str = ADJOINT,
                  q: Optional[int] = None, name: Optional[str] = None) -> Cochain:
    """
    Parse a written cochain into a Cochain.

    Accepts the interchangeable notations for dual vectors: "x_1^*", "dx_1",
    "x1*" and even a bare "y_4" inside a wedge. Terms are separated by + or -;
    each term is an optional integer coefficient, the coefficient vector
    (adjoint module only), then the wedge factors. "\\otimes", "⊗", "\\wedge",
    "∧", parentheses and LaTeX spacing are ignored. A leading "d" on a dual
    vector is dropped.

    Args:
        text: Formula text
        basis: Basis labels of the algebra (h1, x1, ... style)
        p: Characteristic; coefficients are reduced mod p
        module: "adjoint" or "trivial"
        q: Expected degree (inferred from the first term when omitted)

    Returns:
        The parsed Cochain
    """
    index = {label: i for i, label in enumerate(basis)}
    terms = []
    for sign, chunk in _split_terms(text):
        cleaned = _NOISE.sub(" ", chunk)
        coeff_match = _COEFF.match(cleaned)
        coeff = int(coeff_match.group(1)) if coeff_match else 1
        body = cleaned[coeff_match.end():] if coeff_match else cleaned
        symbols = [f"{letter}{number}" for letter, number in _SYMBOL.findall(body)]
        if not symbols:
            raise GoldenDataError(f"no basis symbols in term {chunk.strip()!r}")
        unknown = [s for s in symbols if s not in index]
        if unknown:
            raise GoldenDataError(f"unknown basis symbols {unknown} in term {chunk.strip()!r}")
        if module == ADJOINT:
            head, wedge = index[symbols[0]], [index[s] for s in symbols[1:]]
        else:
            head, wedge = 0, [index[s] for s in symbols]
        terms.append((sign * coeff, head, wedge))

    if not terms:
        raise GoldenDataError(f"empty cochain formula {text!r}")
    degree = len(terms[0][2]) if q is None else q
    result = Cochain(basis, p, degree, module, name=name)
    for c, head, wedge in terms:
        if len(wedge) != degree:
            raise GoldenDataError(f"term with {len(wedge)} dual factors in a {degree}-cochain: {text!r}")
        result.add_term(head, wedge, c)
    return result
