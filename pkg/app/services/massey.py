"""
Massey brackets and Maurer-Cartan integration.

For 2-cochains a, b:
    [[a, b]](x, y, z) = a(b(x, y), z) + b(a(x, y), z) + cyclic
and the square a(a(x, y), z) + cyclic, which is the only meaningful
self-bracket in characteristic 2 and equals [[a, a]] / 2 otherwise.
With the base bracket mu, [[mu, c]] = d c.
"""

import itertools
import logging
from dataclasses import dataclass, field as dataclass_field
from typing import Dict, List, Optional, Sequence

import numpy as np

from app.config import Config
from app.exceptions import DomainError, NotACocycleError
from app.models.cochain import ADJOINT, Cochain
from app.models.family import DeformationFamily, add_monomials, cyclic_compose
from app.models.polys import Monomial, graded_lex_key, monomial_str
from app.services.cohomology import CochainComplex
from app.services.linalg import LinearSystemCertificate

logger = logging.getLogger(__name__)


def _check_pair(a: Cochain, b: Cochain):
    for c in (a, b):
        if c.q != 2 or c.module != ADJOINT:
            raise DomainError(f"Massey brackets take adjoint 2-cochains, got q={c.q} ({c.module})")
    if a.basis != b.basis or a.p != b.p:
        raise DomainError("cochains over different algebras")


def massey(a: Cochain, b: Cochain) -> Cochain:
    """[[a, b]] as a 3-cochain."""
    _check_pair(a, b)
    A, B = a.to_tensor(), b.to_tensor()
    T = (cyclic_compose(A, B, a.p) + cyclic_compose(B, A, a.p)) % a.p
    return Cochain.from_tensor(T, a.basis, a.p)


def massey_square(a: Cochain) -> Cochain:
    """a(a(x, y), z) + cyclic."""
    _check_pair(a, a)
    A = a.to_tensor()
    return Cochain.from_tensor(cyclic_compose(A, A, a.p), a.basis, a.p)


def mc_obstruction(terms: Dict[Monomial, Cochain], monomial: Monomial, basis=None, p: Optional[int] = None) -> Cochain:
    """
    Coefficient of t^monomial in the Jacobi sum contributed by the
    non-base terms: the sum of J(c_m1, c_m2) over ordered pairs with
    m1 + m2 = monomial.
    """
    monomial = tuple(monomial)
    if not terms:
        if basis is None or p is None:
            raise DomainError("an empty family needs basis and p to produce a zero obstruction")
        return Cochain.zero(basis, p, 3)
    first = next(iter(terms.values()))
    basis, p = first.basis, first.p
    n = len(basis)
    total = np.zeros((n, n, n, n), dtype=np.int64)
    tensors = {m: c.to_tensor() for m, c in terms.items()}
    for (m1, A), (m2, B) in itertools.product(tensors.items(), repeat=2):
        if add_monomials(m1, m2) == monomial:
            total += cyclic_compose(A, B, p)
    return Cochain.from_tensor(total % p, basis, p)


@dataclass
class ObstructionStep:
    """One monomial of the integration."""

    monomial: Monomial
    obstruction: Cochain
    closed: bool
    resolved: bool
    term: Optional[Cochain] = None
    certificate: Optional[LinearSystemCertificate] = None

    def to_json(self) -> dict:
        return {
            "monomial": list(self.monomial),
            "obstruction": self.obstruction.to_json(),
            "closed": self.closed,
            "resolved": self.resolved,
            "term": None if self.term is None else self.term.to_json(),
            "certificate": None if self.certificate is None else self.certificate.to_json(),
        }


@dataclass
class IntegrationResult:
    """Outcome of a Maurer-Cartan integration."""

    family: DeformationFamily
    steps: List[ObstructionStep] = dataclass_field(default_factory=list)
    resolved: bool = True
    complete: bool = False

    @property
    def failure(self) -> Optional[ObstructionStep]:
        return next((s for s in self.steps if not s.resolved), None)

    def to_json(self) -> dict:
        return {
            "family": self.family.to_json(),
            "steps": [s.to_json() for s in self.steps],
            "resolved": self.resolved,
            "complete": self.complete,
        }


def monomials_of_degree(nvars: int, degree: int) -> List[Monomial]:
    """All exponent vectors of the given total degree in graded-lex order."""
    found = [m for m in itertools.product(range(degree + 1), repeat=nvars) if sum(m) == degree]
    return sorted(found, key=graded_lex_key)


class MaurerCartanIntegrator:
    """Prolongs infinitesimal deformations degree by degree."""

    def __init__(self, complex_: CochainComplex, max_degree: Optional[int] = None):
        """
        Initialize the integrator.

        Args:
            complex_: Adjoint cochain complex of the base algebra
            max_degree: Largest total degree to resolve
        """
        self.complex = complex_
        self.base = complex_.L
        self.max_degree = max_degree or Config.MC_MAX_DEGREE

    def integrate(self, cocycles: Sequence[Cochain], names: Optional[Sequence[str]] = None) -> IntegrationResult:
        """
        Solve d c_m = -obstruction_m for every monomial up to max_degree.

        Stops at the first obstruction that is not closed or not a coboundary. Free
        variables of every solve are zero, so the output is deterministic.
        """
        for c in cocycles:
            if not self.complex.is_cocycle(c):
                raise NotACocycleError(f"{c.name or 'input cochain'} is not closed")
        nvars = len(cocycles)
        names = list(names or [c.name or f"c{i + 1}" for i, c in enumerate(cocycles)])
        terms: Dict[Monomial, Cochain] = {}
        labels: Dict[Monomial, str] = {}
        for i, c in enumerate(cocycles):
            m = tuple(1 if j == i else 0 for j in range(nvars))
            terms[m] = c
            labels[m] = names[i]

        steps: List[ObstructionStep] = []
        resolved = True
        for degree in range(2, self.max_degree + 1):
            for m in monomials_of_degree(nvars, degree):
                obstruction = mc_obstruction(terms, m)
                if obstruction.is_zero():
                    continue
                step = self.resolve(m, obstruction)
                steps.append(step)
                if not step.resolved:
                    resolved = False
                    break
                if not step.term.is_zero():
                    terms[m] = step.term
                    labels[m] = f"mc_{'_'.join(str(e) for e in m)}"
                logger.info("Resolved monomial %s", monomial_str(m))
            if not resolved:
                break

        family = DeformationFamily(self.base, terms, [f"t{i + 1}" for i in range(nvars)],
                                   name="mc", labels=labels)
        complete = resolved and not family.jacobi_residual()
        return IntegrationResult(family, steps, resolved, complete)

    def resolve(self, monomial: Monomial, obstruction: Cochain) -> ObstructionStep:
        """
        Solve d c = -obstruction for one monomial.

        An obstruction that is not closed means the lower terms are
        inconsistent; the step is then unresolved and no solve is attempted.
        """
        if not self.complex.is_cocycle(obstruction):
            logger.warning("Obstruction at %s is not closed", monomial_str(monomial))
            return ObstructionStep(monomial, obstruction, False, False)
        solution, cert = self.complex.solve_coboundary(-obstruction)
        if solution is None:
            logger.info("Obstruction at %s is not a coboundary", monomial_str(monomial))
        return ObstructionStep(monomial, obstruction, True, solution is not None, solution, cert)
