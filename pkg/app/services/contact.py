"""
Contact realization of L(eps, delta, rho) inside k(3; N) with N = (1, 1, 1).

The ten generating functions are read as divided-power elements
(x^2 y means x^(2) y, t^2 means t^(2)), not rescaled by k!. This reading
gives [Eb, Ea] = Ea+b, [Ea, Ea+b] = E2a+b, [E-b, E-a] = E-a-b and
[E-a, E-a-b] = E-2a-b. Brackets are contact brackets,
decomposed in the span of the ten generators; six brackets carry the
extra delta- and rho-terms.
"""

import logging
from typing import Dict, List

import numpy as np

from app.exceptions import ConsistencyError, DomainError
from app.models import fields
from app.models.algebra import LieAlgebra
from app.models.divided_powers import DividedPowerElement, contact_bracket, get_space
from app.services import structure
from app.services.linalg import PreparedSolver

logger = logging.getLogger(__name__)

# Order matches the images of h1, h2, x1..x4, y1..y4
LABELS = ["Hb", "Ha", "Eb", "Ea", "Ea+b", "E2a+b", "E-b", "E-a", "E-a-b", "E-2a-b"]

DEGREES = {
    "E-2a-b": -2, "E-a": -1, "E-a-b": -1,
    "Ha": 0, "Hb": 0, "Eb": 0, "E-b": 0,
    "Ea": 1, "Ea+b": 1, "E2a+b": 2,
}

# Pairs carrying extra terms: (a, b, parameter, scalar, target)
OVERRIDES = [
    ("E-2a-b", "E-a-b", "delta", "1", "Eb"),
    ("E-2a-b", "E-a", "rho", "1", "E-b"),
    ("E-2a-b", "E-b", "delta", "-1", "Ea+b"),
    ("E-2a-b", "Eb", "rho", "1", "Ea"),
    ("E-a-b", "E-b", "delta", "-1/eps", "E2a+b"),
    ("E-a", "Eb", "rho", "-1/eps", "E2a+b"),
]

READINGS = ("add", "replace")


def _nonzero(field, eps):
    eps = fields.coerce(field, eps)
    if eps == 0:
        raise DomainError("epsilon must be nonzero")
    return eps


def contact_table(eps, kk_variant: bool = False) -> Dict[str, DividedPowerElement]:
    """
    The generating function of each basis vector.

    Args:
        eps: Nonzero field element
        kk_variant: Use H_alpha = t + xy instead of 2 eps t + xy
    """
    field = type(eps)
    S = get_space(field, (1, 1, 1))
    one = field(1)
    table = {
        "E-2a-b": S.monomial((0, 0, 0)),
        "E-a": S.monomial((1, 0, 0)),
        "E-a-b": S.monomial((0, 1, 0)),
        "Hb": S.monomial((1, 1, 0), -one),
        "Eb": S.monomial((2, 0, 0)),
        "E-b": S.monomial((0, 2, 0), -one),
        "Ea": S.monomial((1, 2, 0), -(one + eps)) + S.monomial((0, 1, 1), eps),
        "Ea+b": S.monomial((2, 1, 0), one + eps) + S.monomial((1, 0, 1), eps),
        "E2a+b": S.monomial((2, 2, 0), eps * (one + eps)) + S.monomial((0, 0, 2), eps * eps),
    }
    if kk_variant:
        table["Ha"] = S.monomial((0, 0, 1)) + S.monomial((1, 1, 0))
    else:
        table["Ha"] = S.monomial((0, 0, 1), field(2) * eps) + S.monomial((1, 1, 0))
    return {label: table[label] for label in LABELS}


class ContactRealization:
    """Brackets of the ten generating functions for one eps."""

    def __init__(self, eps, kk_variant: bool = False):
        self.field = type(eps)
        self.eps = _nonzero(self.field, eps)
        self.kk_variant = kk_variant
        self.table = contact_table(self.eps, kk_variant)
        self.space = next(iter(self.table.values())).space
        M = self.field.Zeros((self.space.dim, len(LABELS)))
        for j, label in enumerate(LABELS):
            M[:, j] = self.table[label].vector
        self.solver = PreparedSolver(M)

    def coordinates(self, f: DividedPowerElement):
        """Coordinates of f in the ten generators, None if outside their span."""
        return self.solver.solve(f.vector).solution

    def contact_values(self):
        """Structure tensor of the plain contact brackets."""
        n = len(LABELS)
        T = self.field.Zeros((n, n, n))
        for i in range(n):
            for j in range(i + 1, n):
                value = contact_bracket(self.table[LABELS[i]], self.table[LABELS[j]])
                coords = self.coordinates(value)
                if coords is None:
                    raise ConsistencyError(f"[{LABELS[i]}, {LABELS[j]}] leaves the span of the generators")
                T[i, j] = coords
                T[j, i] = -coords
        return T

    def override_values(self, delta, rho) -> Dict[tuple, object]:
        """The extra term of each overridden pair as a coordinate vector."""
        params = {"delta": fields.coerce(self.field, delta), "rho": fields.coerce(self.field, rho)}
        one = self.field(1)
        scalars = {"1": one, "-1": -one, "-1/eps": -(one / self.eps)}
        out = {}
        for a, b, name, scalar, target in OVERRIDES:
            v = self.field.Zeros(len(LABELS))
            v[LABELS.index(target)] = scalars[scalar] * params[name]
            out[(a, b)] = v
        return out

    def algebra(self, delta=0, rho=0, reading: str = "add") -> LieAlgebra:
        if reading not in READINGS:
            raise DomainError(f"unknown reading {reading!r}; expected one of {READINGS}")
        T = self.contact_values()
        for (a, b), v in self.override_values(delta, rho).items():
            i, j = LABELS.index(a), LABELS.index(b)
            # T[i, j] is a view into T; build the new value before writing either slot
            value = (T[i, j].copy() if reading == "add" else self.field.Zeros(len(LABELS))) + v
            T[i, j] = value
            T[j, i] = -value
        name = f"L(eps={fields.to_json_value(self.eps)})"
        grading = [DEGREES[label] for label in LABELS]
        return LieAlgebra(LABELS, T, name=name, grading=grading)


def build_L(eps, delta=0, rho=0, reading: str = "add", kk_variant: bool = False) -> LieAlgebra:
    """
    L(eps, delta, rho) in the basis Hb, Ha, Eb, Ea, Ea+b, E2a+b, E-b, E-a, E-a-b, E-2a-b.

    Raises:
        DomainError: if eps = 0
    """
    return ContactRealization(eps, kk_variant).algebra(delta, rho, reading)


def chevalley_relations_check(eps, kk_variant: bool = False) -> list:
    """
    The Chevalley relations of L(eps, 0, 0) for the Cartan matrix
    [[2, -1], [-2, 1 - eps]] with rows and columns ordered (beta, alpha).
    """
    field = type(eps)
    eps = _nonzero(field, eps)
    L = build_L(eps, kk_variant=kk_variant)
    one = field(1)
    relations = [
        ("Hb", "Eb", field(2), "Eb"),
        ("Hb", "Ea", -one, "Ea"),
        ("Ha", "Eb", -field(2), "Eb"),
        ("Ha", "Ea", one - eps, "Ea"),
        ("Ea", "E-a", one, "Ha"),
        ("Eb", "E-b", one, "Hb"),
    ]
    report = []
    for a, b, coeff, target in relations:
        computed = L.bracket(L.unit(L.index(a)), L.unit(L.index(b)))
        expected = coeff * L.unit(L.index(target))
        report.append({
            "relation": f"[{a}, {b}] = {fields.to_json_value(coeff)}*{target}",
            "computed": L.format_vector(computed),
            "holds": bool(np.all(computed == expected)),
        })
    return report


def degree_report(eps) -> List[dict]:
    """Lie degree (deg f - 2, deg x = deg y = 1, deg t = 2) of every generating function."""
    table = contact_table(_nonzero(type(eps), eps))
    rows = []
    for label, f in table.items():
        found = sorted(d - 2 for d in f.degrees())
        rows.append({"label": label, "expected": DEGREES[label], "found": found,
                     "homogeneous": found == [DEGREES[label]]})
    return rows


def croc1_readings(eps, delta, rho) -> dict:
    """
    Contact values at the six overridden pairs and the Jacobi verdict of
    the "add" and "replace" readings.
    """
    realization = ContactRealization(eps)
    T = realization.contact_values()
    contact = {}
    for a, b, *_ in OVERRIDES:
        i, j = LABELS.index(a), LABELS.index(b)
        contact[f"[{a}, {b}]"] = LieAlgebra(LABELS, T).format_vector(T[i, j])
    verdicts = {}
    for reading in READINGS:
        L = realization.algebra(delta, rho, reading)
        verdicts[reading] = not L.jacobi_violations()
    return {"contact_values": contact, "jacobi": verdicts,
            "readings_coincide": all(v == "0" for v in contact.values())}


def bracket_table(L: LieAlgebra) -> List[List[str]]:
    """Rows of [e_i, e_j] rendered in the basis of L."""
    rows = [[""] + list(L.basis)]
    for i in range(L.dim):
        rows.append([L.basis[i]] + [L.format_vector(L.table[i, j]) for j in range(L.dim)])
    return rows


def contact_jacobi_sample(field, count: int = 300, seed: int = 0) -> dict:
    """Antisymmetry and Jacobi of the contact bracket on random triples in k(3; (1,1,1))."""
    space = get_space(field, (1, 1, 1))
    rng = np.random.default_rng(seed)
    antisymmetry = jacobi = 0
    for _ in range(count):
        f, g, h = space.random(rng), space.random(rng), space.random(rng)
        if not (contact_bracket(f, g) + contact_bracket(g, f)).is_zero():
            antisymmetry += 1
        total = (contact_bracket(contact_bracket(f, g), h)
                 + contact_bracket(contact_bracket(g, h), f)
                 + contact_bracket(contact_bracket(h, f), g))
        if not total.is_zero():
            jacobi += 1
    return {"triples": count, "antisymmetry_failures": antisymmetry, "jacobi_failures": jacobi}


def parameter_sweep(field, count: int = 30, seed: int = 0, reading: str = "add") -> dict:
    """
    Alternation and Jacobi of L(eps, delta, rho) at seeded random
    (eps, delta, rho) with eps nonzero.
    """
    rng = np.random.default_rng(seed)
    rows = []
    for _ in range(count):
        eps = field(int(rng.integers(1, field.order)))
        delta, rho = (field(int(c)) for c in rng.integers(0, field.order, size=2))
        L = build_L(eps, delta, rho, reading=reading)
        violations = L.jacobi_violations()
        rows.append({
            "eps": fields.to_json_value(eps),
            "delta": fields.to_json_value(delta),
            "rho": fields.to_json_value(rho),
            "alternating": L.is_alternating(),
            "jacobi_violations": len(violations),
        })
    failures = [r for r in rows if not r["alternating"] or r["jacobi_violations"]]
    if failures:
        logger.warning("%d of %d sampled L(eps, delta, rho) fail alternation or Jacobi", len(failures), count)
    return {"points": count, "reading": reading, "rows": rows, "all_hold": not failures}


def leps_fingerprint_table(field, delta=0, rho=0, limit=None) -> List[dict]:
    """Fingerprint of L(eps, delta, rho) for every nonzero eps in the field."""
    rows = []
    for eps in field.elements[1:]:
        L = build_L(eps, delta, rho)
        fp = structure.fingerprint(L, limit)
        rows.append({"eps": fields.to_json_value(eps), "simple": structure.is_simple(L),
                     "fingerprint": fp.to_json()})
    distinct = {str(r["fingerprint"]) for r in rows}
    logger.info("%d distinct fingerprints among %d algebras L(eps)", len(distinct), len(rows))
    return rows
