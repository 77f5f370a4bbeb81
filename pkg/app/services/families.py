"""
The four frozen deformation families and their verification reports.

Families reference golden cochains by name; a FamilyRegistry turns the
golden family tables into DeformationFamily objects.
"""

import itertools
import logging
import re
from typing import Dict, List, Optional, Sequence

import numpy as np

from app.config import Config
from app.exceptions import DomainError, GoldenDataError
from app.models import fields
from app.models.algebra import LieAlgebra
from app.models.cochain import Cochain
from app.models.family import DeformationFamily
from app.models.polys import ParamPoly
from app.services import structure
from app.services.cohomology import CochainComplex
from app.services.contact import build_L
from app.services.golden import GoldenStore, get_store

logger = logging.getLogger(__name__)


class FamilyRegistry:
    """Builds DeformationFamily objects from the golden family tables."""

    def __init__(self, store: Optional[GoldenStore] = None):
        self.store = store or get_store()
        self._cache: Dict[str, DeformationFamily] = {}

    def get(self, name: str) -> DeformationFamily:
        if name not in self._cache:
            spec = self.store.family_spec(name)
            algebra_key = spec["algebra"]
            base = self.store.algebra(algebra_key)
            terms, labels = {}, {}
            for exponent, combination in spec["terms"]:
                m = tuple(exponent)
                if m in terms:
                    raise GoldenDataError(f"{name}: monomial {m} listed twice")
                total = Cochain.zero(base.basis, base.p, 2)
                for coeff, ref in combination:
                    total = total + self.store.cochain(algebra_key, ref).scale(coeff)
                terms[m] = total
                labels[m] = " + ".join(ref if coeff == 1 else f"{coeff}*{ref}" for coeff, ref in combination)
            self._cache[name] = DeformationFamily(base, terms, spec["params"], name=name, labels=labels)
            logger.info("Loaded family %s with %d terms", name, len(terms))
        return self._cache[name]


def family_thm1(registry: Optional[FamilyRegistry] = None) -> DeformationFamily:
    """Five-parameter family of o(5) over GF(3)."""
    return (registry or FamilyRegistry()).get("thm1")


def family_thm3(registry: Optional[FamilyRegistry] = None) -> DeformationFamily:
    """Four-parameter family of o^(1)(5) over GF(2)."""
    return (registry or FamilyRegistry()).get("thm3")


def family_prop1(registry: Optional[FamilyRegistry] = None) -> DeformationFamily:
    """[,] - s c0' + s^2 alpha0 with s = 1 + eps."""
    return (registry or FamilyRegistry()).get("prop1")


def family_prop2(registry: Optional[FamilyRegistry] = None) -> DeformationFamily:
    """Three-parameter family in (t1, t3, t4) realizing L(eps, delta, rho)."""
    return (registry or FamilyRegistry()).get("prop2")


def specialize(F: DeformationFamily, t: Sequence, field=None) -> LieAlgebra:
    return F.specialize(t, field)


# ----------------------------------------------------------------------
# Reports
# ----------------------------------------------------------------------
def jacobi_residual_report(F: DeformationFamily) -> list:
    return F.jacobi_report()


def check_cocycle_terms(F: DeformationFamily, complex_: Optional[CochainComplex] = None) -> Dict[str, bool]:
    """Closedness of every linear term."""
    complex_ = complex_ or CochainComplex(F.base)
    return {F.labels.get(m, str(m)): complex_.is_cocycle(F.terms[m])
            for m in F.monomials() if sum(m) == 1}


def parameter_degrees(F: DeformationFamily) -> List[int]:
    """
    Z-degree carried by each parameter: minus the degree of its linear term.
    """
    if F.base.grading is None:
        raise DomainError(f"{F.base.name} carries no grading")
    degrees = []
    for i in range(F.nvars):
        m = tuple(1 if j == i else 0 for j in range(F.nvars))
        if m not in F.terms:
            raise DomainError(f"{F.name}: parameter {F.params[i]} has no linear term")
        d = F.terms[m].degree(F.base.grading)
        if d is None:
            raise DomainError(f"{F.name}: linear term of {F.params[i]} is not homogeneous")
        degrees.append(d)
    return degrees


def check_degrees(F: DeformationFamily) -> list:
    """
    Terms that are not homogeneous of the degree their monomial implies.

    Returns:
        List of {monomial, label, expected, found}; empty when homogeneous
    """
    degrees = parameter_degrees(F)
    problems = []
    for m in F.monomials():
        expected = sum(e * d for e, d in zip(m, degrees))
        found = sorted(F.terms[m].term_degrees(F.base.grading))
        if found != [expected]:
            problems.append({"monomial": list(m), "label": F.labels.get(m),
                             "expected": expected, "found": found})
    return problems


def cochain_index_degree(name: str) -> Optional[int]:
    """Degree encoded in a cochain name: c_m6 -> -6, alpha_0_6 -> 6, beta_m6_0_6 -> 0."""
    tokens = re.findall(r"_(m?\d+)", name)
    if not tokens:
        return None
    return sum(-int(t[1:]) if t.startswith("m") else int(t) for t in tokens)


def sigma_compatibility(store: Optional[GoldenStore] = None) -> Dict[str, dict]:
    """
    Push c6, c3 and the alpha cochains of the five-parameter family
    through the involution sigma and compare with their partners.
    """
    store = store or get_store()
    L = store.algebra("o5-p3")
    M = np.asarray(structure.involution_sigma(L), dtype=np.int64)
    pairs = [
        ("c6", "c_m6", 1), ("c3", "c_m3", 2),
        ("alpha_0_6", "alpha_0_m6", 1), ("alpha_0_3", "alpha_0_m3", 2),
    ]
    report = {}
    for source, target, scalar in pairs:
        image = store.cochain("o5-p3", source).transform(M, M)
        expected = store.cochain("o5-p3", target).scale(scalar)
        matches = image == expected
        if not matches:
            logger.warning("sigma(%s) differs from %d*%s", source, scalar, target)
        report[source] = {
            "target": target,
            "scalar": scalar,
            "matches": matches,
            "image": image.pretty(),
        }
    return report


def c0_representatives(store: Optional[GoldenStore] = None) -> dict:
    """Whether the degree-0 cocycle of the five-parameter family and that of the one-parameter family agree in H^2."""
    store = store or get_store()
    complex_ = CochainComplex(store.algebra("o5-p3"))
    c0, c0_prime = store.cochain("o5-p3", "c0"), store.cochain("o5-p3", "c0_prime")
    closed = {"c0": complex_.is_cocycle(c0), "c0_prime": complex_.is_cocycle(c0_prime)}
    report = {"closed": closed, "cohomologous": None, "cohomologous_to_negative": None}
    if all(closed.values()):
        report["cohomologous"] = complex_.cohomologous(c0, c0_prime)
        report["cohomologous_to_negative"] = complex_.cohomologous(c0, -c0_prime)
    logger.info("c0 against c0_prime: %s", report)
    return report


# ----------------------------------------------------------------------
# The three-parameter family and the contact realization
# ----------------------------------------------------------------------
def parameter_map(p: int = 3) -> Dict[str, ParamPoly]:
    """eps = 2 - t1, rho = eps(eps+2) t3, delta = eps(eps+2)(2+2eps+eps^2) t4 in GF(3)[t1, t3, t4]."""
    t1, t3, t4 = ParamPoly.variables(p, 3)
    eps = 2 - t1
    return {
        "eps": eps,
        "rho": eps * (eps + 2) * t3,
        "delta": eps * (eps + 2) * (2 + 2 * eps + eps * eps) * t4,
    }


PRINTED_CRO2 = [
    # (a, b, component, printed coefficient as {monomial in (t1, t3, t4): coeff})
    ("y2", "x1", "x4", {(1, 1, 0): 1, (0, 1, 0): -1}),
    ("y2", "x2", "x3", {(0, 0, 0): 2, (1, 0, 0): -1}),
    ("y4", "y3", "x1", {(4, 0, 1): 1, (0, 0, 1): 1}),
]


def cro2_report(F: Optional[DeformationFamily] = None) -> list:
    """
    The three displayed brackets of the three-parameter family against the
    values computed from its table.
    """
    F = F or family_prop2()
    report = []
    for a, b, component, printed_terms in PRINTED_CRO2:
        printed = ParamPoly(F.p, F.nvars, printed_terms)
        computed = F.bracket_polys(a, b)
        matches = set(computed) == {component} and computed[component] == printed
        if not matches:
            logger.warning("[%s, %s]_t computes to %s, displayed %r %s", a, b,
                           {k: repr(v) for k, v in computed.items()}, printed, component)
        report.append({
            "bracket": [a, b],
            "printed": {component: repr(printed)},
            "computed": {k: repr(v) for k, v in computed.items()},
            "matches": matches,
        })
    return report


def prop_correspondence(eps):
    """
    Matrix from the Chevalley basis of the deformed o(5) to the E-basis of
    L(eps, delta, rho): h1 -> H_beta, h2 -> H_alpha - (2 - eps) H_beta,
    x_i, y_i -> the root vectors in matching order.
    """
    field = type(eps)
    M = field.Identity(10)
    M[0, 1] = -(field(2) - eps)
    return M


def correspondence_check(F: DeformationFamily, t: Sequence, field) -> dict:
    """
    Specialize the family at t and test the correspondence onto the
    contact realization at the mapped parameters.
    """
    values = [fields.coerce(field, v) for v in t]
    if F.name == "prop1":
        (s,) = values
        eps = s - field(1)
        delta = rho = field(0)
    elif F.name == "prop2":
        pm = parameter_map(F.p)
        eps = pm["eps"].specialize(values)
        rho = pm["rho"].specialize(values)
        delta = pm["delta"].specialize(values)
    else:
        raise DomainError(f"no contact correspondence for family {F.name}")
    if eps == 0:
        raise DomainError("epsilon must be nonzero")
    deformed = F.specialize(values, field)
    L = build_L(eps, delta, rho)
    M = prop_correspondence(eps)
    defects = structure.isomorphism_defects(M, deformed, L)
    return {
        "t": [fields.to_json_value(v) for v in values],
        "eps": fields.to_json_value(eps),
        "delta": fields.to_json_value(delta),
        "rho": fields.to_json_value(rho),
        "isomorphism": structure.verify_isomorphism(M, deformed, L),
        "defects": [list(d) for d in defects],
    }


def simplicity_sweep(F: DeformationFamily, field=None, exhaustive: bool = False,
                     count: Optional[int] = None, seed: Optional[int] = None) -> dict:
    """
    Specialize F at every parameter tuple over the prime field, or at a
    seeded sample over `field`, and record Jacobi and simplicity.
    """
    field = field or F.base.field
    if exhaustive:
        tuples = list(itertools.product(range(int(field.order)), repeat=F.nvars))
    else:
        rng = np.random.default_rng(Config.SAMPLE_SEED if seed is None else seed)
        count = count or Config.SAMPLE_COUNT
        tuples = [tuple(int(v) for v in rng.integers(0, field.order, size=F.nvars)) for _ in range(count)]
    rows = []
    for codes in tuples:
        values = [field(c) for c in codes]
        L = F.specialize(values, field)
        rows.append({
            "t": [fields.to_json_value(v) for v in values],
            "jacobi": not L.jacobi_violations(),
            "simple": structure.is_simple(L),
        })
    non_simple = [r["t"] for r in rows if not r["simple"]]
    if non_simple:
        logger.info("%s: %d of %d specializations are not simple", F.name, len(non_simple), len(rows))
    return {"family": F.name, "points": len(rows), "rows": rows,
            "all_jacobi": all(r["jacobi"] for r in rows), "non_simple": non_simple}
