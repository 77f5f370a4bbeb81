"""
Verification certificates for the named statements.

Each statement id maps to a StatementVerifier method that runs the
operations behind it and returns a Certificate. Certificates carry no
timestamps and are written with sorted keys, so re-running a statement
on the same golden data reproduces the file byte for byte.
"""

import json
import logging
import os
import platform
from dataclasses import asdict, dataclass, field as dataclass_field
from typing import Dict, List, Optional

import galois
import numpy as np

import app
from app.config import Config
from app.exceptions import DomainError
from app.models import fields
from app.models.cochain import TRIVIAL, Cochain
from app.services import builders, contact, counterexample, families, structure
from app.services.cohomology import CochainComplex
from app.services.golden import GoldenStore, get_store
from app.services.massey import MaurerCartanIntegrator, massey, massey_square

logger = logging.getLogger(__name__)

VERIFIED = "verified"
REFUTED = "refuted"

COCYCLES = {
    3: ["c6", "c3", "c0", "c_m3", "c_m6"],
    2: ["c4", "c2", "c_m2", "c_m4"],
}
EXPECTED_H2 = {3: 5, 2: 4}

STATEMENTS = ["prop1", "prop2", "thm1", "thm3", "claim1", "claim2", "h2-p3", "h2-p2",
              "leps-fingerprint", "contact", "massey", "mc"]


@dataclass
class Certificate:
    """Outcome of verifying one statement."""

    statement: str
    verdict: str
    operations: List[str]
    evidence: dict
    metadata: dict = dataclass_field(default_factory=dict)
    input_checksums: Dict[str, str] = dataclass_field(default_factory=dict)

    @property
    def verified(self) -> bool:
        return self.verdict == VERIFIED

    def to_json(self) -> dict:
        return asdict(self)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2)

    def write(self, out_dir: Optional[str] = None) -> str:
        """Write <statement>.json into out_dir (default Config.CERTIFICATES_DIR)."""
        out_dir = out_dir or Config.CERTIFICATES_DIR
        os.makedirs(out_dir, exist_ok=True)
        path = os.path.join(out_dir, f"{self.statement}.json")
        with open(path, 'w') as f:
            f.write(self.dumps() + "\n")
        logger.info("Wrote certificate %s", path)
        return path


def toolchain_metadata(p: Optional[int] = None, field=None) -> dict:
    return {
        "package_version": app.__version__,
        "python": platform.python_version(),
        "numpy": np.__version__,
        "galois": galois.__version__,
        "p": p,
        "field": fields.describe(field) if field is not None else None,
    }


def _verdict(ok: bool) -> str:
    return VERIFIED if ok else REFUTED


class StatementVerifier:
    """Runs the verification suite behind each statement id."""

    def __init__(self, store: Optional[GoldenStore] = None, seed: Optional[int] = None,
                 sample_count: Optional[int] = None):
        """
        Initialize the verifier.

        Args:
            store: Golden data store (default: the process-wide store)
            seed: Seed for sampled parameter suites
            sample_count: Number of sampled parameter tuples
        """
        self.store = store or get_store()
        self.seed = Config.SAMPLE_SEED if seed is None else seed
        self.sample_count = sample_count or Config.SAMPLE_COUNT
        self.registry = families.FamilyRegistry(self.store)
        self.statements = {
            "h2-p3": lambda **kw: self.h2(3, **kw),
            "h2-p2": lambda **kw: self.h2(2, **kw),
            "massey": self.massey,
            "mc": self.mc,
            "thm1": self.thm1,
            "thm3": self.thm3,
            "prop1": self.prop1,
            "prop2": self.prop2,
            "contact": self.contact,
            "leps-fingerprint": self.leps_fingerprint,
            "claim1": self.claim1,
            "claim2": self.claim2,
        }

    def verify(self, statement: str, **options) -> Certificate:
        """
        Verify a statement.

        Raises:
            DomainError: for an unknown statement id or invalid options
        """
        if statement not in self.statements:
            raise DomainError(f"unknown statement {statement!r}; expected one of {sorted(self.statements)}")
        logger.info("Verifying %s", statement)
        ok, operations, evidence, p, field = self.statements[statement](**options)
        return Certificate(
            statement=statement,
            verdict=_verdict(ok),
            operations=operations,
            evidence=evidence,
            metadata=toolchain_metadata(p, field),
            input_checksums=self.store.checksums(),
        )

    # ------------------------------------------------------------------
    # Cohomology and brackets
    # ------------------------------------------------------------------
    def h2(self, p: int, **_):
        key = builders.ALGEBRA_KEYS[p]
        L = builders.build_base(p, self.store)
        complex_ = CochainComplex(L)
        cocycles = [self.store.cochain(key, name) for name in COCYCLES[p]]
        closed = {c.name: complex_.is_cocycle(c) for c in cocycles}
        dim = complex_.h_dim(2)
        rank = complex_.class_rank(cocycles) if all(closed.values()) else None
        evidence = {
            "dim": dim,
            "z_dim": complex_.z_dim(2),
            "b_dim": complex_.b_dim(2),
            "matrix_shapes": {"d1": list(complex_.matrix(1).shape), "d2": list(complex_.matrix(2).shape)},
            "cocycles_closed": closed,
            "class_rank": rank,
            "oracle_mismatches": [list(pair) for pair in builders.cross_check(p, self.store)],
        }
        ok = dim == EXPECTED_H2[p] and rank == EXPECTED_H2[p] and not evidence["oracle_mismatches"]
        operations = ["build_base", "cross_check", "h_dim", "is_cocycle", "class_rank"]
        return ok, operations, evidence, p, L.field

    def massey(self, **_):
        def get(name):
            return self.store.cochain("o5-p3", name)

        L = builders.build_o5_p3(self.store)
        complex_ = CochainComplex(L)
        product = massey(get("c0"), get("c6"))
        d_alpha = complex_.differential(get("alpha_0_6"))

        x1 = Cochain(L.basis, L.p, 0)
        x1.add_term(L.index("x1"), (), 1)
        trivial = CochainComplex(L, TRIVIAL)
        anchors = {"d_x1": complex_.differential(x1) == get("d_x1")}
        for label in ("y3", "y4"):
            phi = Cochain(L.basis, L.p, 1, TRIVIAL)
            phi.add_term(0, [L.index(label)], 1)
            anchors[f"d_{label}_star"] = trivial.differential(phi) == get(f"d_{label}_star")

        p2 = [massey_square(self.store.cochain("o51-p2", name)).is_zero() for name in COCYCLES[2]]
        evidence = {
            "massey_c0_c6": product.pretty(),
            "matches_printed": product == get("massey_c0_c6"),
            "equals_minus_d_alpha_0_6": product == -d_alpha,
            "d_alpha_0_6_matches_printed": d_alpha == get("d_alpha_0_6"),
            "massey_c_m3_c_m6_zero": massey(get("c_m3"), get("c_m6")).is_zero(),
            "square_c3_zero": massey_square(get("c3")).is_zero(),
            "squares_p2_zero": dict(zip(COCYCLES[2], p2)),
            "differential_anchors": anchors,
        }
        ok = all(v for k, v in evidence.items() if isinstance(v, bool)) and all(p2) and all(anchors.values())
        return ok, ["massey", "massey_square", "differential"], evidence, 3, L.field

    def mc(self, max_degree: Optional[int] = None, **_):
        L = builders.build_o5_p3(self.store)
        cocycles = [self.store.cochain("o5-p3", name) for name in COCYCLES[3]]
        result = MaurerCartanIntegrator(CochainComplex(L), max_degree).integrate(cocycles, COCYCLES[3])
        failure = result.failure
        evidence = {
            "resolved": result.resolved,
            "complete": result.complete,
            "steps": [{"monomial": list(s.monomial), "closed": s.closed, "resolved": s.resolved}
                      for s in result.steps],
            "failure": None if failure is None else failure.to_json(),
            "terms": len(result.family.terms),
        }
        return result.complete, ["mc_integrate", "mc_obstruction", "solve_coboundary"], evidence, 3, L.field

    # ------------------------------------------------------------------
    # Families
    # ------------------------------------------------------------------
    def _family_checks(self, F):
        complex_ = CochainComplex(F.base)
        residual = families.jacobi_residual_report(F)
        cocycles = families.check_cocycle_terms(F, complex_)
        try:
            degrees = families.check_degrees(F)
        except DomainError as exc:
            degrees = str(exc)
        evidence = {
            "jacobi_residual": residual,
            "alternating": F.is_alternating(),
            "linear_terms_closed": cocycles,
            "degree_problems": degrees,
            "terms": len(F.terms),
        }
        ok = not residual and F.is_alternating() and all(cocycles.values())
        return ok, evidence

    def thm1(self, exhaustive: bool = False, **_):
        F = families.family_thm1(self.registry)
        ok, evidence = self._family_checks(F)
        evidence["sigma"] = families.sigma_compatibility(self.store)
        sweep = families.simplicity_sweep(F, exhaustive=exhaustive, count=self.sample_count, seed=self.seed)
        evidence["simplicity"] = {k: sweep[k] for k in ("points", "all_jacobi", "non_simple")}
        ok = ok and sweep["all_jacobi"]
        operations = ["family_thm1", "jacobi_residual", "check_cocycle_terms", "check_degrees",
                      "sigma_compatibility", "simplicity_sweep"]
        return ok, operations, evidence, 3, F.base.field

    def thm3(self, **_):
        F = families.family_thm3(self.registry)
        ok, evidence = self._family_checks(F)
        return ok, ["family_thm3", "jacobi_residual", "check_cocycle_terms"], evidence, 2, F.base.field

    def prop1(self, field: Optional[int] = None, **_):
        F = families.family_prop1(self.registry)
        ok, evidence = self._family_checks(F)
        rows = []
        for order in ([field] if field else [3, 9]):
            K = fields.field_of_order(order)
            for eps in K.elements[1:]:
                rows.append(families.correspondence_check(F, [K(1) + eps], K))
        evidence["correspondence"] = rows
        evidence["c0_representatives"] = families.c0_representatives(self.store)
        ok = ok and all(r["isomorphism"] for r in rows)
        operations = ["family_prop1", "jacobi_residual", "prop_correspondence", "build_L", "verify_isomorphism",
                      "cohomologous"]
        return ok, operations, evidence, 3, fields.field_of_order(field or 9)

    def prop2(self, field: Optional[int] = None, **_):
        F = families.family_prop2(self.registry)
        ok, evidence = self._family_checks(F)
        K = fields.field_of_order(field or 9)
        if K.characteristic != 3:
            raise DomainError("the three-parameter family lives in characteristic 3")
        rng = np.random.default_rng(self.seed)
        rows = []
        while len(rows) < self.sample_count:
            t = [K(int(c)) for c in rng.integers(0, K.order, size=3)]
            if t[0] == K(2):
                continue
            rows.append(families.correspondence_check(F, t, K))
        evidence["cro2"] = families.cro2_report(F)
        evidence["correspondence"] = rows
        ok = ok and all(r["isomorphism"] for r in rows)
        operations = ["family_prop2", "jacobi_residual", "cro2_report", "parameter_map",
                      "prop_correspondence", "build_L", "verify_isomorphism"]
        return ok, operations, evidence, 3, K

    # ------------------------------------------------------------------
    # Contact realization
    # ------------------------------------------------------------------
    def contact(self, field: Optional[int] = None, **_):
        K = fields.field_of_order(field or 9)
        if K.characteristic != 3:
            raise DomainError("the contact realization is checked in characteristic 3")
        chevalley = {}
        for eps in K.elements[1:]:
            chevalley[str(fields.to_json_value(eps))] = contact.chevalley_relations_check(eps)
        L = contact.build_L(K(2))
        lowest = L.bracket(L.unit(L.index("E-a")), L.unit(L.index("E-a-b")))
        evidence = {
            "chevalley": chevalley,
            "degrees": contact.degree_report(K(2)),
            "grading": structure.check_grading(L),
            "lowest_bracket": L.format_vector(lowest),
            "jacobi_sample": contact.contact_jacobi_sample(fields.get_field(3), 300, self.seed),
            "readings": contact.croc1_readings(K(2), K(1), K(1)),
            "parameter_sweep": contact.parameter_sweep(K, 30, self.seed),
        }
        sample = evidence["jacobi_sample"]
        ok = (all(r["holds"] for rows in chevalley.values() for r in rows)
              and all(r["homogeneous"] for r in evidence["degrees"])
              and not evidence["grading"] and evidence["lowest_bracket"] == "E-2a-b"
              and sample["antisymmetry_failures"] == 0 and sample["jacobi_failures"] == 0
              and all(evidence["readings"]["jacobi"].values())
              and evidence["parameter_sweep"]["all_hold"])
        operations = ["contact_table", "build_L", "chevalley_relations_check", "degree_report",
                      "check_grading", "contact_jacobi_sample", "croc1_readings", "check_jacobi"]
        return ok, operations, evidence, 3, K

    def leps_fingerprint(self, field: Optional[int] = None, **_):
        K = fields.field_of_order(field or 9)
        rows = contact.leps_fingerprint_table(K)
        by_eps = {str(r["eps"]): r["fingerprint"] for r in rows}
        inverse_pairs, others = [], []
        elements = list(K.elements[1:])
        for i, a in enumerate(elements):
            for b in elements[i + 1:]:
                entry = {"eps": [fields.to_json_value(a), fields.to_json_value(b)],
                         "agree": by_eps[str(fields.to_json_value(a))] == by_eps[str(fields.to_json_value(b))]}
                (inverse_pairs if a * b == K(1) else others).append(entry)
        evidence = {"fingerprints": rows, "inverse_pairs": inverse_pairs, "other_pairs": others}
        ok = all(e["agree"] for e in inverse_pairs)
        return ok, ["build_L", "fingerprint", "is_simple"], evidence, 3, K

    # ------------------------------------------------------------------
    # Counterexample
    # ------------------------------------------------------------------
    def claim1(self, p: Optional[int] = None, field: Optional[int] = None, **_):
        if field:
            orders = [field]
        elif p:
            orders = {3: [3, 9], 2: [2, 4]}.get(p, [p])
        else:
            orders = [3, 9, 4]
        tables = {}
        for order in orders:
            K = fields.field_of_order(order)
            tables[str(order)] = counterexample.claim1_table(int(K.characteristic), K)
        ok = all(r["jacobi"] and (r["trivialized"] or not r["admissible"])
                 for rows in tables.values() for r in rows)
        K = fields.field_of_order(orders[0])
        operations = ["build_cyc", "deformed_bracket", "build_Aa", "verify_claim1"]
        return ok, operations, {"tables": tables}, int(K.characteristic), K

    def claim2(self, p: Optional[int] = None, **_):
        p = p or 3
        evidence = counterexample.verify_claim2(p)
        operations = ["build_cyc", "degree_zero_cochains", "build_z", "functional_L",
                      "differential", "solve_coboundary"]
        return evidence["verified"], operations, evidence, p, fields.get_field(p)
