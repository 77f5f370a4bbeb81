"""
A (p+1)-dimensional algebra whose deformation is trivial although its
infinitesimal cocycle is not a coboundary.

Basis e_0, ..., e_{p-1}, f with [e_i, e_j] = 0 and [f, e_i] = e_{i+1 mod p},
graded by deg e_i = i, deg f = 1 (mod p). The deformation
[f, e_{p-1}]_a = (1 + a) e_0 is undone by the diagonal map
A_a f = r f, A_a e_i = r^i e_i with r^p = 1 + a, while
z = e_0 (x) psi ^ phi_{p-1} (psi = f*, phi_i = e_i*) stays nontrivial in H^2.
"""

import logging
from typing import List, Optional, Sequence

import numpy as np

from app.exceptions import DomainError, SingularMapError
from app.models import fields
from app.models.algebra import LieAlgebra
from app.models.cochain import Cochain, Key
from app.services import linalg, structure
from app.services.cohomology import CochainComplex

logger = logging.getLogger(__name__)


def cyc_basis(p: int) -> List[str]:
    return [f"e{i}" for i in range(p)] + ["f"]


def _check_p(p: int):
    if p < 2 or not all(p % d for d in range(2, int(p ** 0.5) + 1)):
        raise DomainError(f"{p} is not prime")


def _table(p: int, field, a=None):
    n = p + 1
    T = field.Zeros((n, n, n))
    for i in range(p):
        T[p, i, (i + 1) % p] = 1
        T[i, p, (i + 1) % p] = -field(1)
    if a is not None:
        value = field(1) + fields.coerce(field, a)
        T[p, p - 1, 0] = value
        T[p - 1, p, 0] = -value
    return T


def build_cyc(p: int, field=None) -> LieAlgebra:
    """
    The algebra with [f, e_i] = e_{i+1 mod p} over GF(p^k).

    Args:
        p: Characteristic
        field: FieldArray class of characteristic p; GF(p) when omitted
    """
    _check_p(p)
    field = field or fields.get_field(p)
    if field.characteristic != p:
        raise DomainError(f"{field.name} does not have characteristic {p}")
    grading = list(range(p)) + [1]
    return LieAlgebra(cyc_basis(p), _table(p, field), name=f"cyc(p={p})", grading=grading)


def deformed_bracket(a, p: int, field=None) -> LieAlgebra:
    """The same relations with [f, e_{p-1}]_a = (1 + a) e_0."""
    _check_p(p)
    field = field or (type(a) if hasattr(type(a), "characteristic") else fields.get_field(p))
    a = fields.coerce(field, a)
    grading = list(range(p)) + [1]
    return LieAlgebra(cyc_basis(p), _table(p, field, a),
                      name=f"cyc(p={p}, a={fields.to_json_value(a)})", grading=grading)


def build_Aa(a, p: int):
    """
    The diagonal map A_a: f -> r f, e_i -> r^i e_i with r = (1 + a)^(1/p).

    Raises:
        SingularMapError: if 1 + a = 0
    """
    field = type(a)
    c = field(1) + a
    if c == 0:
        raise SingularMapError("A_a is singular at 1 + a = 0")
    r = fields.pth_root(c)
    A = field.Zeros((p + 1, p + 1))
    for i in range(p):
        A[i, i] = r ** i
    A[p, p] = r
    return A


def verify_claim1(a, p: int) -> bool:
    """[A_a x, A_a y] = A_a [x, y]_a on all basis pairs."""
    field = type(a)
    deformed = deformed_bracket(a, p, field)
    base = build_cyc(p, field)
    return structure.verify_isomorphism(build_Aa(a, p), deformed, base)


def claim1_table(p: int, field) -> List[dict]:
    """Jacobi and Claim 1 for every a in the field; a = -1 is reported as excluded."""
    rows = []
    for a in field.elements:
        row = {"a": fields.to_json_value(a),
               "jacobi": not deformed_bracket(a, p, field).jacobi_violations()}
        if field(1) + a == 0:
            row.update(admissible=False, trivialized=None, note="1 + a = 0 makes A_a singular")
        else:
            r = fields.pth_root(field(1) + a)
            row.update(admissible=True, pth_root=fields.to_json_value(r),
                       trivialized=verify_claim1(a, p))
        rows.append(row)
    return rows


# ----------------------------------------------------------------------
# The nontrivial cocycle
# ----------------------------------------------------------------------
def printed_degree_zero(p: int) -> List[Key]:
    """e_i (x) phi_i, e_1 (x) psi, f (x) phi_1 and f (x) psi as (k, wedge) keys."""
    return [(i, (i,)) for i in range(p)] + [(1, (p,)), (p, (1,)), (p, (p,))]


def degree_zero_cochains(p: int, q: int = 1, complex_: Optional[CochainComplex] = None) -> List[Key]:
    """Basis keys of C^q(cyc; cyc) homogeneous of degree 0 mod p."""
    complex_ = complex_ or CochainComplex(build_cyc(p))
    grading = complex_.L.grading
    keys = []
    for k, wedge in complex_.basis(q):
        if (grading[k] - sum(grading[i] for i in wedge)) % p == 0:
            keys.append((k, wedge))
    return keys


def build_z(p: int) -> Cochain:
    """z = e_0 (x) psi ^ phi_{p-1}."""
    z = Cochain(cyc_basis(p), p, 2, name="z")
    z.add_term(0, [p, p - 1], 1)
    return z


def functional_L(p: int, complex_: CochainComplex) -> np.ndarray:
    """L(e_i (x) phi_j ^ psi) = 1 when i = j + 1 mod p, zero on every other basis 2-cochain."""
    L = np.zeros(complex_.dim(2), dtype=np.int64)
    for position, (k, wedge) in enumerate(complex_.basis(2)):
        if k < p and wedge[1] == p and k == (wedge[0] + 1) % p:
            L[position] = 1
    return L


def _unit(complex_: CochainComplex, key: Key) -> Cochain:
    c = complex_.zero(len(key[1]))
    c.add_term(key[0], key[1], 1)
    return c


def _key_str(basis: Sequence[str], key: Key) -> str:
    k, wedge = key
    return f"{basis[k]} (x) " + " ^ ".join(f"{basis[i]}*" for i in wedge)


def verify_claim2(p: int) -> dict:
    """
    Certify that z is a cocycle that is not a coboundary.

    The functional L vanishes on d of every degree-0 1-cochain and takes
    the value -1 on z; the same conclusion is reached by solving z = dC
    over the degree-0 part of C^1 and over all of C^1.
    """
    _check_p(p)
    complex_ = CochainComplex(build_cyc(p))
    basis = complex_.L.basis
    z = build_z(p)
    L = functional_L(p, complex_)

    keys = degree_zero_cochains(p, 1, complex_)
    printed = printed_degree_zero(p)
    generators = []
    for key in keys:
        image = complex_.differential(_unit(complex_, key))
        generators.append({
            "cochain": _key_str(basis, key),
            "image": image.pretty(),
            "vanishes": image.is_zero(),
            "L": int(L @ image.to_vector()) % p,
        })

    field = complex_.L.field
    columns = field.Zeros((complex_.dim(2), len(keys)))
    for j, key in enumerate(keys):
        columns[:, j] = field(complex_.differential(_unit(complex_, key)).to_vector() % p)
    target = field(z.to_vector() % p)
    graded_cert = linalg.solve_with_certificate(columns, target)
    _, full_cert = complex_.solve_coboundary(z)

    L_z = int(L @ z.to_vector()) % p
    z_degree = z.degree(complex_.L.grading) % p
    verified = (complex_.is_cocycle(z) and z_degree == 0 and sorted(keys) == sorted(printed)
                and all(g["L"] == 0 for g in generators) and L_z == p - 1
                and not graded_cert.feasible and not full_cert.feasible)
    logger.info("Claim 2 at p=%d: L(z) = %d, verified=%s", p, L_z, verified)
    return {
        "p": p,
        "z": z.pretty(),
        "z_closed": complex_.is_cocycle(z),
        "z_degree": z_degree,
        "degree_zero_dim": len(keys),
        "degree_zero_matches_printed": sorted(keys) == sorted(printed),
        "generators": generators,
        "L_z": L_z,
        "graded_certificate": graded_cert.to_json(),
        "full_certificate": full_cert.to_json(),
        "full_witness_checks": full_cert.check(complex_.matrix(1), target),
        "verified": verified,
    }


def juxtaposition_report(p: int, field=None) -> dict:
    """Claim 1 (the deformation is trivial) next to Claim 2 (its cocycle is not)."""
    field = field or fields.get_field(p)
    table = claim1_table(p, field)
    claim2 = verify_claim2(p)
    trivial = all(r["trivialized"] for r in table if r["admissible"])
    return {
        "field": fields.describe(field),
        "claim1": {"deformation_trivial": trivial, "table": table},
        "claim2": {"cocycle_nontrivial": claim2["verified"], "L_z": claim2["L_z"]},
        "both_hold": trivial and claim2["verified"],
    }

