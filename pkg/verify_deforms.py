#!/usr/bin/env python3
"""CLI tool for building the algebras and verifying the deformation statements."""

import argparse
import json
import logging
import os
import sys

from app.config import Config
from app.exceptions import DeformationError, DomainError
from app.models import fields
from app.models.cochain import ADJOINT, TRIVIAL
from app.services import builders, contact, counterexample, families, structure
from app.services.certificates import COCYCLES, STATEMENTS, StatementVerifier
from app.services.cohomology import CochainComplex
from app.services.golden import get_store
from app.services.massey import MaurerCartanIntegrator, massey, massey_square

EXIT_VERIFIED = 0
EXIT_REFUTED = 1
EXIT_ERROR = 2

ALGEBRAS = ["o5-p3", "o51-p2", "o5-p2-full", "cyc", "contact-L"]
FAMILIES = ["thm1", "thm3", "prop1", "prop2"]


def _field(args, p: int):
    """Field from --field (an order), defaulting per characteristic."""
    order = args.field or Config.default_field(p)
    K = fields.field_of_order(order)
    if K.characteristic != p:
        raise DomainError(f"GF({order}) does not have characteristic {p}")
    return K


def _algebra_key(p: int) -> str:
    if p not in builders.ALGEBRA_KEYS:
        raise DomainError(f"no base algebra for p = {p}")
    return builders.ALGEBRA_KEYS[p]


def _element(K, text):
    """Field element from its integer code (n * 1 over prime fields)."""
    value = int(text)
    return fields.coerce(K, value) if K.degree == 1 else fields.from_code(K, value)


def _emit(data: dict, out: str = None):
    text = json.dumps(data, sort_keys=True, indent=2)
    if out:
        parent = os.path.dirname(out)
        if parent:
            os.makedirs(parent, exist_ok=True)
        with open(out, 'w') as f:
            f.write(text + "\n")
        print(f"\n✅ Wrote {out}\n")
    else:
        print(text)


def _build_algebra(args):
    name = args.algebra
    if name == "o5-p3":
        return builders.build_o5_p3()
    if name == "o51-p2":
        return builders.build_o51_p2()
    if name == "o5-p2-full":
        return builders.build_o5_p2_full()
    if name == "cyc":
        p = args.p or 3
        K = _field(args, p)
        if args.a is None:
            return counterexample.build_cyc(p, K)
        return counterexample.deformed_bracket(_element(K, args.a), p, K)
    K = _field(args, 3)
    if args.eps is None:
        raise DomainError("contact-L needs --eps")
    return contact.build_L(_element(K, args.eps), _element(K, args.delta), _element(K, args.rho),
                           reading=args.reading, kk_variant=args.kk)


def cmd_build(args):
    """Write the structure constants of an algebra."""
    L = _build_algebra(args)
    _emit(L.to_json(), args.out)
    return EXIT_VERIFIED


def cmd_verify(args):
    """Verify a statement and write its certificate."""
    verifier = StatementVerifier(seed=args.seed)
    options = {"p": args.p, "field": args.field, "exhaustive": args.exhaustive}
    cert = verifier.verify(args.statement, **options)
    path = cert.write(args.out)
    mark = "✅" if cert.verified else "❌"
    print(f"\n{mark} {args.statement}: {cert.verdict}")
    print(f"   Operations: {', '.join(cert.operations)}")
    print(f"   Certificate: {path}\n")
    return EXIT_VERIFIED if cert.verified else EXIT_REFUTED


def cmd_h2(args):
    """Print dim H^q(L; M)."""
    p = args.p or 3
    L = builders.build_base(p)
    complex_ = CochainComplex(L, args.module)
    print(f"\n{L.name} over {L.field.name}, coefficients: {args.module}")
    for q in args.q:
        print(f"   dim Z^{q} = {complex_.z_dim(q)}, dim B^{q} = {complex_.b_dim(q)}, "
              f"dim H^{q} = {complex_.h_dim(q)}")
    print()
    return EXIT_VERIFIED


def cmd_massey(args):
    """Print [[a, b]] for two named golden cochains."""
    p = args.p or 3
    store = get_store()
    key = _algebra_key(p)
    a, b = store.cochain(key, args.a), store.cochain(key, args.b)
    result = massey_square(a) if args.a == args.b else massey(a, b)
    label = f"[[{args.a}, {args.a}]]/2" if args.a == args.b else f"[[{args.a}, {args.b}]]"
    if args.a == args.b and p == 2:
        label = f"{args.a}({args.a}(x, y), z) + cyclic"
    print(f"\n{label} = {result.pretty()}\n")
    return EXIT_VERIFIED


def cmd_mc_integrate(args):
    """Prolong golden cocycles to a multiparameter family."""
    p = args.p or 3
    store = get_store()
    key = _algebra_key(p)
    names = args.cocycles or COCYCLES[p]
    cocycles = [store.cochain(key, name) for name in names]
    integrator = MaurerCartanIntegrator(CochainComplex(builders.build_base(p)), args.max_degree)
    result = integrator.integrate(cocycles, names)
    for step in result.steps:
        mark = "✅" if step.resolved else "❌"
        print(f"   {mark} monomial {list(step.monomial)}")
    failure = result.failure
    if failure is not None:
        print(f"\n❌ Obstruction at {list(failure.monomial)} is not a coboundary\n")
    elif result.complete:
        print(f"\n✅ Integrated family satisfies Jacobi ({len(result.family.terms)} terms)\n")
    else:
        print("\n❌ All obstructions resolved but Jacobi fails beyond the degree bound\n")
    if args.out:
        _emit(result.to_json(), args.out)
    return EXIT_VERIFIED if result.complete else EXIT_REFUTED


def cmd_specialize(args):
    """Specialize a golden family at a parameter tuple."""
    F = families.FamilyRegistry().get(args.family)
    K = _field(args, F.p)
    L = F.specialize([_element(K, v) for v in args.t], K)
    jacobi = not L.jacobi_violations()
    print(f"\n{'✅' if jacobi else '❌'} {L.name}: Jacobi {'holds' if jacobi else 'fails'}"
          f", simple: {structure.is_simple(L)}\n")
    if args.out:
        _emit(L.to_json(), args.out)
    return EXIT_VERIFIED if jacobi else EXIT_REFUTED


def cmd_fingerprint(args):
    """Print the isomorphism invariants of an algebra."""
    L = _build_algebra(args)
    fp = structure.fingerprint(L)
    _emit({"algebra": L.name, "field": fields.describe(L.field), "fingerprint": fp.to_json()}, args.out)
    return EXIT_VERIFIED


def cmd_counterexample(args):
    """Claim 1 and Claim 2 for the (p+1)-dimensional algebra."""
    p = args.p or 3
    K = _field(args, p)
    bundle = {
        "juxtaposition": counterexample.juxtaposition_report(p, K),
        "claim2": counterexample.verify_claim2(p),
    }
    ok = bundle["juxtaposition"]["both_hold"]
    print(f"\n{'✅' if ok else '❌'} deformation trivial: "
          f"{bundle['juxtaposition']['claim1']['deformation_trivial']}, "
          f"cocycle nontrivial: {bundle['claim2']['verified']} (L(z) = {bundle['claim2']['L_z']})\n")
    if args.out:
        _emit(bundle, args.out)
    return EXIT_VERIFIED if ok else EXIT_REFUTED


def _add_algebra_arguments(parser):
    parser.add_argument("algebra", choices=ALGEBRAS, help="Algebra to build")
    parser.add_argument("--eps", help="epsilon for contact-L (integer code)")
    parser.add_argument("--delta", default="0", help="delta for contact-L")
    parser.add_argument("--rho", default="0", help="rho for contact-L")
    parser.add_argument("--reading", choices=contact.READINGS, default="add",
                        help="How the extra delta/rho terms combine with the contact values")
    parser.add_argument("--kk", action="store_true", help="Use H_alpha = t + xy")
    parser.add_argument("--a", help="Deformation parameter for cyc")


def build_parser():
    parser = argparse.ArgumentParser(description="Deformations of o(5) in characteristics 3 and 2")
    parser.add_argument("-v", "--verbose", action="store_true", help="Log progress at INFO")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, help="Characteristic")
    common.add_argument("--field", type=int, help="Field order (default GF(3) / GF(2))")
    common.add_argument("--out", help="Output file (certificate directory for verify)")
    common.add_argument("--seed", type=int, default=None, help="Seed for sampled suites")
    subparsers = parser.add_subparsers(dest="command", help="Commands")

    # Build command
    build_parser_ = subparsers.add_parser("build", parents=[common], help="Write an algebra table as JSON")
    _add_algebra_arguments(build_parser_)
    build_parser_.set_defaults(func=cmd_build)

    # Verify command
    verify_parser = subparsers.add_parser("verify", parents=[common], help="Verify a statement")
    verify_parser.add_argument("statement", choices=STATEMENTS, help="Statement id")
    verify_parser.add_argument("--exhaustive", action="store_true",
                               help="Sweep all parameter tuples instead of a sample")
    verify_parser.set_defaults(func=cmd_verify)

    # H2 command
    h2_parser = subparsers.add_parser("h2", parents=[common], help="Cohomology dimensions")
    h2_parser.add_argument("--module", choices=[ADJOINT, TRIVIAL], default=ADJOINT)
    h2_parser.add_argument("--q", type=int, nargs="+", default=[2], help="Degrees")
    h2_parser.set_defaults(func=cmd_h2)

    # Massey command
    massey_parser = subparsers.add_parser("massey", parents=[common], help="Massey bracket of golden cochains")
    massey_parser.add_argument("a", help="First cochain name")
    massey_parser.add_argument("b", help="Second cochain name")
    massey_parser.set_defaults(func=cmd_massey)

    # MC command
    mc_parser = subparsers.add_parser("mc-integrate", parents=[common], help="Maurer-Cartan integration")
    mc_parser.add_argument("--cocycles", nargs="+", help="Golden cocycle names")
    mc_parser.add_argument("--max-degree", type=int, default=None, help="Largest total degree")
    mc_parser.set_defaults(func=cmd_mc_integrate)

    # Specialize command
    spec_parser = subparsers.add_parser("specialize", parents=[common], help="Specialize a family")
    spec_parser.add_argument("family", choices=FAMILIES)
    spec_parser.add_argument("t", nargs="+", help="Parameter values (integer codes)")
    spec_parser.set_defaults(func=cmd_specialize)

    # Fingerprint command
    fp_parser = subparsers.add_parser("fingerprint", parents=[common], help="Isomorphism invariants")
    _add_algebra_arguments(fp_parser)
    fp_parser.set_defaults(func=cmd_fingerprint)

    # Counterexample command
    cx_parser = subparsers.add_parser("counterexample", parents=[common],
                                      help="Trivial deformation with a nontrivial cocycle")
    cx_parser.set_defaults(func=cmd_counterexample)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else Config.LOG_LEVEL)

    if args.command is None:
        parser.print_help()
        return EXIT_ERROR

    try:
        return args.func(args)
    except (DeformationError, OSError) as exc:
        print(f"\n❌ {exc}\n", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
