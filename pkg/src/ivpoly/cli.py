"""Command-line front end.

Every library operation is reachable as a subcommand; results print as
human-readable text or as a canonical JSON envelope

    {"error": null, "op": "<subcommand>", "result": ...}

with rationals as lowest-terms strings.  Exit status: 0 on success, 1 on a
domain error (the envelope carries a machine-readable error code), 2 on
usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import verify
from .cone import ConeSpec, cone_member, idf_family_check, tpoly
from .errors import DuplicatePointsError, IvpolyError, SpecKindError
from .intpoly import (
    FiniteSite,
    IVPoly,
    Z_SITE,
    divisors,
    factorizations,
    find_irreducible_divisor,
    from_binomial_basis,
    is_irreducible,
    is_member,
    length_profile,
    to_binomial_basis,
    vanishing_nonatomic_witness,
)
from .monoid_ring import from_json_dict, mul as ring_mul, power, pth_root, to_json_dict
from .puiseux import (
    DyadicValuation,
    ExplicitMonoid,
    GramsMonoid,
    PrimeReciprocal,
    accp_chain_check,
    atoms_up_to,
    factorizations as monoid_factorizations,
    grams_decompose,
    length_set,
    membership,
)
from .rationals import format_rational, parse_rational


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _parse_coeff_list(text: str) -> list[Fraction]:
    return [parse_rational(part) for part in text.split(",")]


def _parse_site(text: str):
    if text.strip() in ("Z", "z"):
        return Z_SITE
    points = []
    for part in text.split(","):
        cleaned = part.strip().replace("−", "-")
        try:
            points.append(int(cleaned))
        except ValueError as exc:
            raise DuplicatePointsError(f"bad site point {part!r}") from exc
    return FiniteSite(tuple(points))


def _parse_poly(args) -> IVPoly:
    site = _parse_site(args.site)
    coeffs = _parse_coeff_list(args.poly)
    if getattr(args, "binomial", False):
        return from_binomial_basis(coeffs, site)
    return IVPoly(tuple(coeffs), site)


def _parse_spec(args):
    kind = args.spec
    if kind == "grams":
        return GramsMonoid()
    if kind == "dyadic":
        return DyadicValuation()
    if kind == "prime-reciprocal":
        return PrimeReciprocal(truncation=args.truncation)
    if kind == "explicit":
        if not args.gens:
            raise SpecKindError("explicit monoids need --gens")
        return ExplicitMonoid(tuple(_parse_coeff_list(args.gens)))
    raise SpecKindError(f"unknown monoid kind {kind!r}")


def _poly_json(f: IVPoly) -> list[str]:
    return [format_rational(c) for c in f.coeffs]


def _certificate_json(cert) -> dict | None:
    if cert is None:
        return None
    return {str(i): m for i, m in cert.combo}


# ---------------------------------------------------------------------------
# handlers: each returns (json_result, text_lines)


def _cmd_monoid_member(args):
    spec = _parse_spec(args)
    res = membership(spec, parse_rational(args.q))
    result = {
        "member": res.is_member,
        "exact": res.exact,
        "certificate": _certificate_json(res.certificate),
    }
    if res.is_member:
        text = [f"member: combination {_certificate_json(res.certificate)}"]
    else:
        scope = "" if res.exact else " (within truncation)"
        text = [f"not a member{scope}"]
    return result, text


def _cmd_monoid_atoms(args):
    spec = _parse_spec(args)
    atoms = atoms_up_to(spec, args.denom_bound)
    return {"atoms": [format_rational(a) for a in atoms]}, [
        "atoms: " + ", ".join(format_rational(a) for a in atoms)
    ]


def _cmd_monoid_factor(args):
    spec = _parse_spec(args)
    b = parse_rational(args.b)
    facs = monoid_factorizations(spec, b, args.length_cap)
    profile = length_set(spec, b, args.length_cap)
    result = {
        "factorizations": [[format_rational(p) for p in z.parts] for z in facs],
        "lengths": sorted(profile.lengths),
        "elasticity": None if profile.elasticity is None else format_rational(profile.elasticity),
        "elasticity_is_lower_bound": profile.is_lower_bound,
        "provably_infinite": profile.infinite,
    }
    text = [f"{len(facs)} factorization(s), lengths {sorted(profile.lengths)}"]
    text += [f"  {z}" for z in facs]
    if profile.elasticity is not None:
        bound = " (lower bound)" if profile.is_lower_bound else ""
        text.append(f"elasticity: {format_rational(profile.elasticity)}{bound}")
    return result, text


def _cmd_grams_decompose(args):
    dec = grams_decompose(parse_rational(args.q))
    if dec is None:
        return {"member": False, "nu": None, "coefficients": None}, ["not a member"]
    coeffs = {str(i): c for i, c in dec.coeffs}
    return (
        {"member": True, "nu": format_rational(dec.nu), "coefficients": coeffs},
        [f"nu = {format_rational(dec.nu)}, residue coefficients {coeffs}"],
    )


def _cmd_accp_chain(args):
    steps = accp_chain_check(GramsMonoid(), args.n_max)
    all_ok = all(s.ascending and s.strict for s in steps)
    result = {
        "steps": [
            {
                "n": s.step,
                "ascending": s.ascending,
                "strict": s.strict,
                "certificate": _certificate_json(s.certificate),
            }
            for s in steps
        ],
        "all_ascending_strict": all_ok,
    }
    text = [
        f"n={s.step}: ascending={s.ascending} strict={s.strict} "
        f"certificate={_certificate_json(s.certificate)}"
        for s in steps
    ] + [f"chain strictly ascending through n={args.n_max}: {all_ok}"]
    return result, text


def _cmd_ring_mul(args):
    a = from_json_dict(json.loads(args.a))
    b = from_json_dict(json.loads(args.b))
    prod = ring_mul(a, b)
    return {"product": to_json_dict(prod)}, [f"product: {prod}"]


def _cmd_ring_root(args):
    f = from_json_dict(json.loads(args.f))
    root = pth_root(f, cone_closed=not args.not_cone_closed)
    if root is None:
        return {"root": None, "verified": False}, ["no root (exponent monoid not closed)"]
    ok = power(root, f.ring.p) == f
    return {"root": to_json_dict(root), "verified": ok}, [f"root: {root} (verified: {ok})"]


def _cmd_ivp_member(args):
    f = _parse_poly(args)
    return {"member": is_member(f)}, [f"member of Int({f.site}, Z): {is_member(f)}"]


def _cmd_ivp_basis(args):
    f = _parse_poly(args)
    deltas = to_binomial_basis(f).deltas
    result = {
        "coeffs": _poly_json(f),
        "deltas": [format_rational(d) for d in deltas],
        "member": is_member(f),
    }
    return result, [
        f"power coefficients: {', '.join(_poly_json(f)) or '0'}",
        f"binomial coordinates: {', '.join(format_rational(d) for d in deltas)}",
    ]


def _cmd_ivp_divisors(args):
    f = _parse_poly(args)
    dl = divisors(f)
    result = {"divisors": [_poly_json(d) for d in dl.divisors], "count": len(dl.divisors)}
    return result, [f"{len(dl.divisors)} divisor classes:"] + [f"  {d}" for d in dl.divisors]


def _cmd_ivp_factor(args):
    f = _parse_poly(args)
    facs = factorizations(f)
    profile = length_profile(f)
    result = {
        "factorizations": [[_poly_json(p) for p in z.parts] for z in facs],
        "lengths": sorted(profile.lengths),
        "elasticity": format_rational(profile.elasticity),
        "hfd_violation": profile.hfd_violation,
    }
    text = [f"{len(facs)} factorization(s), lengths {sorted(profile.lengths)}, "
            f"elasticity {format_rational(profile.elasticity)}"]
    text += [f"  {z}" for z in facs]
    return result, text


def _cmd_ivp_irreducible(args):
    f = _parse_poly(args)
    return {"irreducible": is_irreducible(f)}, [f"irreducible: {is_irreducible(f)}"]


def _cmd_ivp_furstenberg(args):
    f = _parse_poly(args)
    d = find_irreducible_divisor(f)
    return {"divisor": _poly_json(d)}, [f"irreducible divisor: {d}"]


def _cmd_ivp_nonatomic(args):
    f = _parse_poly(args)
    w = vanishing_nonatomic_witness(f)
    result = {
        "point": w.point,
        "vanishing_points": list(w.vanishing_points),
        "half": _poly_json(w.half),
        "splits_for_all_integers": w.splits_for_all_integers,
        "complete_proof": w.complete_proof,
    }
    text = [
        f"vanishing point s = {w.point}; split f = 2 * ({w.half})",
        f"splits for every integer: {w.splits_for_all_integers}; "
        f"complete singleton-site proof: {w.complete_proof}",
    ]
    return result, text


def _cmd_cone_member(args):
    spec = ConeSpec(args.truncation)
    target = tpoly(_parse_coeff_list(args.target))
    exclude = set(args.exclude.split(",")) if args.exclude else set()
    cert = cone_member(target, spec, exclude=exclude)
    result = {
        "member": cert is not None,
        "certificate": None
        if cert is None
        else {label: format_rational(w) for label, w in cert.weights},
        "verified_up_to": spec.truncation,
    }
    if cert is None:
        text = [f"not in the cone within truncation N={spec.truncation}"]
    else:
        text = [f"certificate: {cert}"]
    return result, text


def _cmd_cone_idf(args):
    spec = ConeSpec(args.truncation)
    report = idf_family_check(args.index, spec)
    result = {
        "index": report.index,
        "identity_one": report.identity_one,
        "identity_t": report.identity_t,
        "mass": format_rational(report.mass),
        "only_trivial_common_divisor": report.only_trivial_common_divisor,
        "distinct_from_other_indices": report.distinct_from_other_indices,
        "all_ok": report.all_ok,
        "verified_up_to": report.truncation,
    }
    text = [
        f"1 = t^{report.index + 1} + a_{report.index}: {report.identity_one}",
        f"t = t^{report.index + 1} + b_{report.index}: {report.identity_t}",
        f"common divisor mass: {format_rational(report.mass)}",
        f"pairwise distinct from other indices: {report.distinct_from_other_indices}",
        f"all checks (up to N={report.truncation}): {report.all_ok}",
    ]
    return result, text


def _cmd_verify_paper(args):
    ids = args.facts.split(",") if args.facts else None
    report = verify.run_facts(ids)
    result = {
        "facts": [
            {
                "id": r.fact_id,
                "claim": r.claim,
                "passed": r.passed,
                "elapsed_seconds": round(r.elapsed, 3),
                "detail": r.detail,
            }
            for r in report.results
        ],
        "all_passed": report.all_passed,
    }
    text = [
        f"{'PASS' if r.passed else 'FAIL'}  {r.fact_id:22s} {r.elapsed:7.2f}s  {r.claim}"
        for r in report.results
    ] + [f"overall: {'PASS' if report.all_passed else 'FAIL'}"]
    return result, text, 0 if report.all_passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ivpoly",
        description="Exact factorization toolkit for integer-valued polynomials, "
        "Puiseux monoids, monoid rings, and rational cones.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument("--format", choices=("text", "json"), default="text")
        return p

    def add_spec_args(p, truncation_default=16):
        p.add_argument("--spec", required=True,
                       choices=("grams", "dyadic", "prime-reciprocal", "explicit"))
        p.add_argument("--gens", help="comma-separated generators for explicit monoids")
        p.add_argument("--truncation", type=int, default=truncation_default)

    def add_poly_args(p):
        p.add_argument("--poly", required=True,
                       help="comma-separated rational coefficients, lowest degree first")
        p.add_argument("--binomial", action="store_true",
                       help="interpret the list as binomial-basis coordinates")
        p.add_argument("--site", default="Z",
                       help='"Z" (default) or a comma-separated list of integers')

    p = add("monoid-member", _cmd_monoid_member, "membership with certificate")
    add_spec_args(p)
    p.add_argument("--q", required=True)

    p = add("monoid-atoms", _cmd_monoid_atoms, "atoms within a denominator bound")
    add_spec_args(p)
    p.add_argument("--denom-bound", type=int, required=True, dest="denom_bound")

    p = add("monoid-factor", _cmd_monoid_factor, "factorizations into atoms")
    add_spec_args(p)
    p.add_argument("--b", required=True)
    p.add_argument("--length-cap", type=int, default=10, dest="length_cap")

    p = add("grams-decompose", _cmd_grams_decompose, "dyadic-plus-residues decomposition")
    p.add_argument("--q", required=True)

    p = add("accp-chain", _cmd_accp_chain, "strictly ascending ideal chain witness")
    p.add_argument("--n-max", type=int, default=10, dest="n_max")

    p = add("ring-mul", _cmd_ring_mul, "monoid-ring product")
    p.add_argument("--a", required=True, help='element JSON {"ring": ..., "terms": ...}')
    p.add_argument("--b", required=True)

    p = add("ring-root", _cmd_ring_root, "p-th root over a prime field")
    p.add_argument("--f", required=True, help="element JSON over a prime field")
    p.add_argument("--not-cone-closed", action="store_true", dest="not_cone_closed")

    for name, func, help_text in (
        ("ivp-member", _cmd_ivp_member, "integer-valuedness"),
        ("ivp-basis", _cmd_ivp_basis, "binomial-basis coordinates"),
        ("ivp-divisors", _cmd_ivp_divisors, "all divisors up to associates"),
        ("ivp-factor", _cmd_ivp_factor, "all factorizations into irreducibles"),
        ("ivp-irreducible", _cmd_ivp_irreducible, "irreducibility"),
        ("ivp-furstenberg", _cmd_ivp_furstenberg, "an irreducible divisor"),
        ("ivp-nonatomic", _cmd_ivp_nonatomic, "vanishing non-atomicity witness"),
    ):
        p = add(name, func, help_text)
        add_poly_args(p)

    p = add("cone-member", _cmd_cone_member, "rational-cone membership certificate")
    p.add_argument("--target", required=True,
                   help="comma-separated coefficients in t, lowest degree first")
    p.add_argument("--truncation", type=int, default=6)
    p.add_argument("--exclude", default="", help="comma-separated generator labels")

    p = add("cone-idf", _cmd_cone_idf, "irreducible-family verification at one index")
    p.add_argument("--index", type=int, required=True)
    p.add_argument("--truncation", type=int, default=8)

    p = add("verify-paper", _cmd_verify_paper, "replay the built-in golden fact suite")
    p.add_argument("--facts", default="", help="comma-separated fact ids (default: all)")

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    op = args.command
    try:
        out = args.func(args)
    except (IvpolyError, json.JSONDecodeError, KeyError, TypeError) as exc:
        code = getattr(exc, "code", "malformed-input")
        if args.format == "json":
            print(_dump({"op": op, "result": None,
                         "error": {"code": code, "message": str(exc)}}))
        else:
            print(f"error[{code}]: {exc}", file=sys.stderr)
        return 1
    if len(out) == 3:
        result, text, status = out
    else:
        result, text = out
        status = 0
    if args.format == "json":
        print(_dump({"op": op, "result": result, "error": None}))
    else:
        for line in text:
            print(line)
    return status


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
