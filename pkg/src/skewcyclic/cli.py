"""Command-line frontend.

Commands: factor, automorphisms, build, distance, bounds, equivalence,
verify-paper.  Machine output is JSON (default); --format table renders
aligned text.  Exit codes: 0 success, 1 golden/expected mismatch,
2 violated precondition, 3 parse error, 4 mathematical obstruction.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import verify
from .automorphisms import enumerate_automorphisms
from .builder import MinimalCodeRecipe, build_minimal_code, orthogonal_sum
from .convolutional import ConvCode, strong_equivalence
from .distance import free_distance, griesmer_bound, singleton_bound
from .errors import (
    BadParameters,
    EnumerationCapExceeded,
    LengthNotCoprime,
    ParseError,
    SearchSpaceTooLarge,
    SkewCyclicError,
    StateCapExceeded,
)
from .literals import (
    field_to_str,
    matrix_from_dict,
    matrix_to_dict,
    parse_field,
    parse_ring_element,
    parse_sigma,
    parse_skew,
)
from .ring import RingContext

EXIT_MISMATCH = 1
EXIT_PRECONDITION = 2
EXIT_PARSE = 3
EXIT_MATH = 4

_PRECONDITION_ERRORS = (
    LengthNotCoprime,
    BadParameters,
    StateCapExceeded,
    EnumerationCapExceeded,
    SearchSpaceTooLarge,
)


def _emit(payload, fmt: str, table_renderer):
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        table_renderer(payload)


def _context(args):
    field = parse_field(args.field)
    return RingContext(field, args.n)


def cmd_factor(args) -> int:
    ctx = _context(args)
    payload = {
        "field": field_to_str(ctx.field),
        "n": ctx.n,
        "degree_classes": [list(c) for c in ctx.degree_classes],
        "factors": [
            {
                "index": k,
                "poly": pi.to_str("x"),
                "degree": ctx.kappas[k - 1],
                "idempotent": str(ctx.idempotent(k)),
            }
            for k, pi in enumerate(ctx.factors, start=1)
        ],
    }

    def table(p):
        print(f"x^{p['n']} - 1 over {p['field']}")
        print(f"degree classes: {p['degree_classes']}")
        for f in p["factors"]:
            print(f"  pi_{f['index']} = {f['poly']}  (deg {f['degree']})")
            print(f"    eps_{f['index']} = {f['idempotent']}")

    _emit(payload, args.format, table)
    return 0


def cmd_automorphisms(args) -> int:
    ctx = _context(args)
    auts = enumerate_automorphisms(ctx)
    listed = auts
    if args.sigma:
        wanted = parse_sigma(ctx, args.sigma)
        listed = [s for s in auts if s == wanted]
    payload = {
        "field": field_to_str(ctx.field),
        "n": ctx.n,
        "count": len(auts),
        "automorphisms": [
            {
                "image": str(s.sigma_x),
                "cycles": s.cycle_str(),
                "orders": {str(l): s.l_order(l) for l in range(1, ctx.r + 1)},
            }
            for s in listed
        ],
    }

    def table(p):
        print(f"{p['count']} automorphisms of A = {p['field']}[x]/(x^{p['n']}-1)")
        for s in p["automorphisms"]:
            orders = ", ".join(f"o_{l}={o}" for l, o in s["orders"].items())
            print(f"  x -> {s['image']:<40} {s['cycles']:<20} {orders}")

    _emit(payload, args.format, table)
    return 0


def _load_descriptor(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read descriptor {path}: {exc}") from exc


def _build_from_descriptor(desc: dict, degree_cap=None):
    try:
        field = parse_field(desc["field"])
        n = int(desc["n"])
        sigma_text = desc["sigma"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"descriptor needs field, n, sigma: {exc}") from exc
    ctx = RingContext(field, n)
    sigma = parse_sigma(ctx, sigma_text)
    if "generator" in desc:
        g = parse_skew(sigma, desc["generator"])
        return sigma, ConvCode.from_reduced(g)
    recipe = desc.get("recipe")
    if recipe is None and "l" in desc and "d" in desc:
        # flat recipe form: l, d, scalars directly in the descriptor
        recipe = {"l": desc["l"], "d": desc["d"], "scalars": desc.get("scalars", [])}
    if recipe is None:
        raise ParseError("descriptor needs either a generator or a recipe")
    components = recipe.get("components", [recipe])
    codes = []
    for comp in components:
        try:
            l, d = int(comp["l"]), int(comp["d"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"recipe component needs l and d: {exc}") from exc
        scalars = tuple(
            parse_ring_element(ctx, s) for s in comp.get("scalars", [])
        )
        codes.append(build_minimal_code(MinimalCodeRecipe(sigma, l, d, scalars)))
    return sigma, (codes[0] if len(codes) == 1 else orthogonal_sum(codes))


def _code_payload(desc, code, report=None):
    payload = {
        "field": desc["field"],
        "n": code.n,
        "sigma": desc["sigma"],
        "generator": str(code.reduced_generator)
        if code.reduced_generator is not None
        else None,
        "support": list(code.support) if code.support else None,
        "parameters": {"n": code.n, "k": code.k, "delta": code.delta},
        "forney": list(code.forney),
        "generator_matrix": matrix_to_dict(code.generator),
    }
    if report is not None:
        payload["distance"] = report.as_dict()
    return payload


def _check_expected(desc, code, report) -> list:
    expected = desc.get("expected") or {}
    problems = []
    if "k" in expected and code.k != expected["k"]:
        problems.append(f"k = {code.k}, expected {expected['k']}")
    if "delta" in expected and code.delta != expected["delta"]:
        problems.append(f"delta = {code.delta}, expected {expected['delta']}")
    if "forney" in expected and sorted(code.forney) != sorted(expected["forney"]):
        problems.append(f"forney = {list(code.forney)}, expected {expected['forney']}")
    if "distance" in expected:
        if report is None or report.distance != expected["distance"]:
            got = report.distance if report else None
            problems.append(f"distance = {got}, expected {expected['distance']}")
    return problems


def _apply_overrides(desc: dict, args) -> dict:
    """--field/--n/--sigma given on the command line win over the file."""
    out = dict(desc)
    if getattr(args, "field", None):
        out["field"] = args.field
    if getattr(args, "n", None):
        out["n"] = args.n
    if getattr(args, "sigma", None):
        out["sigma"] = args.sigma
    return out


def cmd_build(args) -> int:
    desc = _apply_overrides(_load_descriptor(args.recipe), args)
    sigma, code = _build_from_descriptor(desc, args.degree_cap)
    report = None
    expected = desc.get("expected") or {}
    if args.with_distance or "distance" in expected:
        report = free_distance(code.generator, args.state_cap)
    payload = _code_payload(desc, code, report)

    def table(p):
        print(f"code over {p['field']}, n = {p['n']}, sigma = {p['sigma']}")
        print(f"parameters (n,k,delta) = ({p['parameters']['n']},{p['parameters']['k']},{p['parameters']['delta']})")
        print(f"forney indices: {p['forney']}")
        if p["generator"]:
            print(f"generator polynomial: {p['generator']}")
        print("generator matrix:")
        for row in p["generator_matrix"]["entries"]:
            print("  [" + ", ".join(row) + "]")
        if "distance" in p:
            d = p["distance"]
            print(
                f"distance {d['distance']} (singleton {d['singleton']}, "
                f"griesmer {d['griesmer']}, attains {d['attains']})"
            )

    _emit(payload, args.format, table)
    problems = _check_expected(desc, code, report)
    if problems:
        for p in problems:
            print(f"expected-mismatch: {p}", file=sys.stderr)
        return EXIT_MISMATCH
    return 0


def cmd_distance(args) -> int:
    desc = _apply_overrides(_load_descriptor(args.recipe), args)
    sigma, code = _build_from_descriptor(desc, args.degree_cap)
    report = free_distance(code.generator, args.state_cap)
    payload = report.as_dict()
    payload["parameters"] = {"n": code.n, "k": code.k, "delta": code.delta}

    def table(p):
        pr = p["parameters"]
        print(f"({pr['n']},{pr['k']},{pr['delta']}) code")
        print(f"free distance  {p['distance']}")
        print(f"singleton      {p['singleton']}")
        print(f"griesmer       {p['griesmer']}")
        print(f"attains        {p['attains']}")
        print(f"witness        {p['witness']}")

    _emit(payload, args.format, table)
    problems = _check_expected(desc, code, report)
    if problems:
        for p in problems:
            print(f"expected-mismatch: {p}", file=sys.stderr)
        return EXIT_MISMATCH
    return 0


def cmd_bounds(args) -> int:
    payload = {
        "n": args.n,
        "k": args.k,
        "delta": args.delta,
        "m": args.m,
        "q": args.q,
        "singleton": singleton_bound(args.n, args.k, args.delta),
        "griesmer": griesmer_bound(args.n, args.k, args.delta, args.m, args.q),
    }

    def table(p):
        print(f"(n,k,delta) = ({p['n']},{p['k']},{p['delta']}), m = {p['m']}, q = {p['q']}")
        print(f"singleton bound  {p['singleton']}")
        print(f"griesmer bound   {p['griesmer']}")

    _emit(payload, args.format, table)
    return 0


def cmd_equivalence(args) -> int:
    field = parse_field(args.field)
    with open(args.matrix_a, "r", encoding="utf-8") as fh:
        A = matrix_from_dict(field, json.load(fh))
    with open(args.matrix_b, "r", encoding="utf-8") as fh:
        B = matrix_from_dict(field, json.load(fh))
    found = strong_equivalence(A, B)
    if found is None:
        payload = {"equivalent": False}
    else:
        P, D = found
        perm = []
        for j in range(P.ncols):
            for i in range(P.nrows):
                if not P.entries[i][j].is_zero():
                    perm.append(i)
                    break
        diag = [D.entries[i][i].to_str("z") for i in range(D.nrows)]
        payload = {"equivalent": True, "permutation": perm, "diagonal": diag}

    def table(p):
        if p["equivalent"]:
            print(f"strongly equivalent: column permutation {p['permutation']}, scaling {p['diagonal']}")
        else:
            print("not strongly equivalent")

    _emit(payload, args.format, table)
    return 0


def cmd_verify_paper(args) -> int:
    fixtures = None
    if args.fixtures:
        with open(args.fixtures, "r", encoding="utf-8") as fh:
            fixtures = json.load(fh)
    results = verify.run_checks(fixtures, only=args.only, state_cap=args.state_cap)
    if args.format == "json":
        print(
            json.dumps(
                [{"name": r.name, "ok": r.ok, "detail": r.detail} for r in results],
                indent=2,
            )
        )
    else:
        for r in results:
            print(f"{'PASS' if r.ok else 'FAIL'} {r.name} - {r.detail}")
        passed = sum(r.ok for r in results)
        print(f"{passed}/{len(results)} checks passed")
    if not results:
        print("no checks matched the filter", file=sys.stderr)
        return EXIT_MISMATCH
    return 0 if all(r.ok for r in results) else EXIT_MISMATCH


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="skewcyclic",
        description="Cyclic convolutional codes via skew polynomials over F[x]/(x^n-1).",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, field=False, n=False):
        p.add_argument("--format", choices=("json", "table"), default="json")
        if field:
            p.add_argument("--field", required=True, help='field literal, e.g. "GF(4):y^2+y+1"')
        if n:
            p.add_argument("--n", type=int, required=True, help="code length")

    p = sub.add_parser("factor", help="factor x^n-1 and list the primitive idempotents")
    common(p, field=True, n=True)
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("automorphisms", help="enumerate the automorphism group of A")
    common(p, field=True, n=True)
    p.add_argument("--sigma", default=None, help='show only this automorphism, e.g. "x^5" or "perm:(1)(2,3)"')
    p.set_defaults(func=cmd_automorphisms)

    def build_like(p):
        p.add_argument("--recipe", required=True, help="descriptor JSON file")
        p.add_argument("--field", default=None, help="override the descriptor's field")
        p.add_argument("--n", type=int, default=None, help="override the descriptor's length")
        p.add_argument("--sigma", default=None, help="override the descriptor's automorphism")
        p.add_argument("--state-cap", type=int, default=2 ** 16)
        p.add_argument("--degree-cap", type=int, default=None, help="cap for skew-unit inverse searches")

    p = sub.add_parser("build", help="build a code from a recipe/descriptor file")
    common(p)
    build_like(p)
    p.add_argument("--with-distance", action="store_true", help="also compute the free distance")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("distance", help="free distance of a code given by a descriptor")
    common(p)
    build_like(p)
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("bounds", help="generalized Singleton and Griesmer bounds")
    common(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--m", type=int, required=True, help="largest Forney index")
    p.add_argument("--q", type=int, required=True, help="field size")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("equivalence", help="search for a strong equivalence between two matrices")
    common(p, field=True)
    p.add_argument("--matrix-a", required=True, help="matrix JSON file")
    p.add_argument("--matrix-b", required=True, help="matrix JSON file")
    p.set_defaults(func=cmd_equivalence)

    p = sub.add_parser("verify-paper", help="reproduce all worked examples (golden suite)")
    common(p)
    p.add_argument("--only", default=None, help="substring filter on check names")
    p.add_argument("--fixtures", default=None, help="override the golden fixture file")
    p.add_argument("--state-cap", type=int, default=2 ** 16)
    p.set_defaults(func=cmd_verify_paper)
    return ap


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except _PRECONDITION_ERRORS as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except SkewCyclicError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_MATH


if __name__ == "__main__":
    sys.exit(main())
