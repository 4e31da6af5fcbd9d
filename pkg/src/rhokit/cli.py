"""Command-line front end.

Exit codes: 0 when a decision was made or a verification came back clean,
1 when verify-table found differences, 2 on any input error.
"""

import argparse
import json
import sys

from gmpy2 import mpq

from . import linalg as la
from .catalog import CatalogError, describe, maximal_irreducible_nonsimple, maximal_reducible, proposition_family
from .classifier import ClassifierError, classify
from .embedding import EmbeddingError, adjoint_weight_multiset, ambient_weight_multiset
from .grammar import ParseError, format_pair, parse_algebra, parse_pair
from .rho import RhoError, decide, rho_eval
from .roots import RootDataError
from .subalgebras import SubalgebraError
from .table1 import DEFAULT_BOUNDS, GoldenError, verify_table1
from .weights import WeightError, dimension, weight_system

INPUT_ERRORS = (
    ParseError,
    EmbeddingError,
    CatalogError,
    ClassifierError,
    GoldenError,
    RootDataError,
    SubalgebraError,
    WeightError,
)


class UsageError(ValueError):
    pass


def _rational(text):
    try:
        return mpq(text.strip())
    except ValueError:
        raise UsageError(f"not a rational number: {text!r}") from None


def _vector(text):
    return [_rational(t) for t in text.split(",")] if text.strip() else []


def _ambient(text):
    fam, _, n = text.strip().partition(":")
    if fam not in ("sl", "so", "sp") or not n.isdigit():
        raise UsageError(f"expected an ambient such as sl:4, got {text!r}")
    return fam, int(n)


def _emit(args, payload, text_lines):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print("\n".join(text_lines))


def _form_text(cov, names):
    terms = []
    for c, name in zip(cov, names):
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = "" if abs(c) == 1 else la.fmt(abs(c)) + "*"
        terms.append(f"{sign} {mag}{name}")
    s = " ".join(terms)
    return s[2:] if s.startswith("+ ") else "-" + s[2:]


def verdict_payload(spec, verdict):
    h = spec.h
    w = verdict.witness
    names = [n for n, _ in h.coordinate_covectors()]
    out = {
        "spec": format_pair(spec),
        "verdict": verdict.kind.value,
        "min_value": la.fmt(verdict.exact_min),
        "minimizer": [la.fmt(v) for v in h.coordinates_of(h.internal.point_from_values(verdict.minimizer))],
        "coordinates": names,
        "witness": None,
    }
    if w is not None:
        out["witness"] = {
            "rays": [[la.fmt(v) for v in h.coordinates_of(p)] for p in w.points()],
            "simple_value_rays": [[la.fmt(v) for v in r] for r in w.rays],
            "equalities": [[la.fmt(v) for v in e] for e in w.equalities],
            "inequalities": [[la.fmt(v) for v in e] for e in w.inequalities],
            "full_chamber": w.is_full_chamber,
        }
    return out


def verdict_lines(spec, verdict):
    p = verdict_payload(spec, verdict)
    lines = [p["spec"], f"verdict: {p['verdict']}", f"min over sum(alpha_j(Y)) = 1: {p['min_value']}"]
    w = verdict.witness
    if w is not None:
        x = [f"alpha{j + 1}" for j in range(spec.h.rank)]
        if w.is_full_chamber:
            lines.append("witness: all of a_+")
        else:
            lines.append("witness cone (x_j = alpha_j(Y), x >= 0):")
            lines += [f"  {_form_text(e, x)} = 0" for e in w.equalities]
            lines += [f"  {_form_text(e, x)} >= 0" for e in w.inequalities]
        cols = ", ".join(p["coordinates"])
        lines.append(f"rays in ({cols}):")
        lines += ["  (" + ", ".join(r) + ")" for r in p["witness"]["rays"]]
    return lines


# ------------------------------------------------------------ commands


def cmd_check(args):
    spec = parse_pair(args.spec).validate()
    if args.validate_only:
        _emit(args, {"spec": format_pair(spec), "valid": True}, [format_pair(spec), "valid"])
        return 0
    verdict = decide(spec)
    _emit(args, verdict_payload(spec, verdict), verdict_lines(spec, verdict))
    return 0


def cmd_classify(args):
    g = _ambient(args.g)
    rows = classify(g, depth_bound=args.max_depth, prune=not args.no_prune)
    if args.json:
        for r in rows:
            print(json.dumps({"g": args.g, "h": r.h, **verdict_payload(r.spec, r.verdict)}, sort_keys=True))
        return 0
    print(f"{len(rows)} row(s) for {g[0]}:{g[1]}")
    for r in rows:
        w = r.witness
        if w == "all of a_+":
            desc = w
        else:
            x = [f"alpha{j + 1}" for j in range(r.spec.h.rank)]
            desc = ", ".join([f"{_form_text(e, x)} = 0" for e in w.equalities] + [f"{_form_text(e, x)} >= 0" for e in w.inequalities])
        print(f"  {format_pair(r.spec)}  |  {desc}")
    return 0


def _load_bounds(path):
    if path is None:
        return DEFAULT_BOUNDS
    try:
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
        return {k: (int(v[0]), int(v[1])) for k, v in raw.items()}
    except (OSError, ValueError, TypeError, IndexError) as e:
        raise UsageError(f"bad bounds file {path}: {e}") from None


def cmd_verify_table(args):
    report = verify_table1(_load_bounds(args.bounds), golden=args.golden)
    payload = {
        "empty": report.empty,
        "checked": report.checked,
        "missing": [list(x) for x in report.missing],
        "extra": [list(x) for x in report.extra],
        "mismatched": [list(x) for x in report.mismatched],
    }
    status = "empty diff" if report.empty else "differences found"
    _emit(args, payload, [f"{report.checked} instance(s) checked: {status}"] + report.lines())
    return 0 if report.empty else 1


def cmd_rho(args):
    text = args.target
    spec = parse_pair(text).validate() if "=" in text else None
    h = spec.h if spec else parse_algebra(text)
    vals = _vector(args.at)
    if args.simple_values:
        if len(vals) != h.rank:
            raise UsageError(f"expected {h.rank} simple values, got {len(vals)}")
        point = h.internal.point_from_values(vals)
    else:
        point = h.point_from_coordinates(vals)
    rho_h = rho_eval(adjoint_weight_multiset(h), point)
    payload = {"rho_h": la.fmt(rho_h)}
    if spec:
        rho_g = rho_eval(ambient_weight_multiset(spec), point)
        payload.update(rho_g=la.fmt(rho_g), rho_q=la.fmt(rho_g - rho_h), D=la.fmt(rho_g - 2 * rho_h))
    _emit(args, payload, [f"{k} = {v}" for k, v in payload.items()])
    return 0


def cmd_weights(args):
    h = parse_algebra(args.algebra)
    if len(h.internal.factors) != 1:
        raise UsageError("weights needs a simple algebra")
    f = h.internal.factors[0]
    try:
        lam = [int(x) for x in args.labels.split(",")]
    except ValueError:
        raise UsageError(f"Dynkin labels must be integers: {args.labels!r}") from None
    ws = weight_system(f, lam)
    rows = sorted(((f.root_to_dynkin(w), m) for w, m in ws.entries.items()), key=lambda t: (-sum(f.dynkin_to_root(t[0])), t[0]))
    payload = {
        "algebra": args.algebra,
        "highest_weight": lam,
        "dimension": dimension(f, lam),
        "weights": [{"labels": [int(x) for x in lab], "multiplicity": m} for lab, m in rows],
    }
    lines = [f"{args.algebra} highest weight {tuple(lam)}: dimension {payload['dimension']}"]
    lines += [f"  {tuple(int(x) for x in lab)}  x{m}" for lab, m in rows]
    _emit(args, payload, lines)
    return 0


def _params(items):
    out = {}
    for item in items:
        key, sep, val = item.partition("=")
        if not sep:
            raise UsageError(f"expected key=value, got {item!r}")
        out[key] = [int(v) for v in val.split(",")] if key == "parts" else int(val)
    return out


def cmd_catalog(args):
    if args.family:
        items = ([args.g] if args.g else []) + args.params
        spec = proposition_family(args.family, **_params(items))
        _emit(args, {"family": args.family, "spec": describe(spec)}, [describe(spec)])
        return 0
    if args.g is None:
        raise UsageError("catalog needs an ambient such as so:8, or --family")
    g = _ambient(args.g)
    red = [(e.subalgebra, describe(e.spec())) for e in maximal_reducible(g)]
    ten = [(e.subalgebra, describe(e.spec())) for e in maximal_irreducible_nonsimple(g)]
    payload = {"g": args.g, "reducible": [s for _, s in red], "tensor": [s for _, s in ten]}
    lines = ["maximal, reducible:"] + [f"  {s}" for _, s in red]
    lines += ["maximal, non-simple irreducible:"] + [f"  {s}" for _, s in ten]
    _emit(args, payload, lines)
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="rhokit", description="Exact rho-function comparisons for pairs (g, h).")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="decide the trichotomy for one pair")
    c.add_argument("spec", help='e.g. "g=so:9; h=g2; V=irrep1[1,0] (+) triv:2"')
    c.add_argument("--validate-only", action="store_true", help="run the embedding checks and skip the LP")
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("classify", help="list the pairs with rho_h <= rho_q but not strictly")
    c.add_argument("g", help="classical ambient such as sl:5")
    c.add_argument("--max-depth", type=int, default=None)
    c.add_argument("--no-prune", action="store_true", help="expand strictly dominated nodes too")
    c.set_defaults(func=cmd_classify)

    c = sub.add_parser("verify-table", help="compare classify against the golden classification table")
    c.add_argument("--bounds", help='JSON file such as {"sl": [4, 9], "so": [7, 11], "sp": [2, 6]}')
    c.add_argument("--golden", help="golden JSON lines file (default: the packaged one)")
    c.set_defaults(func=cmd_verify_table)

    c = sub.add_parser("rho", help="evaluate rho_h, rho_g, rho_q and D at a point")
    c.add_argument("target", help="a pair spec, or just an algebra such as sl:3")
    c.add_argument("--at", required=True, help="comma-separated rationals, natural coordinates by default")
    c.add_argument("--simple-values", action="store_true", help="read --at as alpha_j(Y) values")
    c.set_defaults(func=cmd_rho)

    c = sub.add_parser("weights", help="dump the weight system of an irreducible module")
    c.add_argument("algebra", help="simple algebra such as g2 or so:7")
    c.add_argument("labels", help="Dynkin labels, e.g. 0,0,1")
    c.set_defaults(func=cmd_weights)

    c = sub.add_parser("catalog", help="maximal subalgebras of a classical algebra, or a named family")
    c.add_argument("g", nargs="?")
    c.add_argument("--family", help="family id such as redex.1")
    c.add_argument("params", nargs="*", default=[], help="family parameters as key=value")
    c.set_defaults(func=cmd_catalog)

    for c in sub.choices.values():
        c.add_argument("--json", action="store_true", help="machine-readable output")
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 2
    try:
        return args.func(args)
    except (*INPUT_ERRORS, UsageError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except RhoError as e:
        print(f"internal consistency check failed: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
