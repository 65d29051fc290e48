"""Command-line front end: ``slopekit <subcommand> ...``.

Exit status is 0 on success, 1 on a domain error (bad PD code, failed fit,
budget exceeded) and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path

from . import corpus
from .colored import DEFAULT_BUDGET, colored_degrees, colored_jones
from .diagram import Diagram, DiagramError, TorusParams, parse_pd, signed_counts, torus_diagram
from .quasipoly import SCHEMA, DegreeSequence, FitError, fit, slope_data
from .skein import BracketBudgetError, jones, t_degrees
from .states import adequacy, resolve, state_surface_invariants
from .torus import adequate_degree_formula, detect_torus, torus_degree_sequence

log = logging.getLogger("slopekit")


class UsageError(Exception):
    pass


# -- inputs ------------------------------------------------------------------


def load_diagram(source: str) -> Diagram:
    """Corpus name, path to a PD/JSON file, or inline PD text."""
    if source in corpus.CORPUS:
        return corpus.get(source)
    path = Path(source)
    if len(source) < 256 and path.is_file():
        text = path.read_text(encoding="utf-8").strip()
        if text.startswith("{"):
            return Diagram.from_json(json.loads(text))
        return parse_pd(text)
    return parse_pd(source)


def _diagram_from_args(args) -> Diagram:
    if getattr(args, "torus", None):
        return torus_diagram(TorusParams.canonical(*args.torus))
    if args.pd is None:
        raise UsageError("one of --pd or --torus is required")
    return load_diagram(args.pd)


def _load_degrees(path: str) -> DegreeSequence:
    with open(path, encoding="utf-8") as fh:
        return DegreeSequence.from_json(json.load(fh))


def _poly_report(p, **extra) -> dict:
    dq = t_degrees(p)
    return {"schema": SCHEMA, **p.to_json(), "four_d_plus": dq.four_d_plus,
            "four_d_minus": dq.four_d_minus, **extra}


# -- subcommands -------------------------------------------------------------


def cmd_validate(args) -> dict:
    d = _diagram_from_args(args)
    c_plus, c_minus, w = signed_counts(d)
    return {
        "schema": SCHEMA,
        "pd": d.to_pd(),
        "crossings": len(d.pd),
        "edge_count": d.edge_count,
        "free_loops": d.free_loops,
        "components": d.components,
        "c_plus": c_plus,
        "c_minus": c_minus,
        "writhe": w,
    }


def cmd_invariants(args) -> dict:
    d = _diagram_from_args(args)
    v_a, _ = resolve(d, ("A",) * len(d.pd))
    v_b, _ = resolve(d, ("B",) * len(d.pd))
    a_ok, b_ok = adequacy(d)
    report = {"schema": SCHEMA, "vA": v_a, "vB": v_b, "a_adequate": a_ok, "b_adequate": b_ok,
              "chiA": None, "chiB": None, "slopeA": None, "slopeB": None}
    if d.is_knot():
        sa, sb = state_surface_invariants(d, "A"), state_surface_invariants(d, "B")
        report.update(chiA=sa.euler, chiB=sb.euler, slopeA=_num(sa.slope), slopeB=_num(sb.slope))
    return report


def cmd_jones(args) -> dict:
    d = _diagram_from_args(args)
    return _poly_report(jones(d, reduced=args.reduced), reduced=args.reduced)


def cmd_cjones(args) -> dict:
    d = _diagram_from_args(args)
    return _poly_report(colored_jones(d, args.n, budget=args.budget), n=args.n)


def _degrees(args) -> DegreeSequence:
    if getattr(args, "torus", None) and getattr(args, "source", "formula") == "formula":
        return torus_degree_sequence(TorusParams.canonical(*args.torus), args.n_max, args.mode)
    d = _diagram_from_args(args)
    seq = colored_degrees(d, args.n_max, budget=args.budget)
    extend = getattr(args, "extend_to", None)
    if extend and extend > args.n_max:
        for n in range(1, args.n_max + 1):
            if adequate_degree_formula(d, n) != (seq.plus[n - 1], seq.minus[n - 1]):
                raise ValueError(f"adequate formula disagrees with brute force at n={n}")
        for n in range(args.n_max + 1, extend + 1):
            plus, minus = adequate_degree_formula(d, n)
            seq.plus.append(plus)
            seq.minus.append(minus)
        seq.provenance = "brute-force+adequate-formula"
    return seq


def cmd_degrees(args) -> dict:
    return _degrees(args).to_json()


def cmd_torus_formula(args) -> dict:
    tp = TorusParams.canonical(args.p, args.q)
    return torus_degree_sequence(tp, args.n_max, args.mode).to_json()


def _fit_both(seq: DegreeSequence, args):
    kw = dict(max_period=args.max_period, max_onset=args.max_onset, min_support=args.min_support)
    return fit(seq.plus, **kw), fit(seq.minus, **kw)


def cmd_fit(args) -> dict:
    qp_plus, qp_minus = _fit_both(_load_degrees(args.infile), args)
    return {"schema": SCHEMA, "plus": qp_plus.to_json(), "minus": qp_minus.to_json(),
            "slopes": slope_data(qp_plus, qp_minus).to_json()}


def _detect(seq: DegreeSequence, args) -> dict:
    qp_plus, qp_minus = _fit_both(seq, args)
    result = detect_torus(qp_plus, qp_minus, args.mode)
    out = result.to_json()
    out["slopes"] = slope_data(qp_plus, qp_minus).to_json()
    return out


def cmd_detect(args) -> dict:
    return _detect(_load_degrees(args.infile), args)


def cmd_pipeline(args) -> dict:
    if args.infile:
        seq = _load_degrees(args.infile)
    else:
        seq = _degrees(args)
    out = _detect(seq, args)
    out["degrees"] = seq.to_json()
    return out


# -- output ------------------------------------------------------------------


def _num(x):
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else [x.numerator, x.denominator]
    return x


def _flatten(obj, prefix=""):
    if isinstance(obj, dict):
        for k, v in obj.items():
            yield from _flatten(v, f"{prefix}.{k}" if prefix else str(k))
    elif isinstance(obj, list) and any(isinstance(v, (dict, list)) for v in obj):
        for i, v in enumerate(obj):
            yield from _flatten(v, f"{prefix}[{i}]")
    else:
        yield prefix, obj


def render_table(report: dict) -> str:
    rows = list(_flatten(report))
    width = max((len(k) for k, _ in rows), default=0)
    return "\n".join(f"{k:<{width}}  {json.dumps(v)}" for k, v in rows)


# -- parser ------------------------------------------------------------------


def _add_input(p, torus=True):
    p.add_argument("--pd", help="PD code, path to a PD/JSON file, or a corpus name")
    if torus:
        p.add_argument("--torus", nargs=2, type=int, metavar=("P", "Q"),
                       help="use torus knot T(P,Q)")


def _add_fit(p):
    p.add_argument("--max-period", type=int, default=4)
    p.add_argument("--max-onset", type=int, default=4)
    p.add_argument("--min-support", type=int, default=4,
                   help="points required per residue class (default 4)")


def _add_mode(p):
    p.add_argument("--mode", choices=("paper", "oracle"), default="oracle",
                   help="even-n constant term of the torus formula")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="table", action="store_false", help="JSON output (default)")
    fmt.add_argument("--table", dest="table", action="store_true", help="key/value table output")
    common.add_argument("-v", "--verbose", action="store_true")
    common.set_defaults(table=False)

    parser = argparse.ArgumentParser(prog="slopekit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    p = add("validate", help="parse a diagram and report signed crossing counts")
    _add_input(p)
    p.set_defaults(func=cmd_validate)

    for name in ("invariants", "adequacy"):
        p = add(name, help="state circles, adequacy and state-surface invariants")
        _add_input(p)
        p.set_defaults(func=cmd_invariants)

    p = add("jones", help="Jones polynomial")
    _add_input(p)
    p.add_argument("--reduced", action=argparse.BooleanOptionalAction, default=True)
    p.set_defaults(func=cmd_jones)

    p = add("cjones", help="colored Jones polynomial J_K(n)")
    _add_input(p)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help="max crossings in a cable (default %(default)s)")
    p.set_defaults(func=cmd_cjones)

    p = add("degrees", help="degree table 4d+/4d- for n = 1..n_max")
    _add_input(p)
    p.add_argument("--n-max", type=int, default=4)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--source", choices=("formula", "brute-force"), default="brute-force")
    p.add_argument("--extend-to", type=int, help="extend with the adequate-diagram formulas")
    _add_mode(p)
    p.set_defaults(func=cmd_degrees)

    p = add("fit", help="fit quasi-polynomials to a degree file")
    p.add_argument("--in", dest="infile", required=True)
    _add_fit(p)
    p.set_defaults(func=cmd_fit)

    p = add("torus-formula", help="closed-form torus knot degrees")
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-q", type=int, required=True)
    p.add_argument("--n-max", type=int, default=12)
    _add_mode(p)
    p.set_defaults(func=cmd_torus_formula)

    p = add("detect-torus", help="fit a degree file and test for a torus knot")
    p.add_argument("--in", dest="infile", required=True)
    _add_fit(p)
    _add_mode(p)
    p.set_defaults(func=cmd_detect)

    p = add("pipeline", help="degrees -> fit -> detect in one pass")
    _add_input(p)
    p.add_argument("--in", dest="infile", help="degree file instead of a diagram")
    p.add_argument("--n-max", type=int, default=12)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--source", choices=("formula", "brute-force"), default="formula",
                   help="for --torus: closed formula or brute force on the braid diagram")
    p.add_argument("--extend-to", type=int, help="extend brute-force degrees by the adequate formulas")
    _add_fit(p)
    _add_mode(p)
    p.set_defaults(func=cmd_pipeline)
    return parser


def run(argv: list[str] | None = None) -> tuple[int, str]:
    """Run one command; return ``(exit status, report text)``."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), ""
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        report = args.func(args)
    except UsageError as exc:
        return 2, f"usage error: {exc}"
    except (DiagramError, FitError, BracketBudgetError, ValueError, KeyError, OSError) as exc:
        return 1, f"error: {exc}"
    text = render_table(report) if args.table else json.dumps(report, indent=2)
    return 0, text


def main(argv: list[str] | None = None) -> int:
    status, text = run(argv)
    if text:
        print(text, file=sys.stdout if status == 0 else sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
