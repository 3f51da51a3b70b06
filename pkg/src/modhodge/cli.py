"""Command-line front end: ``modhodge <command> [flags]``.

Every parameter is a flag and output is deterministic. A result is fully
computed and rendered before anything is written, so a failure never leaves a
partial polynomial on stdout. Exit codes: 0 ok, 1 failed invariant, 2 usage.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Optional

from .errors import InvariantError, UnsupportedError
from .hilbert import (
    ResolutionSpec, base_e, base_mhp, hilb_e_series, hilb_mu_series, partition_poincare,
    resolution_outputs,
)
from .moduli import SPACE_ALIASES, ModuliSpec, mhp
from .plethystic import pexp, plog
from .poly import at_unit_uv, euler_value
from .render import series_text, to_latex, to_text
from .series import YSeries
from .weyl import FAMILIES, GroupSpec, class_table

FORMATS = ("json", "latex", "text")
DEFAULT_ORDER = 12
BUNDLE_NOTE = "M_A(G): the moduli of G-bundles has the mixed Hodge structure of the Higgs moduli"


class UsageError(Exception):
    pass


@dataclass
class JobConfig:
    command: str
    args: argparse.Namespace
    fmt: str = "text"
    output: Optional[str] = None
    order: int = DEFAULT_ORDER
    failed: bool = False


def _positive(name):
    def parse(s):
        try:
            v = int(s)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{name} must be an integer, got {s!r}")
        if v < 1:
            raise argparse.ArgumentTypeError(f"{name} must be >= 1, got {v}")
        return v
    return parse


def _nonneg(name):
    def parse(s):
        try:
            v = int(s)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{name} must be an integer, got {s!r}")
        if v < 0:
            raise argparse.ArgumentTypeError(f"{name} must be >= 0, got {v}")
        return v
    return parse


# -- emitters ------------------------------------------------------------------

def dump_json(obj):
    return json.dumps(obj, separators=(",", ":")) + "\n"


def poly_out(poly, fmt, meta=None, key="poly"):
    if fmt == "json":
        return dump_json({**(meta or {}), key: poly.to_json()})
    return (to_latex(poly) if fmt == "latex" else to_text(poly)) + "\n"


def series_out(series, fmt, meta=None):
    if fmt == "json":
        return dump_json({**(meta or {}), **series.to_json()})
    return series_text(series, latex=fmt == "latex") + "\n"


def read_input(src):
    """JSON text, a path, or ``-`` for stdin."""
    if src is None:
        raise UsageError("--input is required")
    text = src
    if src == "-":
        text = sys.stdin.read()
    elif not src.lstrip().startswith(("{", "[")):
        if not os.path.exists(src):
            raise UsageError(f"--input: no such file {src!r}")
        with open(src) as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"--input is not valid JSON ({exc})")


def read_series(args):
    obj = read_input(args.input)
    if isinstance(obj, dict) and "series" in obj:
        obj = obj["series"]
    try:
        return YSeries.from_json(obj, order=args.order)
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"--input is not a y-series ({type(exc).__name__}: {exc})")


# -- commands ------------------------------------------------------------------

def _moduli_spec(args):
    return ModuliSpec(GroupSpec(args.family, args.n), args.abelian_dim, args.space, args.torus_exponent)


def _moduli_meta(spec):
    meta = {"family": spec.group.family, "n": spec.group.n, "group": spec.group.label,
            "abelian_dim": spec.d, "space": spec.space}
    if spec.torus_exponent is not None:
        meta["torus_exponent"] = spec.torus_exponent
    if spec.space == "bundles":
        meta["note"] = BUNDLE_NOTE
    meta["dim"] = spec.dim
    return meta


def cmd_mhp(job):
    spec = _moduli_spec(job.args)
    return poly_out(mhp(spec), job.fmt, _moduli_meta(spec), "mhp")


def cmd_poincare(job):
    spec = _moduli_spec(job.args)
    return poly_out(at_unit_uv(mhp(spec)), job.fmt, _moduli_meta(spec), "P")


def cmd_euler(job):
    spec = _moduli_spec(job.args)
    chi = euler_value(mhp(spec))
    if job.fmt == "json":
        return dump_json({**_moduli_meta(spec), "euler": str(chi)})
    return f"{chi}\n"


def cmd_weyl_table(job):
    table = class_table(GroupSpec(job.args.family, job.args.n))
    if job.fmt == "json":
        return dump_json(table.to_json())
    fmt = to_latex if job.fmt == "latex" else to_text
    lines = [f"{table.spec.label}: |W| = {table.order}, {len(table.classes)} classes"]
    width = max(len(str(c.size)) for c in table.classes)
    for c in table.classes:
        label = " | ".join(str(p) for p in c.cycle_type)
        lines.append(f"{c.size:>{width}}  {label:<24} {fmt(c.charpoly_poly())}")
    return "\n".join(lines) + "\n"


def cmd_pexp(job):
    return series_out(pexp(read_series(job.args), job.args.signed), job.fmt)


def cmd_plog(job):
    return series_out(plog(read_series(job.args), job.args.signed), job.fmt)


def cmd_hilb_poincare(job):
    n = job.args.n
    return poly_out(partition_poincare(n), job.fmt, {"n": n, "surface": "elliptic"}, "P")


def cmd_hilb_series(job):
    args = job.args
    space = SPACE_ALIASES.get(args.base)
    m = args.torus_exponent or 2 * args.abelian_dim
    e_x = base_e(args.abelian_dim, space, args.torus_exponent)
    mu_x = base_mhp(args.abelian_dim, space, args.torus_exponent)
    mu = hilb_mu_series(mu_x, m, job.order)
    if job.fmt != "json":
        return series_out(mu, job.fmt)
    e = hilb_e_series(e_x, m, job.order)
    meta = {"base": space, "abelian_dim": args.abelian_dim, "order": job.order}
    return dump_json({**meta, "E": e.to_json(), "mhp": mu.to_json(),
                      "P": mu.map(at_unit_uv).to_json()})


def cmd_hilb_resolution(job):
    args = job.args
    spec = ResolutionSpec(args.n, args.abelian_dim, SPACE_ALIASES[args.space], args.torus_exponent)
    res = resolution_outputs(spec)
    if job.fmt == "json":
        return dump_json(res.to_json())
    fmt = to_latex if job.fmt == "latex" else to_text
    return "\n".join([
        f"E: {fmt(res.E)}",
        f"mhp: {fmt(res.mhp)}",
        f"P: {fmt(res.P)}",
        f"euler: {res.euler}",
        f"crepant: {str(res.crepant).lower()}",
        f"routes_agree: {str(res.routes_agree).lower()}",
    ]) + "\n"


def cmd_selfcheck(job):
    from .checks import format_report, run_checks
    ids = set(job.args.only) if job.args.only else None
    results = run_checks(ids)
    job.failed = not all(r.passed for r in results)
    return format_report(results) + "\n"


COMMANDS = {
    "mhp": cmd_mhp, "poincare": cmd_poincare, "euler": cmd_euler, "weyl-table": cmd_weyl_table,
    "pexp": cmd_pexp, "plog": cmd_plog, "hilb-poincare": cmd_hilb_poincare,
    "hilb-series": cmd_hilb_series, "hilb-resolution": cmd_hilb_resolution,
    "selfcheck": cmd_selfcheck,
}


# -- parser --------------------------------------------------------------------

def _common(p, fmt_default="text"):
    p.add_argument("--format", choices=FORMATS, default=fmt_default)
    p.add_argument("--output", help="write to this path instead of stdout")


def _group(p):
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--n", type=_positive("--n"), required=True,
                   help="rank parameter: GL(n), SL(n), SO(2n+1), Sp(2n), SO(2n)")


def build_parser():
    parser = argparse.ArgumentParser(prog="modhodge", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_ in (("mhp", "mixed Hodge polynomial of a moduli space"),
                        ("poincare", "Poincare polynomial of a moduli space"),
                        ("euler", "Euler characteristic of a moduli space")):
        p = sub.add_parser(name, help=help_)
        _group(p)
        p.add_argument("--abelian-dim", type=_positive("--abelian-dim"), required=True)
        p.add_argument("--space", choices=("higgs", "char", "character", "bundle", "bundles"),
                       default="higgs")
        p.add_argument("--torus-exponent", type=_positive("--torus-exponent"))
        _common(p)

    p = sub.add_parser("weyl-table", help="conjugacy classes of a Weyl group")
    _group(p)
    _common(p, "json")

    for name in ("pexp", "plog"):
        p = sub.add_parser(name, help=f"plethystic {'exponential' if name == 'pexp' else 'logarithm'} of a y-series")
        p.add_argument("--input", required=True, help="series JSON text, a file path, or - for stdin")
        p.add_argument("--order", type=_positive("--order"), default=DEFAULT_ORDER)
        p.add_argument("--signed", action="store_true", help="Koszul signs on odd t-degree")
        _common(p, "json")

    p = sub.add_parser("hilb-poincare", help="Poincare polynomial of Hilb^n of T*E, E elliptic")
    p.add_argument("--n", type=_positive("--n"), required=True)
    _common(p)

    p = sub.add_parser("hilb-series", help="generating series of Hilbert schemes of the rank-one base")
    p.add_argument("--base", choices=("higgs", "char", "character"), required=True)
    p.add_argument("--abelian-dim", type=_positive("--abelian-dim"), default=1)
    p.add_argument("--torus-exponent", type=_positive("--torus-exponent"))
    p.add_argument("--order", type=_positive("--order"), default=DEFAULT_ORDER)
    _common(p, "json")

    p = sub.add_parser("hilb-resolution", help="Hilbert scheme resolution of the rank-n moduli")
    p.add_argument("--n", type=_positive("--n"), required=True)
    p.add_argument("--abelian-dim", type=_positive("--abelian-dim"), required=True)
    p.add_argument("--space", choices=("higgs", "char", "character"), required=True)
    p.add_argument("--torus-exponent", type=_positive("--torus-exponent"))
    _common(p, "json")

    p = sub.add_parser("selfcheck", help="run every acceptance check against its oracle")
    p.add_argument("--only", type=_nonneg("--only"), nargs="+", metavar="ID")
    p.add_argument("--output")
    return parser


def _validate(args):
    # combinations argparse cannot express
    if getattr(args, "torus_exponent", None) is not None:
        space = SPACE_ALIASES.get(getattr(args, "space", None) or getattr(args, "base", None))
        if space != "character":
            raise UsageError("--torus-exponent requires the character space")


def run(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    job = JobConfig(args.command, args, getattr(args, "format", "text"),
                    getattr(args, "output", None), getattr(args, "order", DEFAULT_ORDER))
    try:
        _validate(args)
        text = COMMANDS[args.command](job)
    except (UsageError, UnsupportedError) as exc:
        print(f"modhodge {args.command}: usage error: {exc}", file=stderr)
        return 2
    except InvariantError as exc:
        print(f"modhodge {args.command}: invariant failed ({type(exc).__name__}): {exc}", file=stderr)
        return 1
    if job.output:
        with open(job.output, "w") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return 1 if job.failed else 0


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
