"""Command-line surface: solve / solve-q / coxeter / delta / rigid / oracle /
tables / check, with JSON and CSV output.

Exit codes: 0 decided, 2 invalid input, 3 needs Hasse data, 4 oracle
non-certified.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .coxeter import UnsupportedSlopeError, coxeter_candidates, coxeter_solve, enumerate_d_allowable
from .orbits import (
    AdjointOrbit,
    Block,
    HasseDiagram,
    NilpotentOrbit,
    UnsupportedComparisonError,
)
from .partitions import partition
from .rigidity import rigidity_report, scan_rigid
from .root_data import LieType, lie_type, parse_slope
from .solver import ds_solve, ds_solve_q
from . import tables as table_mod
from .skeleton import minimal_jordan_type_report


class CliError(Exception):
    def __init__(self, message: str, code: int = 2):
        super().__init__(message)
        self.code = code


def _parse_type(args) -> LieType:
    try:
        return lie_type(args.type, getattr(args, "rank", None))
    except ValueError as exc:
        raise CliError(str(exc))


def _parse_orbit(t: LieType, text: str) -> NilpotentOrbit:
    text = text.strip()
    if text.startswith("["):
        return NilpotentOrbit(t, partition(json.loads(text)))
    if t.is_exceptional:
        return NilpotentOrbit(t, label=text)
    raise CliError(f"classical orbits are given as JSON partitions, got {text!r}")


def _orbit_from_json(t: LieType, data: dict):
    kind = data.get("kind", "nilpotent")
    if kind == "nilpotent":
        if "label" in data:
            return NilpotentOrbit(t, label=data["label"])
        return NilpotentOrbit(
            t,
            partition(data["partition"]),
            very_even_label=data.get("very_even_label"),
        )
    if kind == "adjoint":
        blocks = tuple(
            Block(_tag(b["eig"]), int(b["mult"]), partition(b["partition"]))
            for b in data["blocks"]
        )
        return AdjointOrbit(t, blocks, partition(data.get("zero_block", [])))
    raise CliError(f"unknown orbit kind {kind!r}")


def _tag(text):
    try:
        return Fraction(str(text))
    except (ValueError, ZeroDivisionError):
        return str(text)


def _load_orbit(t: LieType, args):
    if getattr(args, "orbit_file", None):
        with open(args.orbit_file, "r", encoding="utf-8") as fh:
            return _orbit_from_json(t, json.load(fh))
    if getattr(args, "orbit", None):
        text = args.orbit.strip()
        if text.startswith("{"):
            return _orbit_from_json(t, json.loads(text))
        return _parse_orbit(t, text)
    raise CliError("an orbit is required (--orbit or --orbit-file)")


def _load_hasse(args) -> HasseDiagram | None:
    path = getattr(args, "hasse_file", None)
    if not path:
        return None
    with open(path, "r", encoding="utf-8") as fh:
        return HasseDiagram.from_json(json.load(fh))


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def cmd_solve(args) -> int:
    t = _parse_type(args)
    s = parse_slope(args.slope)
    orbit = _load_orbit(t, args)
    ans = ds_solve(t, s, orbit, hasse=_load_hasse(args))
    _emit(ans.to_json())
    return 3 if ans.affirmative == "unknown-needs-hasse" else 0


def cmd_solve_q(args) -> int:
    t = _parse_type(args)
    s = parse_slope(args.slope)
    orbit = _load_orbit(t, args)
    if not isinstance(orbit, AdjointOrbit):
        raise CliError("solve-q expects an adjoint orbit (kind=adjoint)")
    ans = ds_solve_q(t, s, orbit)
    _emit(ans.to_json())
    return 0


def cmd_coxeter(args) -> int:
    t = _parse_type(args)
    orbit = coxeter_solve(t, args.d)
    out = {"o_nu": orbit.to_json()}
    if args.show_subsets:
        out["allowable"] = [
            {
                "J": sorted(a.J),
                "witness": {str(k): v for k, v in sorted(a.witness.items())},
                "minimal": a.is_minimal,
            }
            for a in enumerate_d_allowable(t, args.d)
        ]
        out["candidates"] = [c.to_json() for c in coxeter_candidates(t, args.d)]
    _emit(out)
    return 0


def cmd_delta(args) -> int:
    t = _parse_type(args)
    s = parse_slope(args.slope)
    orbit = _load_orbit(t, args)
    rep = rigidity_report(t, s, orbit)
    _emit({"delta": str(rep.delta), "rigid": rep.rigid})
    return 0


def cmd_rigid(args) -> int:
    rows = scan_rigid(args.family, args.max_rank)
    if args.format == "json":
        _emit(rows)
    else:
        sys.stdout.write(table_mod.t_cl_ell_rig(args.family, args.max_rank))
    return 0


def cmd_oracle(args) -> int:
    t = _parse_type(args)
    s = parse_slope(args.slope)
    p, certified = minimal_jordan_type_report(t, s, search_budget=args.budget, seed=args.seed)
    _emit({"jordan_type": list(p), "certified": certified})
    return 0 if certified else 4


def cmd_tables(args) -> int:
    kw = {}
    if args.name == "t_clq":
        if not (args.rank and args.slope and args.mults is not None):
            raise CliError("t_clq needs --rank, --slope and --mults")
        kw = {
            "rank": args.rank,
            "slope": parse_slope(args.slope),
            "mults": tuple(int(x) for x in args.mults.split(",") if x),
            "zero_mult": args.zero_mult,
        }
    sys.stdout.write(table_mod.generate(args.name, args.family, args.max_rank, **kw))
    return 0


def cmd_check(args) -> int:
    from .checks import run_all

    report = run_all(max_rank=args.max_rank)
    _emit(report)
    return 0 if all(v == "ok" for v in report.values()) else 2


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ds", description=__doc__)
    sub = ap.add_subparsers(dest="verb", required=True)

    def add_type(p):
        p.add_argument("--type", required=True, help="A/B/C/D/G2/F4/E6/E7/E8")
        p.add_argument("--rank", type=int, help="rank (classical families)")

    p = sub.add_parser("solve", help="existence verdict for an orbit and slope")
    add_type(p)
    p.add_argument("--slope", required=True)
    p.add_argument("--orbit")
    p.add_argument("--orbit-file")
    p.add_argument("--hasse-file")
    p.set_defaults(fn=cmd_solve)

    p = sub.add_parser("solve-q", help="verdict via the fixed-eigenvalue candidates")
    add_type(p)
    p.add_argument("--slope", required=True)
    p.add_argument("--orbit")
    p.add_argument("--orbit-file")
    p.set_defaults(fn=cmd_solve_q)

    p = sub.add_parser("coxeter", help="threshold orbit at slope d/h via allowable subsets")
    add_type(p)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--show-subsets", action="store_true")
    p.set_defaults(fn=cmd_coxeter)

    p = sub.add_parser("delta", help="index of rigidity for an orbit")
    add_type(p)
    p.add_argument("--slope", required=True)
    p.add_argument("--orbit")
    p.add_argument("--orbit-file")
    p.set_defaults(fn=cmd_delta)

    p = sub.add_parser("rigid", help="rigid classification scan")
    p.add_argument("--family", required=True)
    p.add_argument("--max-rank", type=int, default=10)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(fn=cmd_rigid)

    p = sub.add_parser("oracle", help="minimal Jordan type from the lattice models")
    add_type(p)
    p.add_argument("--slope", required=True)
    p.add_argument("--budget", type=int, default=10000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_oracle)

    p = sub.add_parser("tables", help="regenerate a table as CSV")
    p.add_argument("--name", required=True, choices=table_mod.TABLE_NAMES)
    p.add_argument("--family")
    p.add_argument("--max-rank", type=int, default=6)
    p.add_argument("--rank", type=int)
    p.add_argument("--slope")
    p.add_argument("--mults", help="comma-separated nonzero multiplicities")
    p.add_argument("--zero-mult", type=int, default=0)
    p.set_defaults(fn=cmd_tables)

    p = sub.add_parser("check", help="cross-validation suite")
    p.add_argument("--max-rank", type=int, default=5)
    p.set_defaults(fn=cmd_check)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except CliError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return exc.code
    except UnsupportedSlopeError as exc:
        sys.stderr.write(f"unsupported slope: {exc}\n")
        return 2
    except UnsupportedComparisonError as exc:
        sys.stderr.write(f"needs hasse data: {exc}\n")
        return 3
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"invalid input: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
