"""Command line interface: ``momentcx <command> <config.json> [options]``.

Exit codes: 0 success, 1 validation failure, 2 input error, 3 resource limit.
"""

import argparse
import json
import re
import sys

from . import io
from .equivariant import cell_fingerprint, cone_class, support_class
from .errors import InputError, PreconditionError, ResourceLimitError
from .measures import (MODES, NORMALIZED, AmbiguousClosedOrbit, MomentMeasure,
                       closed_orbit_cell, enumerate_measures, git_measure,
                       is_geometric, parse_rational_vector, u_supports, validate)
from .moment_complex import abstract_complex, build_complex
from .verify import run_all

EXIT_OK, EXIT_INVALID, EXIT_INPUT, EXIT_LIMIT = 0, 1, 2, 3


class Failure(Exception):
    """A command finished with a mathematical failure; carries the payload."""

    def __init__(self, message, payload):
        super().__init__(message)
        self.payload = payload


# -- argument parsing helpers ------------------------------------------------

def parse_index_set(text):
    body = text.strip().strip("{}[]() ")
    if not body:
        raise InputError(f"empty index set {text!r}")
    try:
        return tuple(sorted({int(x) for x in re.split(r"[\s,]+", body) if x}))
    except ValueError:
        raise InputError(f"cannot read {text!r} as a list of component indices")


def parse_cell_list(args):
    """Cells as ``{1} {0,2}``, ``"{1},{0,2}"`` or ``1 0,2``.

    Quote braced cells in the shell: an unquoted ``{0,2}`` is expanded by bash.
    """
    cells = []
    for arg in args:
        if "{" not in arg:
            cells.append(parse_index_set(arg))
            continue
        if re.sub(r"\{[^}]*\}", "", arg).strip(" ,;"):
            raise InputError(f"cannot read cell list {arg!r}")
        cells += [parse_index_set(g) for g in re.findall(r"\{[^}]*\}", arg)]
    return cells


def parse_chi(args):
    parts = [p for p in re.split(r"[\s,()]+", " ".join(args)) if p]
    return parts


def _vector(token):
    token = token.strip()
    if token.startswith("("):
        return tuple(int(x) for x in token.strip("()").split(",") if x.strip())
    return (int(token),)


_VECTOR = r"\([^)]*\)|-?\d+"


def parse_rays(text):
    """Rays as ``{1}`` (rank 1) or ``{(1,0),(0,1)}``."""
    body = text.strip().strip("{}[] ")
    try:
        rays = [_vector(t) for t in re.findall(_VECTOR, body)]
    except ValueError:
        rays = None
    if not rays or re.sub(_VECTOR, "", body).strip(" ,;"):
        raise InputError(f"cannot read rays from {text!r}")
    return rays


def parse_phi(text):
    """Weights with multiplicities as ``{1:1, 2:1}`` or ``{(1,0):1, (0,1):2}``."""
    body = text.strip().strip("{}[] ")
    pattern = rf"({_VECTOR})\s*:\s*(\d+)"
    entries = re.findall(pattern, body)
    if not entries or re.sub(pattern, "", body).strip(" ,;"):
        raise InputError(f"cannot read weights from {text!r}; use chi:mult entries")
    out = {}
    for chi, mult in entries:
        chi = _vector(chi)
        if chi in out:
            raise InputError(f"weight {chi} listed twice; add the multiplicities")
        out[chi] = int(mult)
    return sorted(out.items())


# -- context -----------------------------------------------------------------

def load(args):
    cfg, limit_overrides, (cells, generic) = io.load_config(args.config)
    overrides = dict(limit_overrides)
    if args.limit_cells is not None:
        overrides["max_cells"] = args.limit_cells
    if args.limit_points is not None:
        overrides["max_subdivision_points"] = args.limit_points
    limits = io.limits_from(overrides)
    if cells is None:
        cx = build_complex(cfg, limits)
    else:
        cx = abstract_complex(cfg, cells, generic, limits)
    return cfg, cx, limits


def _cells(cx, ids):
    return [list(cx.cells[i].components) for i in ids]


def _fmt_cell(comps):
    return "{" + ",".join(map(str, comps)) + "}"


def _fmt_cells(cells):
    return " ".join(_fmt_cell(c) for c in cells) or "-"


# -- commands ----------------------------------------------------------------

def cmd_complex(args):
    cfg, cx, _ = load(args)
    payload = {"complex": io.complex_to_dict(cx)}
    lines = ["components:"]
    for i, (chi, m) in enumerate(cfg.components):
        lines.append(f"  {i}: chi = {list(chi)}  mult = {m}")
    lines.append(f"cells: {len(cx.cells)}  (generic {cx.generic_cell})")
    lines.append(f"  {'id':>3}  {'cell':<14}{'dim':>4}  {'faces':<24}subdivisions")
    for i, cell in enumerate(cx.cells):
        nontrivial = sum(not s.is_trivial for s in cx.subdivisions[i])
        lines.append(f"  {i:>3}  {str(cell):<14}{cell.dim:>4}  "
                     f"{_fmt_cells(_cells(cx, cx.faces[i])):<24}{nontrivial}")
    for i, subs in enumerate(cx.subdivisions):
        for s in subs:
            if not s.is_trivial:
                lines.append(f"  split {cx.cells[i]}: maximal {_fmt_cells(_cells(cx, s.maximal))}"
                             f"; internal {_fmt_cells(_cells(cx, s.internal))}")
    return payload, lines, []


def cmd_measures(args):
    _, cx, limits = load(args)
    found = enumerate_measures(cx, args.mode, args.geometric, limits)
    payload = {"measures": io.measures_to_dict(found, args.mode)}
    warnings = []
    if args.mode != NORMALIZED:
        base = enumerate_measures(cx, NORMALIZED, args.geometric, limits)
        if len(base) != len(found):
            warnings.append(f"mode discrepancy: {args.mode} mode accepts {len(found)} "
                            f"measures, normalized mode accepts {len(base)}; only normalized "
                            f"measures are guaranteed to define open sets")
    payload["warnings"] = warnings
    d = payload["measures"]
    lines = [f"mode: {args.mode}  measures: {d['count']}  geometric: {d['geometricCount']}",
             f"  {'id':>3}  {'geo':<4}{'open':<5}{'|U|':>4}  value-1 cells"]
    for rec in d["measures"]:
        lines.append(f"  {rec['id']:>3}  {'yes' if rec['geometric'] else 'no':<4}"
                     f"{'yes' if rec['open'] else 'no':<5}{len(rec['supports']):>4}  "
                     f"{_fmt_cells(rec['cells'])}")
    return payload, lines, warnings


def _select_measure(args, cx, limits):
    if args.measure_id is not None:
        found = enumerate_measures(cx, args.mode, limits=limits)
        if not 0 <= args.measure_id < len(found):
            raise InputError(f"measure id {args.measure_id} out of range "
                             f"(0..{len(found) - 1} in {args.mode} mode)")
        return found[args.measure_id]
    cells = parse_cell_list(args.cells)
    return MomentMeasure.from_cells(cx, cells, args.mode)


def cmd_classify(args):
    _, cx, limits = load(args)
    m = _select_measure(args, cx, limits)
    verdicts = {mode: not validate(m, mode) for mode in MODES}
    payload = {"cells": _cells(cx, m.key), "mode": args.mode, "valid": verdicts,
               "geometric": is_geometric(m)}
    violations = validate(m, args.mode)
    if violations:
        payload["violations"] = [v.message for v in violations]
        raise Failure(f"measure is not valid in {args.mode} mode", payload)
    family = u_supports(m)
    closed, fibers = {}, {}
    for s in family.supports:
        try:
            c = closed_orbit_cell(m, s)
            key = _fmt_cell(cx.cells[c].components)
        except AmbiguousClosedOrbit as exc:
            key = "ambiguous " + " ".join(_fmt_cell(x) for x in exc.candidates)
        closed[_fmt_cell(s)] = key
        fibers.setdefault(key, []).append(list(s))
    payload.update({"supports": [list(s) for s in family.supports], "open": family.is_open,
                    "closedOrbitCell": closed, "fibers": fibers})
    lines = [f"measure: {_fmt_cells(payload['cells'])}",
             "valid: " + "  ".join(f"{k}={'yes' if v else 'no'}" for k, v in verdicts.items()),
             f"geometric: {'yes' if payload['geometric'] else 'no'}",
             f"U supports: {len(family)}  open: {'yes' if family.is_open else 'no'}"]
    for key, members in fibers.items():
        lines.append(f"  fiber over {key}: {_fmt_cells(members)}")
    return payload, lines, []


def cmd_git(args):
    _, cx, limits = load(args)
    chi = parse_rational_vector(parse_chi(args.chi), cx.config.rank)
    chi_text = [io.fraction_str(x) for x in chi]
    try:
        m = git_measure(cx, chi)
    except PreconditionError as exc:
        payload = {"chi": chi_text, "error": str(exc)}
        if exc.cell is not None:
            payload["wall"] = list(exc.cell)
        raise Failure(str(exc), payload)
    valid = not validate(m, NORMALIZED)
    try:
        keys = [x.key for x in enumerate_measures(cx, NORMALIZED, limits=limits)]
        mid = keys.index(m.key) if m.key in keys else None
    except ResourceLimitError:
        mid = None
    payload = {"chi": chi_text, "cells": _cells(cx, m.key), "valid": valid,
               "geometric": is_geometric(m), "id": mid}
    lines = [f"chi: ({', '.join(chi_text)})",
             f"chamber measure: {_fmt_cells(payload['cells'])}",
             f"valid: {'yes' if valid else 'no'}  geometric: "
             f"{'yes' if payload['geometric'] else 'no'}  id: {'-' if mid is None else mid}"]
    if not valid:
        raise Failure("chamber measure failed validation", payload)
    return payload, lines, []


def cmd_class(args):
    if args.cone is not None:
        rays = parse_rays(args.cone)
        if args.phi is not None:
            phi = parse_phi(args.phi)
        elif args.config is not None:
            phi = list(io.load_config(args.config)[0].components)
        else:
            raise InputError("--cone needs --phi or a configuration")
        rank = len(rays[0])
        if any(len(chi) != rank for chi, _ in phi) or any(len(r) != rank for r in rays):
            raise InputError("rays and weights must all have the same length")
        poly = cone_class(rays, phi, rank=rank)
        payload = {"cone": [list(r) for r in rays], "class": str(poly)}
        return payload, [f"class: {poly}"], []
    if args.config is None:
        raise InputError("a configuration is required for --cell and --support")
    _, cx, _ = load(args)
    if args.cell is not None:
        comps = parse_index_set(args.cell)
        cid = cx.cell_id(comps)
        fp = cell_fingerprint(cx, cid)
        payload = {"cell": list(comps)}
    elif args.support is not None:
        support = cx.config.check_support(parse_index_set(args.support))
        fp = support_class(cx, support)
        payload = {"support": list(support),
                   "cell": list(cx.cells[cx.cell_of_support(support)].components)}
    else:
        raise InputError("class needs one of --cell, --support or --cone")
    payload["fingerprint"] = [str(e) for e in fp.entries]
    lines = [f"cell: {_fmt_cell(payload['cell'])}", f"fingerprint: {fp}"]
    return payload, lines, []


def cmd_verify(args):
    _, cx, limits = load(args)
    results = run_all(cx, limits, samples=args.samples, seed=args.seed)
    payload = {"checks": [{"name": r.name, "ok": r.ok, "checked": r.checked,
                           "detail": r.detail, "counterexample": r.counterexample}
                          for r in results]}
    lines = [f"  {'PASS' if r.ok else 'FAIL'}  {r.name} ({r.checked} checked)"
             + ("" if r.ok else ": " + " ".join(x for x in (r.detail, json.dumps(r.counterexample)) if x))
             for r in results]
    if not all(r.ok for r in results):
        raise Failure("verification failed", payload | {"lines": lines})
    return payload, lines, []


COMMANDS = {
    "complex": cmd_complex,
    "measures": cmd_measures,
    "classify": cmd_classify,
    "git": cmd_git,
    "class": cmd_class,
    "verify": cmd_verify,
}


def _global_flags():
    # a fresh parser per use: argparse shares action objects with its children
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "machine"), default=argparse.SUPPRESS)
    common.add_argument("--limit-cells", type=int, default=argparse.SUPPRESS)
    common.add_argument("--limit-points", type=int, default=argparse.SUPPRESS)
    return common


def build_parser():
    parser = argparse.ArgumentParser(
        prog="momentcx", parents=[_global_flags()],
        description="Moment complexes, moment measures and orbit-closure classes "
                    "for torus actions on projective space.")
    parser.set_defaults(format="table", limit_cells=None, limit_points=None)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("complex", parents=[_global_flags()], help="list cells, faces and subdivisions")
    p.add_argument("config")

    p = sub.add_parser("measures", parents=[_global_flags()], help="enumerate moment measures")
    p.add_argument("config")
    p.add_argument("--mode", choices=MODES, default=NORMALIZED)
    p.add_argument("--geometric", action="store_true", help="only geometric measures")

    p = sub.add_parser("classify", parents=[_global_flags()], help="validate a measure and describe U")
    p.add_argument("config")
    p.add_argument("--mode", choices=MODES, default=NORMALIZED)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--measure-id", type=int)
    g.add_argument("--cells", nargs="+", metavar="CELL")

    p = sub.add_parser("git", parents=[_global_flags()], help="chamber measure of a character")
    p.add_argument("config")
    p.add_argument("--chi", nargs="+", required=True)

    p = sub.add_parser("class", parents=[_global_flags()], help="cycle classes and fingerprints")
    p.add_argument("config", nargs="?")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--cell")
    g.add_argument("--support")
    g.add_argument("--cone")
    p.add_argument("--phi")

    p = sub.add_parser("verify", parents=[_global_flags()], help="run the invariant suite")
    p.add_argument("config")
    p.add_argument("--samples", type=int, default=20, help="characters sampled for GIT checks")
    p.add_argument("--seed", type=int, default=0)
    return parser


def _emit(args, argv, cfg_digest, payload, lines, warnings, status, error=None):
    if args.format == "machine":
        report = {"command": argv, "digest": cfg_digest, "payload": payload, "status": status}
        if error:
            report["error"] = error
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        if cfg_digest and lines:
            print(f"# {args.command}  config {cfg_digest}")
        for line in lines:
            print(line)
    for w in warnings:
        print(f"warning: {w}", file=sys.stderr)
    if error:
        print(f"error: {error}", file=sys.stderr)


def main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    cfg_digest = None
    try:
        if getattr(args, "config", None) is not None:
            cfg_digest = io.digest(io.load_config(args.config)[0])
        payload, lines, warnings = COMMANDS[args.command](args)
    except Failure as exc:
        lines = exc.payload.pop("lines", [])
        if "violations" in exc.payload:
            lines = lines + [f"  {v}" for v in exc.payload["violations"]]
        _emit(args, argv, cfg_digest, exc.payload, lines, [], EXIT_INVALID, str(exc))
        return EXIT_INVALID
    except PreconditionError as exc:
        _emit(args, argv, cfg_digest, {}, [], [], EXIT_INVALID, str(exc))
        return EXIT_INVALID
    except InputError as exc:
        _emit(args, argv, cfg_digest, {}, [], [], EXIT_INPUT, str(exc))
        return EXIT_INPUT
    except ResourceLimitError as exc:
        _emit(args, argv, cfg_digest, {}, [], [], EXIT_LIMIT, str(exc))
        return EXIT_LIMIT
    _emit(args, argv, cfg_digest, payload, lines, warnings, EXIT_OK)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
