"""Command line front end.

Reads a JSON module description and prints a deterministic JSON report.
Node numbers on the command line and in documents are 1-based.

Exit status: 0 success, 1 invalid input, 2 enumeration cap hit,
3 internal cross-check failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .errors import HwfaceError, InputError, InvariantViolation
from .facecalc import (
    all_subsets,
    f_polynomial,
    face_report,
    fiber_interval,
    halfspace_representation,
)
from .modulespec import PRESETS, CoordClass, ModuleSpec, coord, make_spec, preset
from .oracle import cross_validate
from .rootsystem import RootSystem, Weight, system

DEFAULT_MAX_RANK = 4


# -- spec documents ---------------------------------------------------------

def _nodes_out(s) -> list[int]:
    return [i + 1 for i in sorted(s)]


def _nodes_in(rs: RootSystem, items) -> frozenset[int]:
    if not isinstance(items, list):
        raise InputError(f"expected a list of node numbers, got {items!r}")
    out = set()
    for x in items:
        if isinstance(x, bool) or not isinstance(x, int) or not 1 <= x <= rs.rank:
            raise InputError(f"node {x!r} is not in 1..{rs.rank}")
        out.add(x - 1)
    return frozenset(out)


def _coord_in(item, node: int) -> CoordClass:
    try:
        if isinstance(item, dict):
            extra = set(item) - {"class", "value"}
            if extra or "class" not in item:
                raise InputError(f"coordinate object needs 'class' and optional 'value', got keys {sorted(item)}")
            return coord(item["class"], item.get("value"))
        if isinstance(item, (str, int)) and not isinstance(item, bool):
            from .modulespec import classify_value

            return classify_value(item)
    except InputError as e:
        raise InputError(f"lambda node {node + 1}: {e}") from None
    raise InputError(f"lambda node {node + 1}: expected a rational string or class object, got {item!r}")


def parse_spec(doc: dict) -> ModuleSpec:
    """Turn a spec document into a validated :class:`ModuleSpec`."""
    if not isinstance(doc, dict):
        raise InputError("spec document must be a JSON object")
    unknown = set(doc) - {"algebra", "lambda", "integrable", "polyhedralHull"}
    if unknown:
        raise InputError(f"unknown spec keys: {sorted(unknown)}")
    for key in ("algebra", "lambda", "integrable"):
        if key not in doc:
            raise InputError(f"spec is missing {key!r}")
    rs = system(doc["algebra"])
    lam = doc["lambda"]
    if not isinstance(lam, list) or len(lam) != rs.rank:
        raise InputError(f"'lambda' must be a list of {rs.rank} entries")
    coords = [_coord_in(x, i) for i, x in enumerate(lam)]
    hull = doc.get("polyhedralHull")
    if hull is not None and not isinstance(hull, bool):
        raise InputError("'polyhedralHull' must be a boolean")
    integ = doc["integrable"]
    if isinstance(integ, str) or isinstance(integ, dict):
        if isinstance(integ, dict):
            if list(integ) != ["parabolicVerma"]:
                raise InputError("preset object must be {\"parabolicVerma\": [nodes]}")
            spec = preset("parabolicVerma", rs, coords, _nodes_in(rs, integ["parabolicVerma"]))
        else:
            spec = preset(integ, rs, coords)
        if hull is not None:
            spec = ModuleSpec(rs, spec.coords, spec.integrable, hull)
        return spec
    return make_spec(rs, coords, _nodes_in(rs, integ), hull)


def _frac(x: Fraction) -> str:
    return str(Fraction(x))


def _weight_out(w: Weight | None):
    return None if w is None else [_frac(c) for c in w]


def echo_spec(spec: ModuleSpec, algebra) -> dict:
    """Canonical document that parses back to ``spec``."""
    return {
        "algebra": algebra,
        "lambda": [c.to_json() for c in spec.coords],
        "integrable": _nodes_out(spec.integrable),
        "polyhedralHull": spec.polyhedral_hull,
    }


def _parse_subset(text: str | None, rs: RootSystem) -> frozenset[int]:
    if text is None:
        raise InputError("--subset is required for this command")
    text = text.strip().strip("{}[]")
    if not text or text.lower() in ("none", "empty"):
        return frozenset()
    try:
        items = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise InputError(f"cannot parse subset {text!r}") from None
    return _nodes_in(rs, items)


# -- commands ---------------------------------------------------------------

def _cmd_analyze(spec, args):
    J = _parse_subset(args.subset, spec.system)
    r = face_report(spec, J)
    p = r.partition
    return {
        "subset": _nodes_out(J),
        "partition": {f"J{k + 1}": _nodes_out(b) for k, b in enumerate(p.blocks())},
        "jmin": _nodes_out(r.jmin),
        "jmax": _nodes_out(r.jmax),
        "fiber": {"lo": _nodes_out(r.fiber[0]), "hi": _nodes_out(r.fiber[1])},
        "dimension": r.dimension,
        "affineHullBasis": _nodes_out(r.affine_hull_basis),
        "stabilizer": {"jmin": _nodes_out(r.stabilizer[0]), "commuting": _nodes_out(r.stabilizer[1])},
        "vertexCount": r.vertex_count,
        "isFiniteFace": r.is_finite_face,
        "coneSupport": _nodes_out(r.cone_support),
        "barycenter": _weight_out(r.barycenter),
    }


def _cmd_fpoly(spec, args):
    f = f_polynomial(spec)
    return {
        "fPolynomial": str(f),
        "coefficients": list(f.coeffs),
        "unboundedCoefficients": list(f.unbounded),
    }


def _cmd_halfspaces(spec, args):
    rs = spec.system
    lam = spec.weight
    out = []
    for h in halfspace_representation(spec, minimal=args.minimal):
        item = {
            "node": h.node + 1,
            "word": [i + 1 for i in h.word],
            "normal": _weight_out(h.normal),
        }
        if lam is not None:
            item["rhs"] = _frac(h.rhs(rs, lam))
        out.append(item)
    return {"minimal": bool(args.minimal), "count": len(out), "halfspaces": out}


def _cmd_fibers(spec, args):
    rs = spec.system
    if not args.all:
        lo, hi = fiber_interval(spec, _parse_subset(args.subset, rs))
        return {"lo": _nodes_out(lo), "hi": _nodes_out(hi), "multiplicity": 2 ** len(hi - lo)}
    fibers = {}
    for J in all_subsets(rs.nodes):
        lo, hi = fiber_interval(spec, J)
        fibers.setdefault(lo, hi)
    total = sum(2 ** len(hi - lo) for lo, hi in fibers.items())
    if total != 2**rs.rank:
        raise InvariantViolation(f"fibers cover {total} subsets, expected {2 ** rs.rank}")
    rows = [
        {"lo": _nodes_out(lo), "hi": _nodes_out(hi), "multiplicity": 2 ** len(hi - lo)}
        for lo, hi in sorted(fibers.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))
    ]
    return {"count": len(rows), "fibers": rows}


def _cmd_verify(spec, args):
    if spec.system.rank > args.max_rank:
        raise InputError(f"rank {spec.system.rank} exceeds --max-rank {args.max_rank}")
    rep = cross_validate(spec, args.depth)
    def nodes(entry):
        return {**entry, "J": [i + 1 for i in entry["J"]], "Jprime": [i + 1 for i in entry["Jprime"]]}
    return {
        "depth": rep.depth,
        "exact": rep.exact,
        "summary": rep.summary(),
        "ok": rep.ok,
        "pairs": [nodes(p) for p in rep.pairs],
    }


COMMANDS = {
    "analyze": _cmd_analyze,
    "fpoly": _cmd_fpoly,
    "halfspaces": _cmd_halfspaces,
    "fibers": _cmd_fibers,
    "verify": _cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hwface", description="Face calculus of highest weight modules.")
    parser.add_argument("--version", action="version", version=f"hwface {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--input", "-i", required=True, help="spec JSON file, or - for stdin")
        fmt = p.add_mutually_exclusive_group()
        fmt.add_argument("--json", dest="pretty", action="store_false", help="compact JSON (default)")
        fmt.add_argument("--pretty", dest="pretty", action="store_true", help="indented JSON")
        if name in ("analyze", "fibers"):
            p.add_argument("--subset", help='1-based nodes, e.g. "1,2"; empty string for the empty set')
        if name == "fibers":
            p.add_argument("--all", action="store_true", help="list every fiber")
        if name == "halfspaces":
            p.add_argument("--minimal", action="store_true", help="irredundant representation")
        if name == "verify":
            p.add_argument("--depth", type=int, default=None, help="height bound for infinite weight sets")
            p.add_argument("--max-rank", type=int, default=DEFAULT_MAX_RANK)
    return parser


def _load(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None
    except json.JSONDecodeError as e:
        raise InputError(f"{path} is not valid JSON: {e}") from None


def run(argv=None) -> tuple[int, str]:
    """Run the CLI and return ``(exit status, output text)``."""
    args = build_parser().parse_args(argv)
    try:
        doc = _load(args.input)
        spec = parse_spec(doc)
        result = COMMANDS[args.command](spec, args)
        report = {
            "command": args.command,
            "spec": echo_spec(spec, doc["algebra"]),
            "result": result,
            "toolVersion": __version__,
        }
        text = json.dumps(report, sort_keys=True, indent=2 if args.pretty else None)
        status = 0
        if args.command == "verify" and result["summary"]["disagree"]:
            status = InvariantViolation.exit_code
        return status, text
    except HwfaceError as e:
        payload = {"error": type(e).__name__, "message": str(e)}
        diags = getattr(e, "diagnostics", None)
        if diags:
            payload["diagnostics"] = [
                {"node": None if n is None else n + 1, "message": m} for n, m in diags
            ]
        return e.exit_code, json.dumps(payload, sort_keys=True)


def main(argv=None) -> int:
    status, text = run(argv)
    stream = sys.stdout if status == 0 else sys.stderr
    print(text, file=stream)
    return status


if __name__ == "__main__":
    sys.exit(main())
