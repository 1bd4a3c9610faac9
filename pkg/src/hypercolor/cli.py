"""Command-line front end: construct | verify | color | bounds.

Exit codes: 0 success or valid, 1 invalid or refuted, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__
from .bounds import BoundError, bound_report, bounds_table, table_csv, QUANTITIES
from .chromatic import (
    ColoringError,
    ResampleBudgetExhausted,
    is_valid_coloring,
    moser_tardos_weak_coloring,
    strong_chromatic_number,
    weak_chromatic_number,
)
from .constructions import FAMILIES, ConstructionError
from .geometry import EmbeddingCoordinates, GeometryError, verify_embedding
from .hypercore import HypergraphError, deserialize, serialize
from .momentcurve import MomentOrder, certify_order, realize_on_curve

DEFAULT_SEED = 0


class UsageError(Exception):
    pass


@dataclass
class RunManifest:
    command: str
    parameters: dict
    seed: int | None = None
    version: str = __version__
    inputs: dict = field(default_factory=dict)
    outputs: dict = field(default_factory=dict)
    wall_time: float = 0.0

    def to_document(self) -> dict:
        return {
            "command": self.command, "parameters": self.parameters, "seed": self.seed,
            "version": self.version, "inputs": self.inputs, "outputs": self.outputs,
            "wall_time": round(self.wall_time, 6),
        }


def digest(path: Path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def _dump(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _edge_doc(pairs):
    return [[list(e), list(f)] for e, f in pairs]


# construct ------------------------------------------------------------------

def _family_args(args) -> dict:
    needs = {
        "complete": ("n", "k"), "F": ("m",), "Fprime": ("m",), "sqrt": ("m",), "H": ("m",), "Hd": ("m", "d"),
    }[args.family]
    params = {}
    for name in needs:
        val = getattr(args, name)
        if val is None:
            raise UsageError(f"family {args.family} needs --{name}")
        params[name] = val
    return params


def cmd_construct(args) -> int:
    t0 = time.monotonic()
    params = _family_args(args)
    try:
        fam = FAMILIES[args.family](**params)
    except ConstructionError as exc:
        raise UsageError(str(exc)) from exc
    out = Path(args.out or f"{args.family}_" + "_".join(f"{k}{v}" for k, v in params.items()))
    out.mkdir(parents=True, exist_ok=True)
    files = {
        "hypergraph.json": serialize(fam.hypergraph),
        "certificate.json": _dump(fam.certificate.to_document()),
        "meta.json": _dump(fam.meta),
    }
    for name, text in files.items():
        (out / name).write_text(text)
    manifest = RunManifest("construct", {"family": args.family, **params})
    manifest.outputs = {name: digest(out / name) for name in files}
    manifest.wall_time = time.monotonic() - t0
    (out / "manifest.json").write_text(_dump(manifest.to_document()))
    print(_dump({"bundle": str(out), "vertices": fam.hypergraph.n, "edges": len(fam.hypergraph.edges)}), end="")
    return 0


# verify ---------------------------------------------------------------------

def _load_json(path: Path):
    try:
        return json.loads(Path(path).read_text())
    except FileNotFoundError as exc:
        raise UsageError(f"no such file: {path}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}") from exc


def _resolve_inputs(target: Path, cert: Path | None) -> tuple[Path, Path | None, dict]:
    target = Path(target)
    if target.is_dir():
        meta = _load_json(target / "meta.json") if (target / "meta.json").exists() else {}
        return target / "hypergraph.json", cert or target / "certificate.json", meta
    return target, cert, {}


def _load_hypergraph(path: Path):
    try:
        return deserialize(Path(path).read_text())
    except FileNotFoundError as exc:
        raise UsageError(f"no such file: {path}") from exc


def cmd_verify(args) -> int:
    t0 = time.monotonic()
    hg_path, cert_path, meta = _resolve_inputs(args.hypergraph, args.certificate)
    if cert_path is None:
        raise UsageError("a certificate file is required")
    h = _load_hypergraph(hg_path)
    doc = _load_json(cert_path)
    if not isinstance(doc, dict):
        raise UsageError("certificate must be a JSON object")
    is_order = "positions" in doc
    if args.mode in ("order", "both") and not is_order:
        raise UsageError(f"mode {args.mode!r} needs an order certificate with 'positions'")
    escalate = args.escalate if args.escalate is not None else bool(meta.get("escalate_default", False))
    result = {"mode": args.mode, "valid": True, "violations": [], "checked_pairs": 0, "checks": {}}
    if is_order:
        order = MomentOrder.from_document(doc)
        missing = [v for v in h.vertices if v not in order.positions]
        if missing:
            raise UsageError(f"certificate misses vertices {missing[:5]}")
        coords = realize_on_curve(order)
    else:
        coords = EmbeddingCoordinates.from_document(doc)
        missing = [v for v in h.vertices if v not in coords.points]
        if missing:
            raise UsageError(f"certificate misses vertices {missing[:5]}")
    if args.mode in ("order", "both"):
        cert = certify_order(h, order, escalate=escalate, all_violations=args.all)
        result["checks"]["order"] = {**cert.to_document(), "escalated_pairs": cert.escalated_pairs,
                                     "special_pairs": cert.special_pairs}
    if args.mode in ("geometry", "both"):
        verdict = verify_embedding(h, coords, workers=args.workers, all_violations=args.all)
        gdoc = {"valid": verdict.valid, "violations": _edge_doc(verdict.violations),
                "checked_pairs": verdict.checked_pairs}
        if verdict.bad_edge is not None:
            gdoc["bad_edge"] = list(verdict.bad_edge)
        result["checks"]["geometry"] = gdoc
    for check in result["checks"].values():
        result["valid"] = result["valid"] and check["valid"]
        result["checked_pairs"] += check["checked_pairs"]
        result["violations"].extend(v for v in check["violations"] if v not in result["violations"])
    print(_dump(result), end="")
    _write_manifest(args, "verify", {"mode": args.mode, "escalate": escalate}, None, [hg_path, cert_path], [], t0)
    return 0 if result["valid"] else 1


# color ----------------------------------------------------------------------

def cmd_color(args) -> int:
    t0 = time.monotonic()
    hg_path, _, _ = _resolve_inputs(args.hypergraph, None)
    h = _load_hypergraph(hg_path)
    if args.mt is not None:
        if args.kind != "weak":
            raise UsageError("--mt produces weak colorings only")
        try:
            col = moser_tardos_weak_coloring(h, args.mt, args.seed, budget=args.budget)
        except ColoringError as exc:
            raise UsageError(str(exc)) from exc
        except ResampleBudgetExhausted as exc:
            print(_dump({"kind": "weak", "c": args.mt, "seed": args.seed, "error": str(exc)}), end="")
            return 1
        out = {"kind": "weak", "method": "moser-tardos", "c": args.mt, "seed": args.seed,
               "valid": is_valid_coloring(h, col), "coloring": col.to_document()}
        code = 0 if out["valid"] else 1
        seed = args.seed
    else:
        solve = weak_chromatic_number if args.kind == "weak" else strong_chromatic_number
        try:
            res = solve(h, deadline=args.deadline)
        except ColoringError as exc:
            raise UsageError(str(exc)) from exc
        out = {"kind": args.kind, "method": "exact", "value": res.value, "exact": res.exact,
               "lower": res.lower, "upper": res.upper, "refuted": res.refuted, "nodes": res.nodes,
               "coloring": res.witness.to_document()}
        code = 0
        seed = None
    outputs = []
    if args.out:
        Path(args.out).write_text(_dump(out["coloring"]))
        outputs.append(Path(args.out))
    print(_dump(out), end="")
    params = {"kind": args.kind, "mt": args.mt, "budget": args.budget, "deadline": args.deadline}
    _write_manifest(args, "color", params, seed, [hg_path], outputs, t0)
    return code


# bounds ---------------------------------------------------------------------

def cmd_bounds(args) -> int:
    t0 = time.monotonic()
    if args.n is None:
        raise UsageError("--n is required")
    if args.table:
        d_max = args.d if args.d is not None else 8
        k_max = args.k if args.k is not None else 7
        print(table_csv(bounds_table(d_max, k_max, args.n)), end="")
    else:
        if args.d is None or args.k is None:
            raise UsageError("--d and --k are required without --table")
        try:
            report = bound_report(args.d, args.k, args.n).to_document()
        except BoundError:
            report = {"d": args.d, "k": args.k, "n": args.n, "regime": "n/a"}
        for name, fn in QUANTITIES.items():
            cell = fn(args.d, args.k, args.n)
            report[name] = {"value": "n/a" if cell.value is None else cell.value,
                            "asymptotic": cell.asymptotic, "provenance": cell.provenance}
        print(_dump(report), end="")
    _write_manifest(args, "bounds", {"d": args.d, "k": args.k, "n": args.n, "table": args.table}, None, [], [], t0)
    return 0


def _write_manifest(args, command, params, seed, inputs, outputs, t0) -> None:
    if not getattr(args, "manifest", None):
        return
    m = RunManifest(command, params, seed)
    m.inputs = {str(p): digest(p) for p in inputs}
    m.outputs = {str(p): digest(p) for p in outputs}
    m.wall_time = time.monotonic() - t0
    Path(args.manifest).write_text(_dump(m.to_document()))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hypercolor", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="generate a family bundle")
    c.add_argument("family", choices=sorted(FAMILIES))
    for name in ("m", "n", "k", "d"):
        c.add_argument(f"--{name}", type=int)
    c.add_argument("--out", help="bundle directory")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="check an embedding certificate")
    v.add_argument("hypergraph", type=Path, help="hypergraph.json or a bundle directory")
    v.add_argument("certificate", type=Path, nargs="?")
    v.add_argument("--mode", choices=("order", "geometry", "both"), default="both")
    v.add_argument("--escalate", dest="escalate", action="store_true", default=None,
                   help="settle inconclusive order patterns with the exact geometric check")
    v.add_argument("--no-escalate", dest="escalate", action="store_false")
    v.add_argument("--all", action="store_true", help="report every violation, not just the first")
    v.add_argument("--workers", type=int, default=None, help="process count (default HYPERCOLOR_THREADS or 1)")
    v.add_argument("--manifest", type=Path)
    v.set_defaults(func=cmd_verify)

    k = sub.add_parser("color", help="exact or Moser-Tardos coloring")
    k.add_argument("hypergraph", type=Path)
    k.add_argument("--kind", choices=("weak", "strong"), default="weak")
    mode = k.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", help="exact chromatic number (default)")
    mode.add_argument("--mt", type=int, metavar="C", help="Moser-Tardos with C colors")
    k.add_argument("--seed", type=int, default=DEFAULT_SEED)
    k.add_argument("--budget", type=int, default=10**6, help="maximum number of resamples")
    k.add_argument("--deadline", type=float, help="seconds before returning an interval")
    k.add_argument("--out", type=Path, help="write the coloring document here")
    k.add_argument("--manifest", type=Path)
    k.set_defaults(func=cmd_color)

    b = sub.add_parser("bounds", help="evaluate bound formulas")
    b.add_argument("--d", type=int)
    b.add_argument("--k", type=int)
    b.add_argument("--n", type=int)
    b.add_argument("--table", action="store_true", help="CSV grid for 1..d by 2..k (defaults 8 and 7)")
    b.add_argument("--manifest", type=Path)
    b.set_defaults(func=cmd_bounds)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, HypergraphError, GeometryError, ValueError) as exc:
        print(f"hypercolor: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
