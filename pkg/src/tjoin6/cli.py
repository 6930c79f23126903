"""Command-line workbench.

Every subcommand prints one machine-readable JSON document on stdout
(``--format text`` renders the same document as indented key/value lines);
diagnostics go to stderr.  ``audit`` exits 0 on a consistent verdict, 2 on
an anomaly, and 1 on input errors, like every other subcommand.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import json
import pathlib
import sys

from . import coloring as coloring_mod
from . import cuts as cuts_mod
from . import discharging
from . import ecoloring
from . import reductions
from . import workbench
from .plane_graph import GraphError, classify, parse_plane_graph


def _render_text(obj, indent=0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.extend(_render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {json.dumps(v)}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)):
                lines.append(f"{pad}-")
                lines.extend(_render_text(v, indent + 1))
            else:
                lines.append(f"{pad}- {json.dumps(v)}")
    else:
        lines.append(f"{pad}{json.dumps(obj)}")
    return lines


def _emit(args, obj):
    if args.format == "json":
        print(json.dumps(obj, indent=2, sort_keys=True))
    else:
        print("\n".join(_render_text(obj)))


def _load(path: str):
    text = pathlib.Path(path).read_text()
    return parse_plane_graph(text)


def _coloring_json(col: dict[int, int]) -> dict:
    return {str(e): coloring_mod.color_name(c) for e, c in sorted(col.items())}


def cmd_generate(args) -> int:
    params = args.params if args.params else None
    g = workbench.generate(args.name, params)
    if args.format == "json":
        sys.stdout.write(g.to_json())
    else:
        sys.stdout.write(g.to_text())
    return 0


def cmd_analyze(args) -> int:
    g = _load(args.file)
    faces = [
        {"id": f.id, "degree": f.degree, "darts": list(f.darts)}
        for f in g.faces()
    ]
    multis = [
        {
            "id": m.id,
            "endpoints": list(m.endpoints),
            "order": m.order,
            "edges": list(m.edge_ids),
            "cyclic": m.cyclic,
        }
        for m in g.multigons()
    ]
    obj = {
        "vertices": g.n,
        "edges": len(g.edges),
        "faces": faces,
        "multigons": multis,
        "six_regular": g.is_regular(6),
    }
    if not g.has_cyclic_multigon():
        cls = classify(g)
        obj["classification"] = {
            "bigness": {str(f): k for f, k in sorted(cls.bigness.items())},
            "dangerous_faces": sorted(cls.dangerous_faces),
            "dangerous_multigons": sorted(cls.dangerous_multigons),
        }
    else:
        obj["classification"] = None
        print("note: cyclic multigon; classification skipped", file=sys.stderr)
    _emit(args, obj)
    return 0


def cmd_cuts(args) -> int:
    g = _load(args.file)
    report = cuts_mod.min_odd_cut(g, args.cut_cap)
    obj = report.to_json()
    if args.max_size is not None:
        listed = [
            c.to_json()
            for c in cuts_mod.odd_cut_sides(g, args.cut_cap)
            if c.size <= args.max_size and not (args.nontrivial and c.trivial)
        ]
        obj["odd_cuts"] = sorted(listed, key=lambda c: (c["size"], c["side"]))
    _emit(args, obj)
    return 0


def _solve(g, args):
    if getattr(args, "exhaustive", False):
        col = workbench.oracle_coloring(g)
        return coloring_mod.ColoringResult(col, True, 0)
    budget = getattr(args, "budget", coloring_mod.DEFAULT_NODE_BUDGET)
    return coloring_mod.find_six_edge_coloring(g, budget=budget, seed=args.seed)


def cmd_color(args) -> int:
    g = _load(args.file)
    result = _solve(g, args)
    obj = {
        "found": result.found,
        "exhaustive": result.exhaustive,
        "coloring": _coloring_json(result.coloring) if result.found else None,
    }
    _emit(args, obj)
    return 0


def cmd_pack(args) -> int:
    g = _load(args.file)
    result = _solve(g, args)
    if not result.found:
        print("no coloring found; cannot pack", file=sys.stderr)
        return 1
    packing = coloring_mod.packing_from_coloring(g, result.coloring)
    reason = coloring_mod.verify_packing(g, packing.terminals, packing)
    if reason is not None:
        raise coloring_mod.ColoringError(reason)
    _emit(args, {"terminals": sorted(packing.terminals), "packing": packing.to_json()})
    return 0


def cmd_ecolor(args) -> int:
    g = _load(args.file)
    result = ecoloring.find_e_coloring(g, args.edge)
    obj = {
        "found": result.found,
        "exhaustive": result.exhaustive,
        "ecoloring": result.ecoloring.to_json() if result.found else None,
    }
    if args.canonicalize:
        if not result.found:
            print("no e-coloring found; cannot canonicalize", file=sys.stderr)
            return 1
        canon = ecoloring.canonicalize_trigon(g, result.ecoloring)
        obj["canonical"] = {
            "status": canon.status,
            "moves": canon.moves,
            "ecoloring": canon.ecoloring.to_json() if canon.ecoloring else None,
            "coloring": _coloring_json(canon.coloring) if canon.coloring else None,
        }
    _emit(args, obj)
    return 0


def cmd_mate(args) -> int:
    g = _load(args.file)
    result = ecoloring.find_e_coloring(g, args.edge)
    if not result.found:
        print("no e-coloring found; cannot search for a mate", file=sys.stderr)
        return 1
    c = coloring_mod.color_from_name(args.color)
    mr = ecoloring.find_mate(g, result.ecoloring, c, cap=args.cut_cap)
    obj = {
        "ecoloring": result.ecoloring.to_json(),
        "status": mr.status,
        "mate": mr.mate.to_json() if mr.mate else None,
        "coloring": _coloring_json(mr.coloring) if mr.coloring else None,
    }
    _emit(args, obj)
    return 0


def cmd_swap(args) -> int:
    g = _load(args.file)
    raw = args.spec
    if raw.startswith("@"):
        raw = pathlib.Path(raw[1:]).read_text()
    spec = reductions.spec_from_json(json.loads(raw))
    reason = reductions.validate_swap(g, spec)
    if reason is not None:
        print(f"invalid swap spec: {reason}", file=sys.stderr)
        return 1
    swapped = reductions.apply_swap(g, spec)
    pert = reductions.check_swap_cut_property(g, swapped, spec.k, cap=args.cut_cap)
    obj = {
        "spec": spec.to_json(),
        "graph": json.loads(swapped.to_json()),
        "perturbation": pert.to_json(),
    }
    _emit(args, obj)
    return 0


def cmd_catalog(args) -> int:
    g = _load(args.file)
    result = reductions.match_catalog(g, args.cut_cap)
    _emit(args, result.to_json())
    return 0


def cmd_discharge(args) -> int:
    g = _load(args.file)
    initial = discharging.initial_charges(g)
    apps = discharging.rule_applications(g)
    final = discharging.final_charges(initial, apps)
    obj = {
        "unit": "quarter_units" if args.quarters else "units",
        "initial": initial.to_json(),
        "final": final.to_json(),
        "applications": [a.to_json() for a in apps],
    }
    if not args.quarters:
        def rescale(x):
            if isinstance(x, dict):
                return {
                    ("units" if k == "quarter_units" else
                     "total_units" if k == "total_quarter_units" else k):
                    (v / 4 if k in ("quarter_units", "total_quarter_units")
                     else rescale(v))
                    for k, v in x.items()
                }
            if isinstance(x, list):
                return [rescale(v) for v in x]
            return x
        obj = rescale(obj)
    _emit(args, obj)
    return 0


def cmd_audit(args) -> int:
    g = _load(args.file)
    report = discharging.audit(g, args.cut_cap)
    _emit(args, report.to_json())
    return 0 if report.verdict == "consistent" else 2


def _audit_one(path: pathlib.Path, cap: int) -> dict:
    try:
        g = parse_plane_graph(path.read_text())
        report = discharging.audit(g, cap)
        return {"file": str(path), "verdict": report.verdict,
                "violations": sorted({v.lemma for v in report.catalog.violations()})}
    except Exception as exc:  # per-file isolation
        return {"file": str(path), "verdict": "error", "error": str(exc)}


def cmd_batch(args) -> int:
    root = pathlib.Path(args.dir)
    files = sorted(
        p for p in root.iterdir()
        if p.is_file() and p.suffix in (".txt", ".json", ".pg")
    )
    if not files:
        print(f"no instance files in {root}", file=sys.stderr)
        return 1
    with concurrent.futures.ThreadPoolExecutor() as ex:
        results = list(ex.map(lambda p: _audit_one(p, args.cut_cap), files))
    _emit(args, {"results": results})
    if any(r["verdict"] == "error" for r in results):
        return 1
    if any(r["verdict"] == "ANOMALY" for r in results):
        return 2
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tjoin", description="Plane multigraph T-join packing workbench"
    )
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument(
        "--cut-cap", type=int, default=cuts_mod.DEFAULT_VERTEX_CAP,
        help="vertex cap for exhaustive cut enumeration",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="emit a named instance")
    p.add_argument("name", choices=sorted(workbench.GENERATORS))
    p.add_argument("params", nargs="*", type=int)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("analyze", help="faces, multigons, classification")
    p.add_argument("file")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("cuts", help="minimum odd cut report")
    p.add_argument("file")
    p.add_argument("--max-size", type=int, default=None,
                   help="also list odd cuts up to this size")
    p.add_argument("--nontrivial", action="store_true",
                   help="restrict the listing to non-trivial cuts")
    p.set_defaults(func=cmd_cuts)

    p = sub.add_parser("color", help="search for a 6-edge-coloring")
    p.add_argument("file")
    p.add_argument("--budget", type=int, default=coloring_mod.DEFAULT_NODE_BUDGET)
    p.add_argument("--exhaustive", action="store_true",
                   help="use the exhaustive oracle (small graphs only)")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("pack", help="extract six disjoint T-joins")
    p.add_argument("file")
    p.set_defaults(func=cmd_pack)

    p = sub.add_parser("ecolor", help="search for an e-coloring at an edge")
    p.add_argument("file")
    p.add_argument("--edge", type=int, required=True)
    p.add_argument("--canonicalize", action="store_true")
    p.set_defaults(func=cmd_ecolor)

    p = sub.add_parser("mate", help="search for a c-mate of an e-coloring")
    p.add_argument("file")
    p.add_argument("--edge", type=int, required=True)
    p.add_argument("--color", required=True,
                   choices=coloring_mod.COLOR_NAMES)
    p.set_defaults(func=cmd_mate)

    p = sub.add_parser("swap", help="apply a swap spec and check cut bounds")
    p.add_argument("file")
    p.add_argument("--spec", required=True,
                   help="swap spec as inline JSON, or @path to a file")
    p.set_defaults(func=cmd_swap)

    p = sub.add_parser("catalog", help="match the structural lemma catalog")
    p.add_argument("file")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("discharge", help="charge ledger and rule applications")
    p.add_argument("file")
    grp = p.add_mutually_exclusive_group()
    grp.add_argument("--quarters", action="store_true", default=True)
    grp.add_argument("--units", dest="quarters", action="store_false")
    p.set_defaults(func=cmd_discharge)

    p = sub.add_parser("audit", help="full discharging audit (exit 0/1/2)")
    p.add_argument("file")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("batch", help="audit every instance file in a directory")
    p.add_argument("dir")
    p.set_defaults(func=cmd_batch)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, cuts_mod.CutError, coloring_mod.ColoringError,
            ecoloring.EColoringError, reductions.ReductionError,
            discharging.DischargeError, ValueError, OSError,
            json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
