"""Command-line front end.

Commands: ``gen`` (emit a family graph), ``compute`` (indices of an
arbitrary graph file), ``verify`` (formula-vs-oracle sweep), ``bounds``
(check one composition bound), ``compose`` (build a polymer from a spec).

Data goes to stdout, diagnostics go to stderr.  Exit codes: 0 success,
1 a checked property failed (verify disagreement, bound violated),
2 invalid input or spec, 3 disconnected input where connectivity is
required.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import GraphError, NotConnected
from .families import CHAIN_FAMILIES, FAMILY_NAMES, FamilySpec, family_counts, generate
from .formats import dump_graph, parse_graph
from .formulas import BOUND_KINDS, check_bound, formula_value, has_formula
from .indices import EDGE_MOSTAR, MOSTAR, edge_mostar_index, index_report, mostar_index
from .polymer import compose, spec_from_json

SCHEMA_VERSION = "1"

_CLI_INDEX = {"mostar": MOSTAR, "edge-mostar": EDGE_MOSTAR}
_INDEX_CLI = {v: k for k, v in _CLI_INDEX.items()}

DEFAULT_MAX_SIZE = 500_000


def _err(msg: str) -> None:
    print(f"error: {msg}", file=sys.stderr)


def _write_output(text: str, out: str | None) -> None:
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _record(command: str, inputs: dict, results) -> str:
    record = {"schema_version": SCHEMA_VERSION, "command": command,
              "inputs": inputs, "results": results}
    return json.dumps(record, sort_keys=True, indent=2) + "\n"


def _parse_range(text: str) -> range:
    lo, _, hi = text.partition("..")
    return range(int(lo), int(hi or lo) + 1)


def _family_spec(args) -> FamilySpec:
    if args.family == "clique-flower":
        return FamilySpec(args.family, m=args.m, inner=args.inner)
    return FamilySpec(args.family, n=args.n)


def cmd_gen(args) -> int:
    try:
        spec = _family_spec(args)
        fam = generate(spec)
    except (GraphError, ValueError) as exc:
        _err(str(exc))
        return 2
    _write_output(dump_graph(fam.graph, args.format), args.out)
    marks = " ".join(f"{k}={v}" for k, v in sorted(fam.landmarks.items()))
    print(f"{spec.family}: n={fam.graph.n} m={fam.graph.m} landmarks: {marks}",
          file=sys.stderr)
    return 0


def cmd_compute(args) -> int:
    try:
        text = Path(args.input).read_text()
        graph = parse_graph(text)
    except (OSError, GraphError, ValueError) as exc:
        _err(str(exc))
        return 2
    try:
        report = index_report(graph, include_per_edge=args.per_edge)
    except NotConnected as exc:
        _err(str(exc))
        return 3
    wanted = (["mostar", "edge-mostar", "wiener"] if args.index == "all"
              else [args.index])
    values = {"mostar": report.mostar, "edge-mostar": report.edge_mostar,
              "wiener": report.wiener}
    if args.format == "json":
        results: dict = {name: values[name] for name in wanted}
        if args.per_edge:
            results["per_edge"] = [
                {"u": c.edge[0], "v": c.edge[1],
                 "vertex_diff": c.vertex_diff, "edge_diff": c.edge_diff}
                for c in report.per_edge]
        inputs = {"input": args.input, "index": args.index,
                  "per_edge": args.per_edge}
        sys.stdout.write(_record("compute", inputs, results))
    elif args.format == "csv":
        print("metric,u,v,vertex_diff,edge_diff,value")
        for name in wanted:
            print(f"{name},,,,,{values[name]}")
        if args.per_edge:
            for c in report.per_edge:
                print(f"edge,{c.edge[0]},{c.edge[1]},{c.vertex_diff},{c.edge_diff},")
    else:
        for name in wanted:
            print(f"{name} = {values[name]}")
        if args.per_edge:
            print("edge  |n_u-n_v|  |m_u-m_v|")
            for c in report.per_edge:
                print(f"({c.edge[0]},{c.edge[1]})  {c.vertex_diff}  {c.edge_diff}")
    return 0


def _verify_cells(args) -> list[tuple[FamilySpec, str]]:
    names = (list(CHAIN_FAMILIES) + ["triangulane", "clique-flower"]
             if args.families == "all" else args.families.split(","))
    cells: list[tuple[FamilySpec, str]] = []
    for name in names:
        name = name.strip()
        if name not in FAMILY_NAMES:
            raise GraphError(f"unknown family {name!r}")
        if name == "clique-flower":
            for m in _parse_range(args.m_range):
                for inner in _parse_range(args.inner_range):
                    spec = FamilySpec(name, m=m, inner=inner)
                    cells.append((spec, MOSTAR))
                    cells.append((spec, EDGE_MOSTAR))
        elif not has_formula(name, MOSTAR):
            raise GraphError(f"no closed forms to verify for {name!r}")
        else:
            for n in range(args.n_from, args.n_to + 1):
                spec = FamilySpec(name, n=n)
                for index in (MOSTAR, EDGE_MOSTAR):
                    if has_formula(name, index):
                        cells.append((spec, index))
    return cells


def _spec_label(spec: FamilySpec) -> str:
    if spec.family == "clique-flower":
        return f"{spec.m}x{spec.inner}"
    return str(spec.n)


def cmd_verify(args) -> int:
    try:
        cells = _verify_cells(args)
        for spec, _ in cells:
            nv, ne = family_counts(spec)
            if nv * ne > args.max_size:
                raise GraphError(
                    f"{spec.family} at {_spec_label(spec)} has vertex-edge product "
                    f"{nv * ne} > --max-size {args.max_size}")
    except GraphError as exc:
        _err(str(exc))
        return 2

    rows = []
    graphs: dict[FamilySpec, object] = {}
    for spec, index in cells:
        if spec not in graphs:
            graphs[spec] = generate(spec).graph
        graph = graphs[spec]
        oracle = mostar_index(graph) if index == MOSTAR else edge_mostar_index(graph)
        rows.append((spec, index, formula_value(spec, index), oracle))

    all_agree = all(formula == oracle for _, _, formula, oracle in rows)
    if args.format == "csv":
        print("family,n,index,formula,oracle,agree")
        for spec, index, formula, oracle in rows:
            agree = "true" if formula == oracle else "false"
            print(f"{spec.family},{_spec_label(spec)},{_INDEX_CLI[index]},"
                  f"{formula},{oracle},{agree}")
    elif args.format == "json":
        results = [
            {"family": spec.family, "n": spec.n, "m": spec.m, "inner": spec.inner,
             "index": _INDEX_CLI[index], "formula": formula, "oracle": oracle,
             "agree": formula == oracle}
            for spec, index, formula, oracle in rows]
        inputs = {"families": args.families, "from": args.n_from, "to": args.n_to,
                  "m_range": args.m_range, "inner_range": args.inner_range}
        sys.stdout.write(_record("verify", inputs, results))
    else:
        for spec, index, formula, oracle in rows:
            mark = "ok" if formula == oracle else "DISAGREE"
            print(f"{spec.family:>13} {_spec_label(spec):>5} {_INDEX_CLI[index]:>11} "
                  f"formula={formula} oracle={oracle} {mark}")
    if not all_agree:
        disagreements = sum(1 for _, _, f, o in rows if f != o)
        print(f"{disagreements} of {len(rows)} cells disagree", file=sys.stderr)
    return 0 if all_agree else 1


def cmd_bounds(args) -> int:
    try:
        spec = spec_from_json(Path(args.spec).read_text())
        composite = compose(spec).graph
        indices = ([MOSTAR, EDGE_MOSTAR] if args.index == "both"
                   else [_CLI_INDEX[args.index]])
        reports = {_INDEX_CLI[ix]: check_bound(composite, spec, args.which, ix)
                   for ix in indices}
    except (OSError, GraphError, ValueError) as exc:
        _err(str(exc))
        return 2
    if args.format == "json":
        results = {name: {"actual": r.actual, "bound": r.bound, "kind": r.kind,
                          "strict": r.strict, "slack": r.slack, "holds": r.holds}
                   for name, r in reports.items()}
        inputs = {"spec": args.spec, "which": args.which, "index": args.index}
        sys.stdout.write(_record("bounds", inputs, results))
    else:
        for name, r in reports.items():
            rel = ">" if r.kind == "lower" else "<="
            holds = "holds" if r.holds else "VIOLATED"
            print(f"{args.which} [{name}]: actual={r.actual} {rel} "
                  f"bound={r.bound} slack={r.slack} {holds}")
    return 0 if all(r.holds for r in reports.values()) else 1


def cmd_compose(args) -> int:
    try:
        spec = spec_from_json(Path(args.spec).read_text())
        result = compose(spec)
    except (OSError, GraphError, ValueError) as exc:
        _err(str(exc))
        return 2
    _write_output(dump_graph(result.graph, args.format), args.out)
    vmap = [[i, v, cid] for (i, v), cid in sorted(result.vertex_map.items())]
    map_json = json.dumps({"schema_version": SCHEMA_VERSION, "vertex_map": vmap},
                          sort_keys=True) + "\n"
    if args.out in (None, "-"):
        sys.stderr.write(map_json)
    else:
        Path(args.out + ".map.json").write_text(map_json)
    print(f"{spec.kind}: n={result.graph.n} m={result.graph.m}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mostar",
        description="Distance-based bond-additive graph indices, polymer "
                    "compositions, and formula-vs-oracle verification.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a family graph")
    p.add_argument("--family", required=True, choices=FAMILY_NAMES)
    p.add_argument("--n", type=int, default=1, help="chain length / recursion depth")
    p.add_argument("--m", type=int, default=1, help="outer clique size (clique-flower)")
    p.add_argument("--inner", type=int, default=1, help="petal clique size (clique-flower)")
    p.add_argument("--out", default="-", help="output path, '-' for stdout")
    p.add_argument("--format", default="edgelist", choices=("edgelist", "json"))
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("compute", help="compute indices of a graph file")
    p.add_argument("input", help="edge-list or JSON graph file")
    p.add_argument("--index", default="all",
                   choices=("mostar", "edge-mostar", "wiener", "all"))
    p.add_argument("--per-edge", action="store_true")
    p.add_argument("--format", default="text", choices=("json", "csv", "text"))
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="sweep closed forms against the oracle")
    p.add_argument("--families", default="all",
                   help="comma-separated family names, or 'all'")
    p.add_argument("--from", dest="n_from", type=int, default=1)
    p.add_argument("--to", dest="n_to", type=int, default=6)
    p.add_argument("--m-range", default="1..5", help="clique-flower m range, e.g. 1..4")
    p.add_argument("--inner-range", default="1..5", help="clique-flower petal range")
    p.add_argument("--max-size", type=int, default=DEFAULT_MAX_SIZE,
                   help="largest allowed vertex-edge product per instance")
    p.add_argument("--format", default="csv", choices=("json", "csv", "text"))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="check a composition bound")
    p.add_argument("spec", help="polymer spec JSON file")
    p.add_argument("--which", required=True, choices=BOUND_KINDS)
    p.add_argument("--index", default="mostar",
                   choices=("mostar", "edge-mostar", "both"))
    p.add_argument("--format", default="text", choices=("json", "text"))
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("compose", help="build a composite graph from a spec")
    p.add_argument("spec", help="polymer spec JSON file")
    p.add_argument("--out", default="-", help="output path, '-' for stdout")
    p.add_argument("--format", default="edgelist", choices=("edgelist", "json"))
    p.set_defaults(func=cmd_compose)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "verify" and args.n_from < 1:
        _err("--from must be >= 1")
        return 2
    if args.command == "verify" and args.n_from > args.n_to:
        _err("--from must not exceed --to")
        return 2
    return args.func(args)


def entry() -> None:
    sys.exit(main())
