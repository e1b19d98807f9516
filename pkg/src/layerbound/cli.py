"""Command-line entry point.

Exit codes: 0 success, 1 verified failure, 2 usage or input error,
3 undecided within the search budget.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field

from . import io
from .drawing import (
    TooLarge,
    bipartite_drawing,
    canonical_wall_drawing,
    column_parity_drawing,
    crossing_profile,
    min_local_crossings_bruteforce,
)
from .families import WallFamilyInstance, branch_sets, gen_grid, gen_k0, gen_wall
from .graph import Graph, GraphError, NotBipartite
from .minors import MinorCertificate, model_by_ids, verify_minor
from .nodesearch import (
    SearchError,
    grid_sweep_strategy,
    observation_checker,
    strategy_from_json,
    strategy_to_decomposition,
    strategy_to_json,
    verify_strategy,
    wall_sweep_strategy,
)
from .pathwidth import (
    DEFAULT_BUDGET,
    UNKNOWN,
    Budget,
    decide_pathwidth_le,
    exact_pathwidth,
    layout_to_decomposition,
    verify_decomposition,
)
from .svg import SvgOptions, render_svg

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_UNKNOWN = 0, 1, 2, 3

PASS, FAIL, UNDECIDED = "pass", "fail", "unknown"


@dataclass
class Check:
    name: str
    status: str
    detail: str


@dataclass
class CertificationReport:
    k: int
    checks: list[Check] = field(default_factory=list)

    @property
    def overall(self) -> str:
        return PASS if self.checks and all(c.status == PASS for c in self.checks) else FAIL

    def add(self, name: str, ok, detail: str) -> None:
        status = UNDECIDED if ok is None else (PASS if ok else FAIL)
        self.checks.append(Check(name, status, detail))

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "checks": [{"name": c.name, "status": c.status, "detail": c.detail} for c in self.checks],
            "overall": self.overall,
        }


def certify(k: int, budget: Budget = DEFAULT_BUDGET) -> CertificationReport:
    """Machine-check that some 2-layer k-planar graph has pathwidth k + 1."""
    if k < 0:
        raise ValueError("k must be non-negative")
    report = CertificationReport(k)
    if k == 0:
        g = gen_k0()
        prof = crossing_profile(g, bipartite_drawing(g))
        report.add("drawing", prof.max_count == 0, f"max crossings per edge {prof.max_count}")
        pw = exact_pathwidth(g, budget)
        report.add("pathwidth", pw == 1, f"pathwidth {pw}")
        return report

    grid, wall = gen_grid(k), gen_wall(k)

    prof = crossing_profile(wall.graph, canonical_wall_drawing(wall))
    report.add("drawing", prof.max_count == k, f"canonical W_{k} drawing: max crossings per edge {prof.max_count}")

    model = model_by_ids(grid.graph, branch_sets(wall))
    cert = verify_minor(grid.graph, wall.graph, model)
    ok = isinstance(cert, MinorCertificate)
    detail = f"{len(cert.realizers)} pattern edges realised" if ok else str(cert)
    report.add("minor", ok, f"G_{k} minor of W_{k}: {detail}")

    strategy = wall_sweep_strategy(wall)
    sr = verify_strategy(wall.graph, strategy)
    width = verify_decomposition(wall.graph, strategy_to_decomposition(wall.graph, strategy))
    report.add(
        "upper-bound",
        sr.monotone and sr.cost == k + 2 and width == k + 1,
        f"W_{k} sweep: cost {sr.cost}, monotone {sr.monotone}, decomposition width {width}",
    )

    res = decide_pathwidth_le(grid.graph, k, budget)
    if res is UNKNOWN:
        report.add("lower-bound", None, f"pw(G_{k}) <= {k} undecided within budget")
    else:
        report.add("lower-bound", not res[0], f"pw(G_{k}) <= {k} is {res[0]}")
    return report


def _budget(args) -> Budget:
    return Budget(
        nodes=args.budget_nodes if args.budget_nodes is not None else DEFAULT_BUDGET.nodes,
        ms=args.budget_ms if args.budget_ms is not None else DEFAULT_BUDGET.ms,
    )


def _family(name: str, k: int):
    if name == "k0" or k == 0:
        return None, gen_k0()
    inst = gen_grid(k) if name == "grid" else gen_wall(k)
    return inst, inst.graph


def _load_graph(args) -> Graph:
    if getattr(args, "graph", None):
        return io.graph_from_json(io.read_json(args.graph))
    if getattr(args, "family", None) and args.k is not None:
        return _family(args.family, args.k)[1]
    raise UsageError("give --graph FILE or --family NAME --k K")


class UsageError(Exception):
    pass


def _emit(text: str, path: str | None) -> None:
    if path:
        io.write_text(path, text)
    else:
        sys.stdout.write(text)


def cmd_generate(args) -> int:
    inst, g = _family(args.family, args.k)
    _emit(io.dumps(io.graph_to_json(g)), args.out)
    if args.model_out:
        if not isinstance(inst, WallFamilyInstance):
            raise UsageError("--model-out needs --family wall with k >= 1")
        model = model_by_ids(gen_grid(inst.k).graph, branch_sets(inst))
        io.write_text(args.model_out, io.dumps(io.model_to_json(model)))
    return EXIT_OK


def cmd_draw(args) -> int:
    if args.graph:
        g = io.graph_from_json(io.read_json(args.graph))
        if args.drawing:
            d = io.drawing_from_json(io.read_json(args.drawing))
        else:
            d = column_parity_drawing(g) or bipartite_drawing(g)
    else:
        inst, g = _family(args.family, args.k)
        d = canonical_wall_drawing(inst) if args.family == "wall" and inst else bipartite_drawing(g)
    if args.drawing_out:
        io.write_text(args.drawing_out, io.dumps(io.drawing_to_json(d)))
    svg = render_svg(g, d, SvgOptions(unit=args.unit, show_labels=args.labels, annotate_crossings=args.annotate))
    _emit(svg, args.svg)
    return EXIT_OK


def cmd_check_kplanar(args) -> int:
    g = _load_graph(args)
    d = io.drawing_from_json(io.read_json(args.drawing))
    prof = crossing_profile(g, d)
    ok = prof.max_count <= args.k_planar
    print(f"max crossings per edge: {prof.max_count}; {args.k_planar}-planar: {'yes' if ok else 'no'}")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_pathwidth(args) -> int:
    g = _load_graph(args)
    budget = _budget(args)
    if args.decide is not None:
        res = decide_pathwidth_le(g, args.decide, budget)
        if res is UNKNOWN:
            print("UNKNOWN")
            return EXIT_UNKNOWN
        ok, layout = res
        print(f"pw <= {args.decide}: {'yes' if ok else 'no'}")
        if ok and args.out:
            io.write_text(args.out, io.dumps(io.decomposition_to_json(layout_to_decomposition(g, layout))))
        return EXIT_OK if ok else EXIT_FAIL
    pw = exact_pathwidth(g, budget)
    if pw is UNKNOWN:
        print("UNKNOWN")
        return EXIT_UNKNOWN
    print(pw)
    if args.out:
        _, layout = decide_pathwidth_le(g, pw, budget)
        io.write_text(args.out, io.dumps(io.decomposition_to_json(layout_to_decomposition(g, layout))))
    return EXIT_OK


def cmd_verify_pd(args) -> int:
    g = _load_graph(args)
    res = verify_decomposition(g, io.decomposition_from_json(io.read_json(args.pd)))
    if isinstance(res, int):
        print(f"valid path decomposition of width {res}")
        return EXIT_OK
    print(f"invalid: {res}")
    return EXIT_FAIL


def _grid_for(g: Graph):
    # --assert-observation needs the grid structure; recover k from the vertex count.
    for k in range(1, 64):
        inst = gen_grid(k)
        if inst.graph.n == g.n:
            if inst.graph == g:
                return inst
            break
        if inst.graph.n > g.n:
            break
    raise UsageError("--assert-observation needs a graph produced by 'generate --family grid'")


def cmd_ns_simulate(args) -> int:
    g = _load_graph(args)
    s = strategy_from_json(io.read_json(args.strategy))
    observer = observation_checker(_grid_for(g)) if args.assert_observation else None
    try:
        rep = verify_strategy(g, s, observer)
    except (SearchError, AssertionError) as exc:
        print(f"failed: {exc}")
        return EXIT_FAIL
    print(f"all edges clean; cost {rep.cost}; monotone {'yes' if rep.monotone else 'no'}")
    return EXIT_OK


def cmd_ns_sweep(args) -> int:
    inst, _ = _family(args.family, args.k)
    if inst is None:
        raise UsageError("ns-sweep needs --family grid|wall and k >= 1")
    s = grid_sweep_strategy(inst) if args.family == "grid" else wall_sweep_strategy(inst)
    _emit(io.dumps(strategy_to_json(s)), args.out)
    return EXIT_OK


def cmd_verify_minor(args) -> int:
    pattern = io.graph_from_json(io.read_json(args.pattern))
    host = io.graph_from_json(io.read_json(args.host))
    res = verify_minor(pattern, host, io.model_from_json(io.read_json(args.model)))
    if isinstance(res, MinorCertificate):
        print(f"minor certified: {len(res.realizers)} pattern edges realised")
        return EXIT_OK
    print(f"not a minor model: {res}")
    return EXIT_FAIL


def cmd_certify(args) -> int:
    report = certify(args.k, _budget(args))
    for c in report.checks:
        print(f"[{c.status.upper():7}] {c.name}: {c.detail}")
    print(f"overall: {report.overall}")
    if args.json:
        io.write_text(args.json, io.dumps(report.to_json()))
    if report.overall == PASS:
        return EXIT_OK
    return EXIT_UNKNOWN if all(c.status != FAIL for c in report.checks) else EXIT_FAIL


def cmd_oracle(args) -> int:
    g = _load_graph(args)
    value, d = min_local_crossings_bruteforce(g)
    print(value)
    if args.out:
        io.write_text(args.out, io.dumps(io.drawing_to_json(d)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="layerbound", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_source(p, family=True):
        p.add_argument("--graph", metavar="FILE")
        if family:
            p.add_argument("--family", choices=["grid", "wall", "k0"])
            p.add_argument("--k", type=int)

    def budget_flags(p):
        p.add_argument("--budget-ms", type=int)
        p.add_argument("--budget-nodes", type=int)

    p = sub.add_parser("generate", help="write G_k, W_k or the k=0 path as JSON")
    p.add_argument("--family", choices=["grid", "wall", "k0"], required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--out", metavar="FILE")
    p.add_argument("--model-out", metavar="FILE", help="also write the G_k branch sets in W_k")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("draw", help="render a two-layer drawing as SVG")
    graph_source(p)
    p.add_argument("--drawing", metavar="FILE")
    p.add_argument("--svg", metavar="FILE")
    p.add_argument("--drawing-out", metavar="FILE")
    p.add_argument("--unit", type=float, default=24.0)
    p.add_argument("--labels", action="store_true")
    p.add_argument("--annotate", action="store_true", help="print crossing counts on edges")
    p.set_defaults(func=cmd_draw)

    p = sub.add_parser("check-kplanar", help="exit 0 iff the drawing is k-planar")
    graph_source(p, family=False)
    p.add_argument("--drawing", metavar="FILE", required=True)
    p.add_argument("--k", dest="k_planar", type=int, required=True)
    p.set_defaults(func=cmd_check_kplanar)

    p = sub.add_parser("pathwidth", help="exact pathwidth, or decide pw <= W")
    graph_source(p)
    p.add_argument("--decide", type=int, metavar="W")
    p.add_argument("--out", metavar="FILE", help="write an optimal decomposition")
    budget_flags(p)
    p.set_defaults(func=cmd_pathwidth)

    p = sub.add_parser("verify-pd", help="check a path decomposition")
    graph_source(p)
    p.add_argument("--pd", metavar="FILE", required=True)
    p.set_defaults(func=cmd_verify_pd)

    p = sub.add_parser("ns-simulate", help="run a node-search strategy")
    graph_source(p)
    p.add_argument("--strategy", metavar="FILE", required=True)
    p.add_argument("--assert-observation", action="store_true")
    p.set_defaults(func=cmd_ns_simulate)

    p = sub.add_parser("ns-sweep", help="write the column-sweep strategy of G_k or W_k")
    p.add_argument("--family", choices=["grid", "wall"], required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_ns_sweep)

    p = sub.add_parser("verify-minor", help="check a branch-set minor model")
    p.add_argument("--pattern", metavar="FILE", required=True)
    p.add_argument("--host", metavar="FILE", required=True)
    p.add_argument("--model", metavar="FILE", required=True)
    p.set_defaults(func=cmd_verify_minor)

    p = sub.add_parser("certify", help="run every check for one k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--json", metavar="FILE")
    budget_flags(p)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("oracle-min-crossings", help="brute-force 2-layer local crossing number")
    graph_source(p)
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, OSError, KeyError, ValueError, GraphError, NotBipartite, TooLarge) as exc:
        print(f"layerbound {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
