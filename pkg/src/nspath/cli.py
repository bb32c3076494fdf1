"""Command-line front end: solve, decide, oracle, gen, reduce, check, bench.

Exit codes: 0 answered, 1 no non-separating path exists, 2 invalid input.
All randomness flows from explicit --seed flags.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Optional

from . import oracle as oracle_mod
from .decision import decide
from .errors import NspathError, NotChordalError
from .generator import GenConfig, gen_chordal, gen_cnf, gen_ktree
from .graph import (Graph, Path, bridges, format_graph_text, is_chordal,
                    is_connected, parse_graph_text)
from .reduction import format_dimacs, parse_dimacs, reduce_cnf
from .solver import SolveReport, solve_with_report

EXIT_OK = 0
EXIT_NO_PATH = 1
EXIT_INVALID = 2


@dataclass
class RunReport:
    """Structured record of one CLI run, JSON-serializable."""

    command: str
    n: int
    m: int
    s: Optional[int] = None
    t: Optional[int] = None
    result: Optional[dict] = None
    stage_us: dict = field(default_factory=dict)
    artifacts: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "input": {"n": self.n, "m": self.m, "s": self.s, "t": self.t},
            "result": self.result,
            "stage_us": self.stage_us,
            "artifacts": self.artifacts,
        }


def emit_json(record: dict) -> str:
    return json.dumps(record, sort_keys=True, indent=2)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _solve_report_artifacts(report: SolveReport) -> dict:
    return {
        "bad": list(report.bad),
        "base_path": list(report.base_path) if report.base_path else None,
        "detour_path": list(report.detour_path) if report.detour_path else None,
        "avoid_set": [
            {"vertices": list(x.vertices), "tags": list(x.tags),
             "inner_interval_on_base": list(x.inner_interval_on_base)
             if x.inner_interval_on_base else None}
            for x in report.avoid_set
        ],
        "aux": {"vertices": report.aux_vertices, "edges": report.aux_edges},
        "region": {"n": report.region_n, "m": report.region_m},
    }


def cmd_solve(args) -> int:
    g, s, t = parse_graph_text(_read_text(args.input))
    path, report = solve_with_report(g, s, t)
    if args.trace:
        print(f"trace: region n={report.region_n} m={report.region_m}", file=sys.stderr)
        print(f"trace: bad={list(report.bad)}", file=sys.stderr)
        print(f"trace: base_path={list(report.base_path or ())}", file=sys.stderr)
        print(f"trace: detour_path={list(report.detour_path or ())}", file=sys.stderr)
        for x in report.avoid_set:
            print(f"trace: avoid {list(x.vertices)} tags={list(x.tags)}", file=sys.stderr)
        print(f"trace: aux vertices={report.aux_vertices} edges={report.aux_edges}",
              file=sys.stderr)
        for name, us in report.stage_us.items():
            print(f"trace: stage {name} {us}us", file=sys.stderr)
    if args.json:
        run = RunReport(command="solve", n=g.n, m=g.m, s=s, t=t,
                        result=None if path is None else
                        {"path": list(path.vertices), "length": path.length},
                        stage_us=dict(report.stage_us),
                        artifacts=_solve_report_artifacts(report))
        print(emit_json(run.to_dict()))
    elif path is None:
        print("NONE")
    else:
        print(f"PATH {len(path.vertices)} " + " ".join(map(str, path.vertices)))
        print(f"LENGTH {path.length}")
    return EXIT_OK if path is not None else EXIT_NO_PATH


def cmd_decide(args) -> int:
    g, s, t = parse_graph_text(_read_text(args.input))
    if args.force_oracle:
        ok, _ = is_chordal(g)
        if not ok:
            path = oracle_mod.brute_shortest_nonseparating(g, s, t, cap=args.cap)
            if path is None:
                print("NO")
                return EXIT_NO_PATH
            print("YES " + " ".join(map(str, path.vertices)))
            return EXIT_OK
    exists, witness = decide(g, s, t)
    if not exists:
        print("NO")
        return EXIT_NO_PATH
    print("YES " + " ".join(map(str, witness.vertices)))
    return EXIT_OK


def cmd_oracle(args) -> int:
    g, s, t = parse_graph_text(_read_text(args.input))
    cap = args.cap
    if args.subop == "shortest-nonsep":
        path = oracle_mod.brute_shortest_nonseparating(g, s, t, cap=cap)
        if path is None:
            print("NONE")
            return EXIT_NO_PATH
        print(f"PATH {len(path.vertices)} " + " ".join(map(str, path.vertices)))
        print(f"LENGTH {path.length}")
        return EXIT_OK
    if args.subop == "separators":
        seps = oracle_mod.enumerate_separator_paths(g, cap=cap)
        print(f"COUNT {len(seps)}")
        for sep in seps:
            useful, traversable, normal = oracle_mod.classify(g, s, t, sep, cap=cap)
            verts = " ".join(map(str, sep.path.vertices))
            print(f"SEP {verts} useful={int(useful)} traversable={int(traversable)}"
                  f" normal={int(normal)}")
        return EXIT_OK
    # classify
    if not args.vertices:
        raise NspathError("classify needs the path's vertices as arguments")
    verts = tuple(args.vertices)
    path = Path.from_vertices(g, verts)
    if not oracle_mod._is_separator_path(g, verts):
        raise NspathError("the given path is not a separator path")
    sep = oracle_mod.SeparatorPath.of(g, path)
    useful, traversable, normal = oracle_mod.classify(g, s, t, sep, cap=cap)
    print(f"useful={int(useful)} traversable={int(traversable)} normal={int(normal)}")
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.family == "cnf":
        cnf = gen_cnf(args.vars, args.clauses, seed=args.seed)
        sys.stdout.write(format_dimacs(cnf))
        return EXIT_OK
    if args.family == "chordal":
        g = gen_chordal(GenConfig(vertex_count=args.n,
                                  attachment_clique_max=args.clique_max,
                                  weight_min=args.wmin, weight_max=args.wmax,
                                  seed=args.seed))
    else:
        g = gen_ktree(args.n, args.k, weight_min=args.wmin,
                      weight_max=args.wmax, seed=args.seed)
    s = args.s if args.s is not None else 0
    t = args.t if args.t is not None else g.n - 1
    sys.stdout.write(format_graph_text(g, s, t))
    return EXIT_OK


def cmd_reduce(args) -> int:
    cnf = parse_dimacs(_read_text(args.input))
    inst = reduce_cnf(cnf)
    out = [format_graph_text(inst.graph, inst.s, inst.t).rstrip("\n")]
    mapping = [f"# map s {inst.s}", f"# map t {inst.t}"]
    for var in sorted(inst.gadgets):
        gadget = inst.gadgets[var]
        mapping.append(f"# map var {var} neg " + " ".join(map(str, gadget.neg_lane)))
        mapping.append(f"# map var {var} pos " + " ".join(map(str, gadget.pos_lane)))
        mapping.append(f"# map var {var} join {gadget.join}")
    for ci, cv in enumerate(inst.clause_vertices):
        mapping.append(f"# map clause {ci} vertex {cv}")
    mapping.append("# map dummies " + " ".join(map(str, sorted(inst.dummies))))
    text = "\n".join(out + mapping) + "\n"
    sys.stdout.write(text)
    if args.mapping:
        with open(args.mapping, "w", encoding="utf-8") as handle:
            handle.write("\n".join(line[2:] for line in mapping) + "\n")
    return EXIT_OK


def cmd_check(args) -> int:
    g, s, t = parse_graph_text(_read_text(args.input))
    connected = is_connected(g)
    chordal, _peo = is_chordal(g)
    n_bridges = len(bridges(g))
    print(f"format: ok (n={g.n}, m={g.m}, s={s}, t={t})")
    print(f"connected: {'yes' if connected else 'no'}")
    print(f"chordal: {'yes' if chordal else 'no'}")
    print(f"bridges: {n_bridges}")
    print(f"terminals-distinct: {'yes' if s != t else 'no'}")
    ok = connected and chordal and s != t
    return EXIT_OK if ok else EXIT_INVALID


def cmd_bench(args) -> int:
    sizes = [int(tok) for tok in args.sizes.split(",") if tok] if args.sizes else []
    stage_names = ["validate", "prune", "bad", "base_path", "st_separators",
                   "detour_path", "extra_separators", "layered_graph", "avoid", "total"]
    print("family,n,k,seed,m," + ",".join(f"{s}_us" for s in stage_names) + ",length")
    for n in sizes:
        if args.family == "ktree":
            g = gen_ktree(n, args.k, seed=args.seed)
        else:
            g = gen_chordal(GenConfig(vertex_count=n, seed=args.seed))
        s, t = 0, g.n - 1
        path, report = solve_with_report(g, s, t)
        cells = [args.family, str(n), str(args.k if args.family == "ktree" else 0),
                 str(args.seed), str(g.m)]
        cells.extend(str(report.stage_us.get(name, 0)) for name in stage_names)
        cells.append(str(path.length if path is not None else -1))
        print(",".join(cells))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nspath",
        description="Shortest non-separating s-t paths on connected chordal graphs")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="shortest non-separating path")
    p.add_argument("input", help="graph file ('-' for stdin)")
    p.add_argument("--json", action="store_true", help="emit a JSON run report")
    p.add_argument("--trace", action="store_true", help="dump pipeline stages to stderr")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("decide", help="does a non-separating path exist?")
    p.add_argument("input")
    p.add_argument("--force-oracle", action="store_true",
                   help="fall back to brute force on non-chordal graphs")
    p.add_argument("--cap", type=int, default=oracle_mod.DEFAULT_CAP,
                   help="oracle vertex cap (with --force-oracle)")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("oracle", help="brute-force reference answers")
    p.add_argument("input")
    p.add_argument("subop", choices=["shortest-nonsep", "separators", "classify"])
    p.add_argument("vertices", nargs="*", type=int,
                   help="path vertices (classify only)")
    p.add_argument("--cap", type=int, default=oracle_mod.DEFAULT_CAP)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="seeded instance generators")
    gsub = p.add_subparsers(dest="family", required=True)
    pc = gsub.add_parser("chordal")
    pc.add_argument("--n", type=int, required=True)
    pc.add_argument("--clique-max", type=int, default=4, dest="clique_max")
    pk = gsub.add_parser("ktree")
    pk.add_argument("--n", type=int, required=True)
    pk.add_argument("--k", type=int, default=3)
    for q in (pc, pk):
        q.add_argument("--wmin", type=int, default=1)
        q.add_argument("--wmax", type=int, default=32)
        q.add_argument("--seed", type=int, default=0)
        q.add_argument("--s", type=int, default=None)
        q.add_argument("--t", type=int, default=None)
        q.set_defaults(func=cmd_gen)
    pf = gsub.add_parser("cnf")
    pf.add_argument("--vars", type=int, required=True)
    pf.add_argument("--clauses", type=int, required=True)
    pf.add_argument("--seed", type=int, default=0)
    pf.set_defaults(func=cmd_gen)

    p = sub.add_parser("reduce", help="3-SAT to non-separating-path reduction")
    p.add_argument("input", help="DIMACS CNF file ('-' for stdin)")
    p.add_argument("--mapping", help="also write the sidecar mapping to a file")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("check", help="format / connectivity / chordality lint")
    p.add_argument("input")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("bench", help="timing rows over generated instances")
    p.add_argument("--family", choices=["ktree", "chordal"], default="ktree")
    p.add_argument("--sizes", default="", help="comma-separated vertex counts")
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NotChordalError as exc:
        print(f"error: not chordal: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (NspathError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
