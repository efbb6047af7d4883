"""Command-line front end.

Graphs can be given as a family spec, a graph6 string, or a file (edge list
with an ``n <count>`` header, or graph6 lines). Family specs:

  kite:r,s        path on r vertices glued to K_s
  pineapple:c,p   K_c with p pendant vertices on one clique vertex
  path:n  complete:n  cycle:n  star:m (m leaves)

Exit status: 0 success, 1 a check failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
import time
from dataclasses import dataclass
from pathlib import Path


from . import graph as gr
from .closedform import kite_gamma
from .formats import (
    EdgeListError,
    Graph6Error,
    graph6_decode,
    graph6_encode,
    parse_edge_list,
)
from .irregularity import report_all
from .oracle import dense_perron
from .report import FORMATS, render
from .search import (
    PerturbationError,
    SearchError,
    find_extremal,
    ingest_graph6,
    kite_optimize,
    perturb_analysis,
)
from .spectral import DEFAULT_TOL, ConvergenceError, DisconnectedGraphError, principal_eigenpair
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

log = logging.getLogger("kiteratio")


class UsageError(Exception):
    pass


FAMILIES = {
    "kite": (2, lambda a: gr.make_kite(gr.KiteParams(*a))),
    "pineapple": (2, lambda a: gr.make_pineapple(*a)),
    "path": (1, lambda a: gr.make_path(*a)),
    "complete": (1, lambda a: gr.make_complete(*a)),
    "cycle": (1, lambda a: gr.make_cycle(*a)),
    "star": (1, lambda a: gr.make_star(*a)),
}


def parse_family(spec: str) -> gr.Graph:
    name, _, args = spec.partition(":")
    if name not in FAMILIES:
        raise UsageError(f"unknown graph family {name!r}; expected one of {', '.join(FAMILIES)}")
    arity, build = FAMILIES[name]
    try:
        vals = [int(x) for x in args.split(",")]
    except ValueError:
        raise UsageError(f"bad family arguments in {spec!r}") from None
    if len(vals) != arity:
        raise UsageError(f"{name} takes {arity} argument(s), got {len(vals)}")
    return build(vals)


def load_graph(text: str | None, path: str | None) -> gr.Graph:
    if path is not None:
        try:
            content = Path(path).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc}") from None
        first = next((ln.strip() for ln in content.splitlines() if ln.strip() and not ln.startswith("#")), "")
        if first.startswith("n "):
            return parse_edge_list(content)
        return graph6_decode(first)
    if text is None:
        raise UsageError("no graph given: pass a family spec, a graph6 string, or --input")
    if ":" in text and not text.startswith(">>"):
        return parse_family(text)
    return graph6_decode(text)


def parse_edge(spec: str) -> tuple[int, int]:
    parts = spec.split(",")
    try:
        u, v = (int(p) for p in parts)
    except ValueError:
        raise UsageError(f"malformed edge {spec!r}; expected 'u,v'") from None
    return u, v


@dataclass
class RunConfig:
    subcommand: str
    n: str | None
    input_path: str | None
    output_format: str
    tolerance: float
    threads: int
    seed: int

    def __post_init__(self):
        if not 0.0 < self.tolerance <= 1e-3:
            raise UsageError(f"--tol must lie in (0, 1e-3], got {self.tolerance}")
        if self.threads < 1:
            raise UsageError(f"--threads must be >= 1, got {self.threads}")


def _vertex_list(v) -> str:
    return ";".join(str(x) for x in v)


def cmd_ratio(args, cfg: RunConfig) -> tuple[int, list[dict]]:
    g = load_graph(args.graph, cfg.input_path)
    spec = principal_eigenpair(g, cfg.tolerance)
    rep = report_all(g, cfg.tolerance, spec)
    rec = {
        "n": g.n,
        "edges": g.edge_count,
        "graph6": graph6_encode(g),
        "lambda1": spec.lambda1,
        **rep.as_dict(),
        "log_gamma": spec.log_gamma,
        "residual": spec.residual,
        "min_vertex": spec.min_vertex,
        "max_vertex": spec.max_vertex,
    }
    return EXIT_OK, [rec]


def _search_record(res, elapsed: float) -> dict:
    a = res.audit
    oracle_lam, _, oracle_gamma = dense_perron(res.best.adjacency_matrix())
    kite = res.kite
    kite_lg = kite_gamma(kite.r, kite.s) if kite is not None and kite.r >= 2 and kite.s >= 3 else None
    return {
        "n": res.n,
        "source": res.source,
        "witness": graph6_encode(res.best),
        "log_gamma": res.log_gamma,
        "gamma": res.gamma,
        "lambda1": res.lambda1,
        "residual": res.residual,
        "max_residual": res.max_residual,
        "oracle_gamma": oracle_gamma,
        "oracle_lambda1": oracle_lam,
        "kite": f"{kite.r},{kite.s}" if kite else "not a kite",
        "kite_log_gamma": kite_lg,
        "k": a.k,
        "c_size": a.c_size,
        "path": _vertex_list(a.path),
        "lambda_gt_nk": a.lambda_gt_nk,
        "pendant_prefix_len": a.pendant_prefix_len,
        "xk_dominates": a.xk_dominates,
        "deg_xk2": a.deg_xk2,
        "deg_xk1": a.deg_xk1,
        "nbhd_sum_ok": a.nbhd_sum_ok,
        "attach_degree_bound": a.attach_degree_bound,
        "attach_degree_ok": a.attach_degree_ok,
        "graphs_scanned": res.graphs_scanned,
        "graphs_solved": res.graphs_solved,
        "near_tie": res.near_tie,
        "tied": ";".join(res.tied),
        "wall_time_s": elapsed,
    }


def cmd_search(args, cfg: RunConfig) -> tuple[int, list[dict]]:
    t0 = time.perf_counter()
    if cfg.input_path is not None:
        graphs: list[gr.Graph] = []
        try:
            with open(cfg.input_path) as fh:
                stats = ingest_graph6(fh, graphs.append)
        except OSError as exc:
            raise UsageError(f"cannot read {cfg.input_path}: {exc}") from None
        for diag in stats.diagnostics:
            log.warning(diag)
        n = int(cfg.n) if cfg.n is not None else None
        res = find_extremal(n, graphs, tol=cfg.tolerance, seed=cfg.seed)
    else:
        if cfg.n is None:
            raise UsageError("search needs --n or --input")
        res = find_extremal(int(cfg.n), "scan", tol=cfg.tolerance, threads=cfg.threads,
                            degree_sorted=not args.full_scan, seed=cfg.seed)
    rec = _search_record(res, time.perf_counter() - t0)
    failed = res.audit.k >= 2 and not res.audit.lambda_gt_nk
    if failed:
        log.error("lambda1 <= n - k on the search winner")
    return (EXIT_FAIL if failed else EXIT_OK), [rec]


def _n_list(text: str | None) -> list[int]:
    if text is None:
        raise UsageError("kiteopt needs --n (comma-separated list)")
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"bad --n list {text!r}") from None


def cmd_kiteopt(args, cfg: RunConfig) -> tuple[int, list[dict]]:
    records = []
    for n in _n_list(cfg.n):
        if n < 5:
            raise UsageError(f"kiteopt needs n >= 5, got {n}")
        opt = kite_optimize(n, cfg.tolerance)
        if args.table:
            records.extend({"n": n, "s": s, "r": r, "log_gamma": lg} for s, r, lg in opt.table)
        else:
            records.append({
                "n": n,
                "best_r": opt.best_r,
                "best_s": opt.best_s,
                "log_gamma": opt.log_gamma,
                "s_over_n_log_n": opt.law_ratio,
            })
    return EXIT_OK, records


def cmd_verify(args, cfg: RunConfig) -> tuple[int, list[dict]]:
    if args.suite not in SUITES + ("all",):
        raise UsageError(f"unknown suite {args.suite!r}; expected one of {', '.join(SUITES + ('all',))}")
    checks = run_suite(args.suite, cfg.tolerance)
    records = [
        {"suite": c.suite, "check": c.name, "passed": c.passed, "margin": c.margin,
         "cases": c.cases, "detail": c.detail}
        for c in checks
    ]
    return (EXIT_OK if all(c.passed for c in checks) else EXIT_FAIL), records


def cmd_perturb(args, cfg: RunConfig) -> tuple[int, list[dict]]:
    g = load_graph(args.graph, cfg.input_path)
    edge = parse_edge(args.edge)
    rep = perturb_analysis(g, edge, args.tracked, args.n_cond, remove=args.remove, tol=cfg.tolerance)
    return EXIT_OK, [rep.as_dict()]


COMMANDS = {
    "ratio": cmd_ratio,
    "search": cmd_search,
    "kiteopt": cmd_kiteopt,
    "verify": cmd_verify,
    "perturb": cmd_perturb,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="plain")
    common.add_argument("--tol", type=float, default=DEFAULT_TOL, help="eigen-residual tolerance (default 1e-12)")
    common.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--input", help="edge-list or graph6 file")
    common.add_argument("--output", help="write the report here instead of stdout")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(
        prog="kiteratio",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = p.add_subparsers(dest="subcommand", required=True)

    sp = sub.add_parser("ratio", parents=[common], help="principal ratio and irregularity measures")
    sp.add_argument("graph", nargs="?", help="family spec or graph6 string")
    sp.set_defaults(n=None)

    sp = sub.add_parser("search", parents=[common], help="extremal principal ratio over all connected graphs")
    sp.add_argument("--n", help="vertex count for the built-in labeled scan (3..8)")
    sp.add_argument("--full-scan", action="store_true", help="solve every labeled graph, not one degree-sorted labeling per class")

    sp = sub.add_parser("kiteopt", parents=[common], help="best kite split for each n")
    sp.add_argument("--n", help="comma-separated vertex counts, each >= 5")
    sp.add_argument("--table", action="store_true", help="dump the full (s, log gamma) table")

    sp = sub.add_parser("verify", parents=[common], help="run a named invariant suite")
    sp.add_argument("suite", help=f"one of {', '.join(SUITES)}, all")
    sp.set_defaults(n=None)

    sp = sub.add_parser("perturb", parents=[common], help="effect of one edge edit")
    sp.add_argument("graph", nargs="?", help="family spec or graph6 string")
    sp.add_argument("--edge", required=True, help="u,v")
    sp.add_argument("--tracked", type=int, required=True, help="vertex whose entry change is delta2")
    sp.add_argument("--remove", action="store_true", help="delete the edge instead of adding it")
    sp.add_argument("--n-cond", type=int, default=None, help="n used in the conditions (default: vertex count)")
    sp.set_defaults(n=None)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        cfg = RunConfig(args.subcommand, args.n, args.input, args.format, args.tol, args.threads, args.seed)
        status, records = COMMANDS[args.subcommand](args, cfg)
    except (UsageError, gr.GraphError, Graph6Error, EdgeListError, DisconnectedGraphError,
            PerturbationError, SearchError) as exc:
        print(f"kiteratio {args.subcommand}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConvergenceError as exc:
        print(f"kiteratio {args.subcommand}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    text = render(records, cfg.output_format)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
