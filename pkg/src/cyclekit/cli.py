"""Command-line interface: counting, bounds, constructions, reduction, search.

Structured mode (--output kv) prints one key=value per line with exact values
(integers plain, rationals as p/q, directed high-precision values as decimal
strings).  Timing goes to stderr so stdout is byte-deterministic for a fixed
seed and argv.  Exit codes: 0 ok, 1 usage, 2 input error, 3 capacity or
precondition violation.
"""

from __future__ import annotations

import argparse
import random
import sys
import time
from dataclasses import dataclass
from fractions import Fraction

from . import bounds as bounds_mod
from . import constructions as cons
from .counting import count_cycles, count_cycles_multi, count_paths
from .errors import (CapacityError, CycleKitError, DomainError,
                     GraphParseError, PreconditionError)
from .graphs import (Multigraph, SimpleGraph, parse_graph6, parse_multigraph,
                     write_graph6, write_multigraph)
from .reduction import StepLimitExceeded, reduce_to_bounded_degree
from .search import extremal_search, verify_bounds_on_corpus

USAGE_ERROR, INPUT_ERROR, CAPACITY_ERROR = 1, 2, 3


@dataclass
class RunConfig:
    subcommand: str
    source: str | None      # path, inline graph text, or None for stdin
    fmt: str                # graph6 | multi | auto
    output: str             # text | kv
    workers: int
    seed: int


def _fmt_value(x) -> str:
    if isinstance(x, bool):
        return "1" if x else "0"
    if isinstance(x, Fraction):
        return str(x)            # p/q, or plain integer when q == 1
    if isinstance(x, int):
        return str(x)
    return str(x)                # mpfr: fixed precision, deterministic


def _emit(out, mode: str, key: str, value, label: str | None = None):
    if mode == "kv":
        print(f"{key}={_fmt_value(value)}", file=out)
    else:
        print(f"{label or key}: {_fmt_value(value)}", file=out)


def _read_source(cfg: RunConfig) -> str:
    import os
    if cfg.source is None or cfg.source == "-":
        return sys.stdin.read()
    if os.path.exists(cfg.source):
        try:
            with open(cfg.source, "r", encoding="ascii") as fh:
                return fh.read()
        except OSError as exc:
            raise GraphParseError(f"cannot read {cfg.source}: {exc}") from None
    return cfg.source            # inline graph text


def _load_graph(cfg: RunConfig) -> SimpleGraph | Multigraph:
    text = _read_source(cfg)
    fmt = cfg.fmt
    if fmt == "auto":
        fmt = "multi" if text.lstrip().startswith(("MULTI", "#")) else "graph6"
    if fmt == "multi":
        return parse_multigraph(text)
    return parse_graph6(text)


def _add_io_args(p: argparse.ArgumentParser, with_input: bool = True):
    if with_input:
        p.add_argument("input", nargs="?", default=None,
                       help="path, inline graph text, or '-' for stdin")
        p.add_argument("--format", choices=("graph6", "multi", "auto"),
                       default="auto", dest="fmt")
    p.add_argument("--output", choices=("text", "kv"), default="text")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cyclekit",
                                 description="Exact cycle counts, bounds, "
                                             "constructions, and search.")
    sub = ap.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("count", help="count simple cycles")
    _add_io_args(p)
    p.add_argument("--method", choices=("auto", "dfs", "dp"), default="auto")

    p = sub.add_parser("count-paths", help="count simple paths s -> t")
    p.add_argument("-s", type=int, required=True)
    p.add_argument("-t", type=int, required=True)
    _add_io_args(p)

    p = sub.add_parser("bounds", help="evaluate every bound formula")
    _add_io_args(p)

    p = sub.add_parser("construct", help="emit an extremal construction")
    p.add_argument("family", choices=("hn", "gn", "lb", "cnm"))
    p.add_argument("params", type=int, nargs="+")
    _add_io_args(p, with_input=False)

    p = sub.add_parser("reduce", help="lower the maximum degree to 11")
    _add_io_args(p)

    p = sub.add_parser("search", help="exact max cycle count for m edges")
    p.add_argument("--edges", type=int, required=True)
    p.add_argument("--no-prune", action="store_true")
    _add_io_args(p, with_input=False)

    p = sub.add_parser("verify", help="check all bounds on small graphs")
    p.add_argument("--nmax", type=int, default=6)
    _add_io_args(p, with_input=False)
    return ap


def run(argv: list[str], out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else USAGE_ERROR
    cfg = RunConfig(args.subcommand, getattr(args, "input", None),
                    getattr(args, "fmt", "auto"), args.output,
                    args.workers, args.seed)
    try:
        return _dispatch(args, cfg, out, err)
    except GraphParseError as exc:
        print(f"error: {exc}", file=err)
        return INPUT_ERROR
    except (CapacityError, DomainError, PreconditionError,
            StepLimitExceeded) as exc:
        print(f"error: {exc}", file=err)
        return CAPACITY_ERROR
    except CycleKitError as exc:
        print(f"error: {exc}", file=err)
        return INPUT_ERROR


def _dispatch(args, cfg: RunConfig, out, err) -> int:
    mode = cfg.output
    t0 = time.monotonic()
    if cfg.subcommand == "count":
        g = _load_graph(cfg)
        if isinstance(g, Multigraph):
            c = count_cycles_multi(g)
        else:
            c = count_cycles(g, method=args.method, workers=cfg.workers)
        _emit(out, mode, "cycles", c)
    elif cfg.subcommand == "count-paths":
        g = _load_graph(cfg)
        _emit(out, mode, "paths", count_paths(g, args.s, args.t))
    elif cfg.subcommand == "bounds":
        _run_bounds(_load_graph(cfg), mode, out)
    elif cfg.subcommand == "construct":
        _run_construct(args, mode, out)
    elif cfg.subcommand == "reduce":
        _run_reduce(_load_graph(cfg), cfg, mode, out)
    elif cfg.subcommand == "search":
        _run_search(args, cfg, mode, out)
    elif cfg.subcommand == "verify":
        _run_verify(args, mode, out)
    print(f"elapsed: {time.monotonic() - t0:.3f}s", file=err)
    return 0


def _run_bounds(g, mode, out):
    rep = bounds_mod.bounds_report(g)
    if rep.ahrens_lo is not None:
        _emit(out, mode, "bound.ahrens.lo", rep.ahrens_lo)
        _emit(out, mode, "bound.ahrens.hi", rep.ahrens_hi)
    if rep.aldred_thomassen is not None:
        _emit(out, mode, "bound.at", rep.aldred_thomassen)
    if rep.new_bound is not None:
        _emit(out, mode, "bound.new", rep.new_bound)
    _emit(out, mode, "bound.corollary", rep.corollary.value)
    _emit(out, mode, "bound.corollary.implies.pow1443",
          rep.corollary.implies_pow_1443)


def _construct_graph(family: str, params: list[int]):
    if family == "hn":
        _need_params(params, 1)
        return cons.construct_hn(params[0])
    if family == "gn":
        _need_params(params, 1)
        return cons.construct_gn(params[0])
    if family == "lb":
        _need_params(params, 1)
        return cons.construct_lower_bound_graph(params[0])
    _need_params(params, 2)
    return cons.construct_cnm(cons.MultiCycleSpec(params[0], params[1]))


def _need_params(params: list[int], k: int):
    if len(params) != k:
        raise DomainError(f"expected {k} construction parameter(s), got {len(params)}")


def _run_construct(args, mode, out):
    g = _construct_graph(args.family, args.params)
    if isinstance(g, Multigraph):
        out.write(write_multigraph(g))
    else:
        print(write_graph6(g), file=out)


def _run_reduce(g, cfg: RunConfig, mode, out):
    if isinstance(g, Multigraph):
        raise DomainError("reduction is defined for simple graphs")
    before = count_cycles(g, workers=cfg.workers)
    outcome = reduce_to_bounded_degree(g, seed=cfg.seed)
    after = count_cycles(outcome.graph, workers=cfg.workers)
    if mode == "kv":
        _emit(out, mode, "steps", len(outcome.steps))
        _emit(out, mode, "cycles.before", before)
        _emit(out, mode, "cycles.after", after)
        _emit(out, mode, "graph6", write_graph6(outcome.graph))
        return
    print(f"input: n={g.n} m={g.m} cycles={before}", file=out)
    for i, st in enumerate(outcome.steps, start=1):
        print(f"step {i}: hub {st.hub} (degree {st.hub_degree})", file=out)
        dropped = tuple(st.neighbors[j] for j in st.deletion.indices)
        print(f"  cut neighbors: {dropped} "
              f"(kept weight {st.deletion.retained} >= {st.deletion.guarantee})",
              file=out)
        for gi, members in zip(st.gateway_vertices, st.part_vertices):
            print(f"  gateway {gi} <- {members}", file=out)
        print(f"  cross weight {st.partition.cross} >= {st.partition.guarantee}",
              file=out)
    print(f"result: n={outcome.graph.n} m={outcome.graph.m} cycles={after}",
          file=out)
    print(write_graph6(outcome.graph), file=out)


def _run_search(args, cfg: RunConfig, mode, out):
    prune = not args.no_prune
    res = extremal_search(args.edges, prune_max_degree=prune,
                          prune_min_degree=prune, workers=cfg.workers)
    _emit(out, mode, "cmax", res.cmax)
    _emit(out, mode, "witnesses", " ".join(res.witness_graph6))
    _emit(out, mode, "witnesses.count", len(res.witnesses))


def _run_verify(args, mode, out):
    rep = verify_bounds_on_corpus(args.nmax)
    _emit(out, mode, "graphs.checked", rep.graphs_checked)
    _emit(out, mode, "violations", len(rep.violations))
    for v in rep.violations:
        print(f"violation: {v}", file=out)
    _emit(out, mode, "ratio.ahrens", rep.ahrens.ratio)
    _emit(out, mode, "ratio.ahrens.attained",
          " ".join(rep.ahrens.attained_by[:12]))
    _emit(out, mode, "ratio.at", rep.aldred_thomassen.ratio)
    _emit(out, mode, "margin.new", f"{rep.density_bound_margin:.6g}")


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
