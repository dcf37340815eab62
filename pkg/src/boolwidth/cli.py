"""Command-line front end.

Four subcommands: decompose (heuristic or exact ordering of a graph
file), solve (a (sigma, rho) problem on a decomposition), bench
(random-graph width/time CSV sweeps), verify (re-measure a
decomposition file and compare declared vs actual width).

Exit codes: 0 success, 1 input/validation error, 2 time limit
exceeded (also argparse usage errors), 3 problem infeasible.
"""

from __future__ import annotations

import argparse
import sys
import time

from .decomposition import (
    LinearDecomposition,
    format_decomposition,
    read_decomposition,
    resolve_order,
    write_cuts_csv,
)
from .errors import ParseError, ScaleLimitError, TimeLimitExceeded
from .exact import lbw_exact
from .graph import connected_components, erdos_renyi, induced_subgraph, load_graph
from .heuristics import SCORES, HeuristicConfig, decompose_graph
from .rng import XorShift64Star
from . import sigma_rho as sr

CSV_HEADER = "graph,n,density,strategy,width,time_s,nec,ub1,ub2,ub3,result"

DECOMPOSE_STRATEGIES = SCORES + ("exact", "random")
BENCH_STRATEGIES = SCORES + ("random", "exact")


def _fail(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return 1


def _load(path):
    try:
        return load_graph(path)
    except FileNotFoundError:
        raise ValueError(f"no such file: {path}") from None
    except ParseError as e:
        raise ValueError(f"{path}: {e}") from None


def _random_order(g, seed: int) -> list[int]:
    order = list(range(g.n))
    XorShift64Star(seed).shuffle(order)
    return order


def _exact_order(g) -> list[int]:
    """Exact minimum-width ordering, per connected component."""
    order = []
    for comp in connected_components(g):
        sub, old_ids = induced_subgraph(g, comp)
        res = lbw_exact(sub)
        order.extend(old_ids[v] for v in res.ordering)
    return order


def _decompose(g, strategy, starts, candidates, seed, deadline):
    if strategy == "exact":
        return LinearDecomposition.measure(g, _exact_order(g))
    if strategy == "random":
        return LinearDecomposition.measure(g, _random_order(g, seed))
    cfg = HeuristicConfig(score=strategy, candidates=candidates, starts=starts)
    return decompose_graph(g, cfg, deadline)


def cmd_decompose(args) -> int:
    if args.strategy not in DECOMPOSE_STRATEGIES:
        raise ValueError(f"unknown strategy {args.strategy!r}; "
                         f"choose from {', '.join(DECOMPOSE_STRATEGIES)}")
    g = _load(args.input)
    deadline = time.monotonic() + args.time_limit if args.time_limit else None
    dec = _decompose(g, args.strategy, args.starts, args.candidates,
                     args.seed, deadline)
    line = f"width {dec.width:.2f}"
    if args.raw:
        line += f" max-un {dec.max_un}"
    print(line)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(format_decomposition(g, dec))
    if args.cuts_csv:
        with open(args.cuts_csv, "w", newline="") as fh:
            write_cuts_csv(fh, dec)
    return 0


def _order_for_solve(g, args, deadline):
    if args.decomposition == "auto":
        cfg = HeuristicConfig(score="iun", candidates="n2", starts="all")
        return decompose_graph(g, cfg, deadline)
    with open(args.decomposition) as fh:
        _, labels = read_decomposition(fh)
    return LinearDecomposition.measure(g, resolve_order(g, labels))


def _spec_for_solve(args) -> sr.SigmaRhoSpec:
    if args.problem != "custom":
        return sr.preset(args.problem)
    if not (args.sigma and args.rho):
        raise ValueError("--problem custom requires --sigma and --rho")
    objective = {"max": "maximize", "min": "minimize",
                 "maximize": "maximize", "minimize": "minimize"}.get(args.objective)
    if objective is None:
        raise ValueError(f"unknown objective {args.objective!r}")
    return sr.SigmaRhoSpec(sr.MembershipSet.parse(args.sigma),
                           sr.MembershipSet.parse(args.rho), objective)


def cmd_solve(args) -> int:
    g = _load(args.input)
    deadline = time.monotonic() + args.time_limit if args.time_limit else None
    spec = _spec_for_solve(args)
    dec = _order_for_solve(g, args, deadline)
    t0 = time.perf_counter()
    res = sr.solve_sigma_rho(g, spec, dec.order)
    elapsed = time.perf_counter() - t0
    nec = sr.nec_of_decomposition(g, dec.order, spec.d)
    ub = sr.bounds(g, dec.order, spec.d)
    result = res.size if res.feasible else "infeasible"
    print(CSV_HEADER)
    print(",".join([
        args.input, str(g.n), f"{g.density:.4f}", args.problem,
        f"{dec.width:.2f}", f"{elapsed:.6f}", str(nec),
        f"{ub['ub1']:.2f}", f"{ub['ub2']:.2f}", f"{ub['ub3']:.2f}", str(result),
    ]))
    if not res.feasible:
        return 3
    print("witness " + " ".join(g.labels[v] for v in sorted(res.witness)))
    return 0


def _parse_grid(text: str) -> list[float]:
    try:
        start, stop, step = (float(t) for t in text.split(":"))
    except ValueError:
        raise ValueError(f"cannot parse p-grid {text!r}; want start:stop:step") from None
    if step <= 0 or not (0 <= start <= stop <= 1):
        raise ValueError(f"bad p-grid {text!r}")
    grid = []
    k = 0
    while True:
        p = start + k * step
        if p > stop + 1e-9:
            break
        grid.append(round(p, 9))
        k += 1
    return grid


def cmd_bench(args) -> int:
    strategies = [s.strip() for s in args.strategies.split(",") if s.strip()]
    if args.exact and "exact" not in strategies:
        strategies.append("exact")
    for s in strategies:
        if s not in BENCH_STRATEGIES:
            raise ValueError(f"unknown strategy {s!r}")
    grid = _parse_grid(args.p_grid)
    master = XorShift64Star(args.seed)
    out = open(args.output, "w") if args.output else sys.stdout
    try:
        print(CSV_HEADER, file=out)
        for p in grid:
            for rep in range(args.per_cell):
                gseed = master.next_u64()
                g = erdos_renyi(args.n, p, seed=gseed)
                name = f"gnp-n{args.n}-p{p:.2f}-r{rep}"
                dens = f"{g.density:.4f}"
                for strat in strategies:
                    t0 = time.perf_counter()
                    dec = _decompose(g, strat, "all", "n2",
                                     gseed ^ 0x9E3779B97F4A7C15, None)
                    elapsed = time.perf_counter() - t0
                    tfield = "" if args.no_times else f"{elapsed:.6f}"
                    print(f"{name},{args.n},{dens},{strat},"
                          f"{dec.width:.2f},{tfield},,,,,", file=out)
    finally:
        if args.output:
            out.close()
    return 0


def cmd_verify(args) -> int:
    g = _load(args.input)
    try:
        with open(args.decomposition) as fh:
            declared, labels = read_decomposition(fh)
        order = resolve_order(g, labels)
    except (ValueError, ParseError, FileNotFoundError) as e:
        return _fail(str(e))
    dec = LinearDecomposition.measure(g, order)
    if abs(dec.width - declared) <= 0.005:
        print(f"ok width {dec.width:.2f}")
        return 0
    print(f"error: declared width {declared:.2f} but measured {dec.width:.2f}",
          file=sys.stderr)
    return 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="boolw",
        description="Linear boolean-width decompositions and (sigma, rho) problems.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    d = sub.add_parser("decompose", help="order a graph and report the width")
    d.add_argument("--input", required=True)
    d.add_argument("--strategy", default="iun")
    d.add_argument("--starts", default="all", choices=("dbfs", "2", "all"))
    d.add_argument("--candidates", default="n2", choices=("right", "n2"))
    d.add_argument("--output", help="write the decomposition file here")
    d.add_argument("--cuts-csv", help="write per-cut statistics here")
    d.add_argument("--seed", type=int, default=0,
                   help="only the random strategy draws from it")
    d.add_argument("--time-limit", type=float, default=None)
    d.add_argument("--raw", action="store_true",
                   help="also print the raw max |UN| integer")
    d.set_defaults(fn=cmd_decompose)

    s = sub.add_parser("solve", help="optimal (sigma, rho)-set on a decomposition")
    s.add_argument("--input", required=True)
    s.add_argument("--decomposition", default="auto",
                   help="decomposition file, or 'auto' for the iun heuristic")
    s.add_argument("--problem", default="mim",
                   choices=("mim", "independent-set", "dominating-set", "custom"))
    s.add_argument("--sigma")
    s.add_argument("--rho")
    s.add_argument("--objective", default="max")
    s.add_argument("--time-limit", type=float, default=None)
    s.set_defaults(fn=cmd_solve)

    b = sub.add_parser("bench", help="random-graph CSV sweep")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--p-grid", default="0.05:0.95:0.05")
    b.add_argument("--per-cell", type=int, default=20)
    b.add_argument("--strategies", default="iun,rn1,rn2,rn3,random")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--exact", action="store_true",
                   help="append the exact solver to the strategy list")
    b.add_argument("--no-times", action="store_true",
                   help="blank the time column for reproducible output")
    b.add_argument("--output")
    b.set_defaults(fn=cmd_bench)

    v = sub.add_parser("verify", help="re-measure a decomposition file")
    v.add_argument("--input", required=True)
    v.add_argument("--decomposition", required=True)
    v.set_defaults(fn=cmd_verify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except TimeLimitExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (ValueError, ScaleLimitError, OSError) as e:
        return _fail(str(e))


if __name__ == "__main__":
    sys.exit(main())
