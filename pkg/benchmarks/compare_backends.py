"""Time the pure-Python kernels against the compiled extension on the
three hot paths: chain |UN| measurement, the IUN greedy, and one
K-doubling stage of the exact solver.

Run as `python benchmarks/compare_backends.py [--quick]`.  Both
backends are imported directly, so the comparison works regardless of
BOOLWIDTH_BACKEND.
"""

import argparse
import sys
import time

from boolwidth import _kernels_py as pure
from boolwidth.graph import erdos_renyi
from boolwidth.rng import XorShift64Star

try:
    from boolwidth import _kernels as compiled
except ImportError:
    compiled = None


def timed(fn, repeats):
    best = float("inf")
    out = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def row(label, pure_fn, comp_fn, repeats):
    tp, rp = timed(pure_fn, repeats)
    if compiled is None:
        print(f"{label:36s} {tp * 1e3:10.2f} ms {'-':>12s} {'-':>9s}")
        return
    tc, rc = timed(comp_fn, repeats)
    assert rp == rc, f"backend disagreement on {label}"
    print(f"{label:36s} {tp * 1e3:10.2f} ms {tc * 1e3:9.2f} ms {tp / tc:8.1f}x")


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--quick", action="store_true", help="smaller sizes, one repeat")
    args = ap.parse_args(argv)
    repeats = 1 if args.quick else 3

    if compiled is None:
        print("compiled extension not importable; pure timings only", file=sys.stderr)
    print(f"{'kernel':36s} {'pure':>13s} {'compiled':>12s} {'speedup':>9s}")

    rng = XorShift64Star(4242)
    sizes = [(20, 0.3), (28, 0.2)] if args.quick else [(20, 0.3), (28, 0.2), (36, 0.15)]
    for n, p in sizes:
        g = erdos_renyi(n, p, seed=rng.next_u64())
        adj = g.adj_masks
        order = list(range(n))
        XorShift64Star(rng.next_u64()).shuffle(order)
        row(f"chain_un_sizes n={n} p={p}",
            lambda: pure.chain_un_sizes(n, adj, order),
            lambda: compiled.chain_un_sizes(n, adj, order), repeats)
        row(f"iun_greedy n={n} p={p}",
            lambda: pure.iun_greedy(n, adj, 0, True, 0),
            lambda: compiled.iun_greedy(n, adj, 0, True, 0), repeats)

    n, p = (14, 0.4) if args.quick else (17, 0.4)
    g = erdos_renyi(n, p, seed=rng.next_u64())
    adj = g.adj_masks
    for K in (8, 64):
        row(f"exact_stage n={n} p={p} K={K}",
            lambda: pure.exact_stage(n, adj, K),
            lambda: compiled.exact_stage(n, adj, K), repeats)


if __name__ == "__main__":
    main()
