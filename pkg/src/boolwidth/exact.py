"""Exact linear boolean-width.

The width of a graph is min over orderings of max over proper prefixes
of log2 |UN(prefix)|.  Writing P(X) for the best achievable maximum
|UN| over any ordering of X placed first,

    P(empty) = 0,   P(X) = min over v in X of max(|UN(X)|, P(X - v)),

and the width is log2 P(V).  The solver runs this recurrence over a
table indexed by subsets, but only touches subsets reachable through
chains whose every prefix keeps |UN| <= K: a depth-first sweep extends
families one vertex at a time (never recursing past the cap) and the
recurrence then propagates only from P values <= K.  The result is
exact whenever P(V) <= K, so the top-level solver doubles K from 1
until the stage reports a finite answer.

lbw_dp_bruteforce is the independent oracle: |UN(A)| for every subset
by direct enumeration (no incremental step), then the same recurrence
without any pruning.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import _backend
from .errors import ScaleLimitError

EXACT_MAX_N = 26  # 2^n int32 tables: ~0.6 GB at 26, past that it cannot fit


@dataclass
class ExactResult:
    width: float  # log2 P(V), or math.inf when the stage's K was too small
    ordering: list | None  # optimal ordering when finite
    explored: int  # subsets whose |UN| was computed (empty set included)
    un_count: int | None  # raw P(V) when finite

    @property
    def finite(self) -> bool:
        return math.isfinite(self.width)


def _result(pv, explored, order) -> ExactResult:
    if pv is None:
        return ExactResult(math.inf, None, explored, None)
    width = math.log2(pv) if pv > 0 else 0.0
    return ExactResult(width, order, explored, pv)


def incremental_un_exact(g, K: int) -> ExactResult:
    """One pruned stage; exact iff the true P(V) <= K, else the
    infinity marker.  Guarded to n <= EXACT_MAX_N."""
    if g.n > EXACT_MAX_N:
        raise ScaleLimitError(
            f"exact solver refuses n = {g.n} > {EXACT_MAX_N} (2^n table)"
        )
    if K < 1:
        raise ValueError("K must be >= 1")
    if g.n == 0:
        return ExactResult(0.0, [], 1, 1)
    pv, explored, order = _backend.exact_stage(g.n, g.adj_masks, K)
    return _result(pv, explored, order)


def lbw_exact(g) -> ExactResult:
    """Doubling wrapper: K = 1, 2, 4, ... until the stage is exact.
    P(V) <= 2^ceil(n/2) always, so the loop terminates well before the
    2^n cap."""
    K = 1
    while True:
        res = incremental_un_exact(g, K)
        if res.finite:
            return res
        if K >= 1 << g.n:
            raise AssertionError("stage still infinite at K = 2^n")
        K *= 2


def lbw_dp_bruteforce(g) -> ExactResult:
    """Oracle: enumerate |UN(A)| for all A (via N(X) of every subset X,
    no incremental step), then the unpruned recurrence.  O(3^n + 2^n n)
    time and O(2^n) memory; refuses n > 16."""
    n = g.n
    if n > 16:
        raise ScaleLimitError(f"lbw_dp_bruteforce refuses n = {n} > 16")
    if n == 0:
        return ExactResult(0.0, [], 1, 1)
    size = 1 << n
    full = size - 1
    nx = [0] * size
    for m in range(1, size):
        low = m & -m
        nx[m] = nx[m ^ low] | g.adj_masks[low.bit_length() - 1]
    tun = [0] * size
    for a in range(1, size):
        comp = full ^ a
        seen = set()
        sub = a
        while True:
            seen.add(nx[sub] & comp)
            if sub == 0:
                break
            sub = (sub - 1) & a
        tun[a] = len(seen)
    INF = 1 << 60
    P = [INF] * size
    pred = [-1] * size
    P[0] = 0
    for x in range(size):
        px = P[x]
        if px >= INF:
            continue
        m = full ^ x
        while m:
            low = m & -m
            v = low.bit_length() - 1
            y = x | low
            val = px if px > tun[y] else tun[y]
            if val < P[y] or (val == P[y] and v < pred[y]):
                P[y] = val
                pred[y] = v
            m ^= low
    order = []
    y = full
    while y:
        v = pred[y]
        order.append(v)
        y ^= 1 << v
    order.reverse()
    return _result(P[full], size, order)
