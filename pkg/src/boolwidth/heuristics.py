"""Greedy linear-ordering heuristics.

One driver loop serves every strategy: place a trivial-case vertex when
one exists (provably width-neutral), otherwise the candidate with the
best score, smallest index on ties.  Strategies differ only in the
score:

  rn1/rn2/rn3   relative-neighborhood ratios, O(n) per candidate; the
                run keeps no family, so a multi-start picks its winner
                by the sum of chosen scores and only the winner's width
                is measured afterwards
  lcv           |UN(Left + v)| per candidate via a fresh one-vertex
                family extension against the maintained family
  iun           same selection rule as lcv but through the incremental
                kernel, which reuses the already-extended family of the
                chosen candidate (compiled when available)

Multi-start runs the most promising initial vertices first (double-BFS
extreme, then single-BFS, then everything ascending) and threads the
incumbent width as a pruning bound: a run dies as soon as some cut's
|UN| exceeds it, which cannot discard a strictly better ordering.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

from . import _backend
from .bitset import VertexSet
from .cuts import NeighborhoodFamily, count_mis_bipartite, increment_un
from .decomposition import LinearDecomposition
from .errors import TimeLimitExceeded
from .graph import bfs_start_vertex, connected_components, induced_subgraph

SCORES = ("rn1", "rn2", "rn3", "lcv", "iun")
CANDIDATE_STRATEGIES = ("right", "n2")
START_STRATEGIES = ("dbfs", "2", "all")


@dataclass
class HeuristicConfig:
    score: str = "iun"
    candidates: str = "n2"
    starts: str = "all"
    prune_bound: int | None = None
    # Lemma 3 holds for any X subseteq Left; the default tests only
    # X = empty and X = {u} (the practical instantiation).  With
    # generalized_trivial the whole family is consulted, which needs
    # the maintained UN(Left), so iun runs take the generic driver.
    generalized_trivial: bool = False

    def __post_init__(self):
        if self.score not in SCORES:
            raise ValueError(f"unknown score {self.score!r}")
        if self.candidates not in CANDIDATE_STRATEGIES:
            raise ValueError(f"unknown candidate strategy {self.candidates!r}")
        if self.starts not in START_STRATEGIES:
            raise ValueError(f"unknown start strategy {self.starts!r}")
        if self.prune_bound is not None and self.prune_bound < 1:
            raise ValueError("prune_bound must be >= 1")


@dataclass
class GreedyState:
    left: VertexSet
    right: VertexSet
    ordering: list
    un_left: NeighborhoodFamily | None
    left_right_neighborhoods: set  # masks of N(u) cap Right, u in Left

    @classmethod
    def initial(cls, g, init, track_un):
        left = VertexSet(g.n, [init])
        right = left.complement()
        un = None
        if track_un:
            un = NeighborhoodFamily(right, [0, g.adj_masks[init] & right.mask])
        return cls(left, right, [init], un, {g.adj_masks[init] & right.mask})

    def advance(self, g, chosen):
        if self.un_left is not None:
            self.un_left = increment_un(g, self.left, self.un_left, chosen)
        cbit = 1 << chosen
        self.left = VertexSet.from_mask(g.n, self.left.mask | cbit)
        self.right = VertexSet.from_mask(g.n, self.right.mask ^ cbit)
        self.ordering.append(chosen)
        rmask = self.right.mask
        self.left_right_neighborhoods = {
            m & ~cbit for m in self.left_right_neighborhoods
        }
        self.left_right_neighborhoods.add(g.adj_masks[chosen] & rmask)


def candidates(g, state: GreedyState, strategy: str) -> VertexSet:
    """Right, or the distance-<=2 restriction N(Left + N(Left)) cap
    Right (falls back to all of right when empty)."""
    if strategy == "right":
        return state.right
    reach = state.left.mask
    for u in state.left:
        reach |= g.adj_masks[u]
    n2 = 0
    m = reach
    while m:
        low = m & -m
        n2 |= g.adj_masks[low.bit_length() - 1]
        m ^= low
    cand = n2 & state.right.mask
    return VertexSet.from_mask(g.n, cand) if cand else state.right


def trivial_case(g, state: GreedyState, cand: VertexSet,
                 generalized: bool = False) -> int | None:
    """Smallest candidate v with N(v) cap Right = N(X) cap Right for
    X = empty or X = {u}, u in Left; such a v never hurts the final
    width.  With generalized=True (and a maintained family) any
    X subseteq Left qualifies, i.e. membership in UN(Left)."""
    rmask = state.right.mask
    table = state.left_right_neighborhoods
    if generalized and state.un_left is not None:
        table = state.un_left.masks
    for v in cand:
        nvr = g.adj_masks[v] & rmask
        if nvr == 0 or nvr in table:
            return v
    return None


def score_relative_neighborhood(g, state: GreedyState, v: int, variant: str) -> float:
    """Internal = (N(v) cap N(Left)) cap Right, External = (N(v) minus
    N(Left)) cap Right; rn1 = |Ext| / (|Int| + |Ext|), rn2 = |Ext| /
    |N(v)|, rn3 = 1 - |Int| / |N(v)|.  Lower is better; all variants
    score 0 when the denominator vanishes."""
    nv = g.adj_masks[v]
    deg = nv.bit_count()
    if deg == 0:
        return 0.0
    nleft = 0
    for u in state.left:
        nleft |= g.adj_masks[u]
    rmask = state.right.mask
    internal = (nv & nleft & rmask).bit_count()
    external = (nv & ~nleft & rmask).bit_count()
    if variant == "rn1":
        return external / (internal + external) if internal + external else 0.0
    if variant == "rn2":
        return external / deg
    if variant == "rn3":
        return 1.0 - internal / deg
    raise ValueError(f"unknown RN variant {variant!r}")


def score_least_cut_value(g, state: GreedyState, v: int, via_mis: bool = False) -> int:
    """|UN(Left + v)| from the maintained family; via_mis recounts it
    as the number of maximal independent sets of the crossing-edges
    bipartite graph (oracle-scale cross-check)."""
    if via_mis:
        return count_mis_bipartite(
            g, VertexSet.from_mask(g.n, state.left.mask | (1 << v))
        )
    return len(increment_un(g, state.left, state.un_left, v))


@dataclass
class GreedyRun:
    """Outcome of one greedy run; pruned runs carry a truncated order."""

    order: list
    un_sizes: list | None  # |UN| of prefixes 1..n-1 (iun/lcv only)
    trivial: list  # per-placement trivial-case flags
    proxy: float | None  # sum of chosen scores (rn only)
    pruned: bool
    init: int = 0

    @property
    def width_count(self) -> int:
        """Raw max |UN| over proper prefixes (iun/lcv runs)."""
        return max(self.un_sizes, default=1)


def _generic_run(g, cfg, init, bound) -> GreedyRun:
    n = g.n
    track_un = cfg.score in ("lcv", "iun")
    rn = cfg.score in ("rn1", "rn2", "rn3")
    state = GreedyState.initial(g, init, track_un)
    trivial = [False]
    sizes = [len(state.un_left)] if track_un else None
    proxy = 0.0 if rn else None
    if track_un and bound and n > 1 and sizes[0] > bound:
        return GreedyRun([init], None, trivial, None, True, init)
    while state.right:
        cand = candidates(g, state, cfg.candidates)
        chosen = trivial_case(g, state, cand, cfg.generalized_trivial)
        trivial.append(chosen is not None)
        if chosen is None:
            best = None
            for v in cand:
                if track_un:
                    s = score_least_cut_value(g, state, v)
                else:
                    s = score_relative_neighborhood(g, state, v, cfg.score)
                if best is None or s < best[0]:
                    best = (s, v)
            chosen = best[1]
        if rn:
            proxy += score_relative_neighborhood(g, state, chosen, cfg.score)
        state.advance(g, chosen)
        if state.right:
            if track_un:
                sizes.append(len(state.un_left))
                if bound and sizes[-1] > bound:
                    return GreedyRun(state.ordering, None, trivial, None, True, init)
    if sizes is not None:
        sizes = sizes[: n - 1]
    return GreedyRun(state.ordering, sizes, trivial, proxy, False, init)


def generate_ordering(g, cfg: HeuristicConfig, init: int,
                      best_so_far: int | None = None) -> GreedyRun:
    """One greedy run from init.  best_so_far is a raw |UN| cap: the
    run is abandoned (pruned=True) as soon as a proper-prefix cut
    exceeds it, which can only discard orderings at least that wide."""
    if not 0 <= init < g.n:
        raise ValueError(f"init {init} out of range")
    bound = best_so_far
    if cfg.prune_bound is not None:
        bound = min(bound, cfg.prune_bound) if bound else cfg.prune_bound
    if cfg.score == "iun" and not cfg.generalized_trivial:
        out = _backend.iun_greedy(
            g.n, g.adj_masks, init, cfg.candidates == "n2", bound or 0
        )
        if out is None:
            return GreedyRun([], None, [], None, True, init)
        order, sizes, trivial = out
        return GreedyRun(order, sizes, trivial, None, False, init)
    return _generic_run(g, cfg, init, bound)


def start_vertices(g, cfg: HeuristicConfig) -> list[int]:
    """Initial vertices, most promising first: the double-BFS extreme,
    then the single-BFS one, then the rest ascending (per cfg.starts)."""
    dbl = bfs_start_vertex(g, 0, double=True)
    if cfg.starts == "dbfs":
        return [dbl]
    sgl = bfs_start_vertex(g, 0, double=False)
    starts = [dbl]
    if sgl not in starts:
        starts.append(sgl)
    if cfg.starts == "all":
        starts.extend(v for v in range(g.n) if v not in starts)
    return starts


def multi_start(g, cfg: HeuristicConfig,
                deadline: float | None = None) -> LinearDecomposition | None:
    """Best decomposition over the configured starts (g connected).

    iun/lcv thread the incumbent max |UN| as the prune bound and keep
    the first run achieving the minimum; rn keeps the run with the
    smallest score sum (trivial placements contribute their computed
    score) and measures only that winner.  Returns None only when a
    static cfg.prune_bound killed every run."""
    best_run = None
    best_key = None
    incumbent = None
    for init in start_vertices(g, cfg):
        if deadline is not None and time.monotonic() > deadline:
            raise TimeLimitExceeded("time limit hit during multi-start search")
        run = generate_ordering(g, cfg, init, incumbent)
        if run.pruned:
            continue
        if run.proxy is not None:
            key = run.proxy
        else:
            key = run.width_count
            incumbent = key if incumbent is None else min(incumbent, key)
        if best_key is None or key < best_key:
            best_key, best_run = key, run
    if best_run is None:
        return None
    return LinearDecomposition.measure(g, best_run.order)


def decompose_graph(g, cfg: HeuristicConfig,
                    deadline: float | None = None) -> LinearDecomposition:
    """Heuristic decomposition of an arbitrary graph: multi-start per
    connected component, components in smallest-vertex order."""
    order = []
    for comp in connected_components(g):
        sub, old_ids = induced_subgraph(g, comp)
        dec = multi_start(sub, cfg, deadline)
        if dec is None:
            order.extend(sorted(comp))  # every run pruned by a static cap
        else:
            order.extend(old_ids[v] for v in dec.order)
    return LinearDecomposition.measure(g, order)


def width_from_run(run: GreedyRun) -> float:
    return math.log2(run.width_count)
