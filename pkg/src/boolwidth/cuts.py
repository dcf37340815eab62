"""Cut analysis: unions of neighborhoods across a vertex bipartition.

For a cut (A, complement A) the family UN(A) = {N(X) restricted to the
complement : X subseteq A} measures how many distinct ways A can "see"
across the cut; its log2 is the boolean dimension of the cut and the
maximum over the prefix cuts of an ordering is the ordering's width.

Three independent routes to |UN(A)| live here and keep each other
honest in the tests: the incremental one-vertex extension (the fast
path used everywhere), direct enumeration over all 2^|A| subsets, and
counting maximal independent sets of the bipartite graph that keeps
only the edges crossing the cut.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from . import _backend
from .bitset import VertexSet
from .errors import ScaleLimitError


class NeighborhoodFamily:
    """Deduplicated family of neighborhood unions over a fixed universe
    (the side of the cut being looked at).  The empty set is always a
    member: N(empty set) = empty set."""

    __slots__ = ("universe", "_masks")

    def __init__(self, universe: VertexSet, members):
        masks = set()
        for s in members:
            m = s.mask if isinstance(s, VertexSet) else int(s)
            if m & ~universe.mask:
                raise ValueError("family member outside the universe")
            masks.add(m)
        masks.add(0)
        self.universe = universe
        self._masks = frozenset(masks)

    @property
    def masks(self) -> frozenset:
        return self._masks

    def __len__(self) -> int:
        return len(self._masks)

    def __contains__(self, s) -> bool:
        m = s.mask if isinstance(s, VertexSet) else int(s)
        return m in self._masks

    def __iter__(self) -> Iterator[VertexSet]:
        n = self.universe.n
        for m in sorted(self._masks):
            yield VertexSet.from_mask(n, m)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, NeighborhoodFamily)
            and self.universe == other.universe
            and self._masks == other._masks
        )

    def __hash__(self):
        return hash((self.universe, self._masks))

    @property
    def booldim(self) -> float:
        return math.log2(len(self._masks))

    def __repr__(self):
        return f"NeighborhoodFamily(|members|={len(self)})"


@dataclass(frozen=True)
class CutStats:
    """Per-cut record: |UN|, its log2, and the twin-class counts of the
    two sides (vertices grouped by identical across-cut neighborhoods)."""

    un_count: int
    booldim: float
    ntc_left: int
    ntc_right: int


def increment_un(g, X: VertexSet, unX: NeighborhoodFamily, v: int) -> NeighborhoodFamily:
    """UN(X + v) from UN(X): every member S maps to S \\ {v} and to
    (S \\ {v}) union (N(v) restricted to the shrunken universe).  Cost
    O(|UN(X)|) set operations; the family at most doubles."""
    if v in X:
        raise ValueError(f"vertex {v} already in X")
    vbit = 1 << v
    universe = VertexSet.from_mask(g.n, unX.universe.mask & ~vbit)
    nv = g.adj_masks[v] & universe.mask
    out = set()
    for m in unX.masks:
        s0 = m & ~vbit
        out.add(s0)
        out.add(s0 | nv)
    return NeighborhoodFamily(universe, out)


def un_of_set(g, A: VertexSet) -> NeighborhoodFamily:
    """UN(A) by folding increment_un over A's vertices in ascending
    order (fast path; exact same family as enumeration)."""
    X = VertexSet(g.n)
    fam = NeighborhoodFamily(X.complement(), [0])
    for v in A:
        fam = increment_un(g, X, fam, v)
        X = VertexSet.from_mask(g.n, X.mask | (1 << v))
    return fam


def un_bruteforce(g, A: VertexSet) -> NeighborhoodFamily:
    """UN(A) by enumerating N(X) for every X subseteq A.  Oracle only:
    refuses |A| > 20."""
    k = len(A)
    if k > 20:
        raise ScaleLimitError(f"un_bruteforce refuses |A| = {k} > 20")
    members = list(A)
    comp = ((1 << g.n) - 1) ^ A.mask
    nx = [0] * (1 << k)
    for m in range(1, 1 << k):
        low = m & -m
        nx[m] = nx[m ^ low] | g.adj_masks[members[low.bit_length() - 1]]
    out = {x & comp for x in nx}
    return NeighborhoodFamily(A.complement(), out)


def count_mis_bipartite(g, A: VertexSet) -> int:
    """Number of maximal independent sets of the bipartite graph on V
    that keeps exactly the edges crossing (A, complement A).  Equals
    |UN(A)|.  Include/exclude branching on a max-degree vertex; an
    excluded vertex with no undecided neighbor can never be dominated,
    which kills that branch.  Oracle only: refuses n > 32."""
    if g.n > 32:
        raise ScaleLimitError(f"count_mis_bipartite refuses n = {g.n} > 32")
    amask = A.mask
    comp = ((1 << g.n) - 1) ^ amask
    bip = [
        g.adj_masks[v] & (comp if (amask >> v) & 1 else amask)
        for v in range(g.n)
    ]

    def rec(P, X):
        if P == 0:
            return 1 if X == 0 else 0
        u, best = -1, -1
        m = P
        while m:
            low = m & -m
            v = low.bit_length() - 1
            d = (bip[v] & P).bit_count()
            if d > best:
                u, best = v, d
            m ^= low
        nu = bip[u]
        total = rec(P & ~(nu | (1 << u)), X & ~nu)
        if nu & P:
            total += rec(P ^ (1 << u), X | (1 << u))
        return total

    return rec((1 << g.n) - 1, 0)


def twin_class_count(g, A: VertexSet) -> int:
    """Number of distinct across-cut neighborhoods among A's vertices
    (0 for the empty side)."""
    comp = ((1 << g.n) - 1) ^ A.mask
    return len({g.adj_masks[v] & comp for v in A})


def width_of_ordering(g, order) -> tuple[float, list[CutStats]]:
    """Width (bits) of a vertex ordering and the per-prefix statistics
    for cuts i = 1..n-1; the full-set cut always has |UN| = 1 and is
    ignored.  Width of a graph on < 2 vertices is 0."""
    if sorted(order) != list(range(g.n)):
        raise ValueError("order is not a permutation of the vertices")
    sizes = _backend.chain_un_sizes(g.n, g.adj_masks, list(order))
    stats = []
    left = 0
    full = (1 << g.n) - 1
    for i in range(g.n - 1):
        left |= 1 << order[i]
        right = full ^ left
        ntc_l = len({g.adj_masks[v] & right for v in VertexSet.from_mask(g.n, left)})
        ntc_r = len({g.adj_masks[v] & left for v in VertexSet.from_mask(g.n, right)})
        stats.append(
            CutStats(
                un_count=sizes[i],
                booldim=math.log2(sizes[i]),
                ntc_left=ntc_l,
                ntc_right=ntc_r,
            )
        )
    width = max((s.booldim for s in stats), default=0.0)
    return width, stats
