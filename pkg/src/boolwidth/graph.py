"""Undirected simple graphs with string labels, plus readers and generators.

Vertices are dense indices 0..n-1; external names live in .labels.  The
adjacency is stored both as VertexSets (API surface) and as a tuple of
raw bitmasks (.adj_masks) for the kernels.  No self-loops, no parallel
edges; parsers drop duplicates silently and reject malformed records
with a 1-based line number.
"""

from __future__ import annotations

from typing import Iterable

from .bitset import VertexSet
from .errors import ParseError, PathDecompositionError
from .rng import XorShift64Star


class Graph:
    __slots__ = ("n", "adj", "adj_masks", "labels", "meta")

    def __init__(self, n, edges=(), labels=None, meta=None):
        if labels is None:
            labels = tuple(str(v) for v in range(n))
        else:
            labels = tuple(labels)
            if len(labels) != n:
                raise ValueError("labels length must equal n")
            if len(set(labels)) != n:
                raise ValueError("labels must be unique")
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range")
            if u == v:
                continue
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self.n = n
        self.adj_masks = tuple(masks)
        self.adj = tuple(VertexSet.from_mask(n, m) for m in masks)
        self.labels = labels
        self.meta = dict(meta) if meta else {}

    def neighbors(self, v: int) -> VertexSet:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return self.adj_masks[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return (self.adj_masks[u] >> v) & 1 == 1

    def edges(self):
        for u in range(self.n):
            m = self.adj_masks[u] >> (u + 1)
            while m:
                low = m & -m
                yield (u, u + 1 + low.bit_length() - 1)
                m ^= low

    @property
    def edge_count(self) -> int:
        return sum(self.degree(v) for v in range(self.n)) // 2

    @property
    def density(self) -> float:
        if self.n < 2:
            return 0.0
        return self.edge_count / (self.n * (self.n - 1) / 2)

    def vertex_set(self) -> VertexSet:
        return VertexSet.full(self.n)

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"unknown vertex name {label!r}") from None

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count})"


def erdos_renyi(n: int, p: float, seed: int) -> Graph:
    """G(n, p) with one PRNG draw per vertex pair, pairs in (i, j) i<j
    lexicographic order; edge present iff draw < p."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    rng = XorShift64Star(seed)
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                edges.append((i, j))
    meta = {"generator": XorShift64Star.name, "seed": seed, "p": p}
    return Graph(n, edges, meta=meta)


def _read_text(source) -> list[str]:
    if hasattr(source, "read"):
        source = source.read()
    return source.splitlines()


def parse_dgf(source) -> Graph:
    """DGF reader: 'c' comments, optional 'p' header, 'n <name>' vertex
    registration, 'e <name> <name>' edges.  Vertex indices follow first
    appearance order of names."""
    names: dict[str, int] = {}
    pending: list[tuple[int, int]] = []

    def vid(name):
        if name not in names:
            names[name] = len(names)
        return names[name]

    for lineno, raw in enumerate(_read_text(source), start=1):
        tokens = raw.split()
        if not tokens:
            continue
        kind = tokens[0]
        if kind in ("c", "p"):
            continue
        if kind == "n":
            if len(tokens) < 2:
                raise ParseError("vertex line needs a name", lineno)
            vid(tokens[1])
        elif kind == "e":
            if len(tokens) != 3:
                raise ParseError(
                    f"edge line needs two endpoints, got {len(tokens) - 1}", lineno
                )
            pending.append((vid(tokens[1]), vid(tokens[2])))
        else:
            raise ParseError(f"unknown record type {kind!r}", lineno)
    labels = tuple(sorted(names, key=names.get))
    return Graph(len(names), pending, labels=labels)


def parse_dimacs_col(source) -> Graph:
    """DIMACS coloring reader: 'p edge <n> <m>' header, 1-based 'e u v'
    lines.  Labels are the 1-based numerals."""
    n = None
    pending: list[tuple[int, int]] = []
    for lineno, raw in enumerate(_read_text(source), start=1):
        tokens = raw.split()
        if not tokens:
            continue
        kind = tokens[0]
        if kind == "c":
            continue
        if kind == "p":
            if len(tokens) != 4 or tokens[1] not in ("edge", "edges", "col"):
                raise ParseError("header must be 'p edge <n> <m>'", lineno)
            try:
                n = int(tokens[2])
            except ValueError:
                raise ParseError("vertex count is not an integer", lineno) from None
            if n < 0:
                raise ParseError("vertex count must be non-negative", lineno)
        elif kind == "e":
            if n is None:
                raise ParseError("edge before 'p' header", lineno)
            if len(tokens) != 3:
                raise ParseError(
                    f"edge line needs two endpoints, got {len(tokens) - 1}", lineno
                )
            try:
                u, v = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise ParseError("edge endpoints must be integers", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"endpoint out of range 1..{n}", lineno)
            pending.append((u - 1, v - 1))
        else:
            raise ParseError(f"unknown record type {kind!r}", lineno)
    if n is None:
        raise ParseError("missing 'p edge' header")
    labels = tuple(str(v + 1) for v in range(n))
    return Graph(n, pending, labels=labels)


def load_graph(path) -> Graph:
    """Dispatch on extension: .col is DIMACS coloring, anything else DGF."""
    text = open(path).read()
    if str(path).endswith(".col"):
        g = parse_dimacs_col(text)
    else:
        g = parse_dgf(text)
    g.meta["source"] = str(path)
    return g


def write_dgf(g: Graph) -> str:
    """Canonical DGF: metadata comments, isolated vertices as 'n' lines,
    edges sorted by index pair, original labels."""
    out = []
    for key in sorted(g.meta):
        out.append(f"c {key} {g.meta[key]}")
    for v in range(g.n):
        if g.degree(v) == 0:
            out.append(f"n {g.labels[v]}")
    for u, v in g.edges():
        out.append(f"e {g.labels[u]} {g.labels[v]}")
    return "\n".join(out) + "\n"


def connected_components(g: Graph) -> list[VertexSet]:
    """Components as VertexSets, ordered by their smallest vertex."""
    seen = 0
    comps = []
    full = (1 << g.n) - 1
    for v in range(g.n):
        if (seen >> v) & 1:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                nxt |= g.adj_masks[low.bit_length() - 1]
                m ^= low
            frontier = nxt & ~comp & full
            comp |= frontier
        seen |= comp
        comps.append(VertexSet.from_mask(g.n, comp))
    return comps


def induced_subgraph(g: Graph, vs: VertexSet) -> tuple[Graph, list[int]]:
    """Subgraph on vs with dense reindexing; returns (subgraph, old_ids)
    where old_ids[new] = old.  Labels carry over."""
    old_ids = sorted(vs)
    pos = {old: new for new, old in enumerate(old_ids)}
    edges = [
        (pos[u], pos[v]) for u, v in g.edges() if u in vs and v in vs
    ]
    labels = tuple(g.labels[old] for old in old_ids)
    return Graph(len(old_ids), edges, labels=labels), old_ids


def bfs_start_vertex(g: Graph, origin: int, double: bool = False) -> int:
    """Smallest-index vertex in the last BFS level from origin; with
    double=True the process repeats once from that result."""
    if not 0 <= origin < g.n:
        raise ValueError(f"origin {origin} out of range")

    def last_level_min(src):
        visited = 1 << src
        level = visited
        while True:
            nxt = 0
            m = level
            while m:
                low = m & -m
                nxt |= g.adj_masks[low.bit_length() - 1]
                m ^= low
            nxt &= ~visited
            if nxt == 0:
                return (level & -level).bit_length() - 1
            visited |= nxt
            level = nxt

    found = last_level_min(origin)
    if double:
        found = last_level_min(found)
    return found


class PathDecomposition:
    """Sequence of bags (VertexSets).  validate() enforces the three
    path-decomposition rules and names the violated one."""

    def __init__(self, bags: Iterable[VertexSet]):
        self.bags = list(bags)

    def max_bag_size(self) -> int:
        return max((len(b) for b in self.bags), default=0)

    def validate(self, g: Graph) -> None:
        union = 0
        for b in self.bags:
            if b.n != g.n:
                raise PathDecompositionError(
                    "vertex-coverage", f"bag capacity {b.n} does not match n={g.n}"
                )
            union |= b.mask
        if union != (1 << g.n) - 1:
            missing = VertexSet.from_mask(g.n, ((1 << g.n) - 1) ^ union)
            raise PathDecompositionError(
                "vertex-coverage", f"vertices {sorted(missing)} appear in no bag"
            )
        for u, v in g.edges():
            if not any(u in b and v in b for b in self.bags):
                raise PathDecompositionError(
                    "edge-coverage", f"edge ({u}, {v}) is in no bag"
                )
        for v in range(g.n):
            hits = [i for i, b in enumerate(self.bags) if v in b]
            if hits and hits[-1] - hits[0] + 1 != len(hits):
                raise PathDecompositionError(
                    "contiguity", f"bags containing vertex {v} are not consecutive"
                )


def order_from_path_decomposition(g: Graph, pd: PathDecomposition):
    """Linear order from a path decomposition: each vertex is emitted at
    its first bag of occurrence, bags left to right, ascending index
    inside a bag.  At every prefix cut the left vertices that still have
    right neighbors all sit in a single bag, so |UN| <= 2^(max bag size)
    and the width is at most pathwidth + 1."""
    pd.validate(g)
    order = []
    placed = 0
    for b in pd.bags:
        for v in sorted(b):
            if not (placed >> v) & 1:
                order.append(v)
                placed |= 1 << v
    from .decomposition import LinearDecomposition

    return LinearDecomposition.measure(g, order)
