"""(sigma, rho) vertex-subset problems on a linear decomposition.

A set X is a (sigma, rho)-set when every vertex v satisfies
|N(v) cap X| in sigma (for v in X) or rho (for v not in X), with sigma
and rho finite or cofinite subsets of the naturals.  All counting can
be capped at d = max(d(sigma), d(rho)), where d(N) = 0 and otherwise
d(mu) is one past the largest element of mu's finite part: whether a
count lies in mu depends only on min(d, count).

Capped counting induces an equivalence on subsets of a cut side A:
X and Y are equivalent when min(d, |N(u) cap X|) agrees for every u
outside A.  The class count (nec) governs the solver: walking a vertex
ordering left to right, a table indexed by (class of X cap A_i, class
of X cap complement of A_i) carries the best partial size.  The
crossing vertex's constraint is checked at crossing time from the two
capped counts, and the guessed outer class is threaded backwards by
representative arithmetic until, at the far right, it must be the
class of the empty set.  One linear pass, O(nec^2) entries per cut.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bitset import VertexSet
from .cuts import width_of_ordering
from .errors import ScaleLimitError

_NEG = -(1 << 30)


class MembershipSet:
    """Finite or cofinite subset of the naturals.  For kind 'finite',
    elements is the set itself; for 'cofinite' it is the complement's
    finite part.  Finite sets must be non-empty: the d-function has no
    value on the empty set, so it is rejected outright."""

    __slots__ = ("kind", "elements")

    def __init__(self, kind, elements=()):
        if kind not in ("finite", "cofinite"):
            raise ValueError(f"unknown kind {kind!r}")
        elements = frozenset(int(x) for x in elements)
        if any(x < 0 for x in elements):
            raise ValueError("elements must be non-negative")
        if elements and max(elements) >= 64:
            raise ValueError("elements must stay below 64")
        if kind == "finite" and not elements:
            raise ValueError("the empty set has no d-value; refusing sigma/rho = {}")
        self.kind = kind
        self.elements = elements

    @classmethod
    def naturals(cls):
        return cls("cofinite", ())

    @classmethod
    def parse(cls, text: str) -> "MembershipSet":
        """Accepts 'N', 'N\\{0,1}', or '{1,3}'."""
        s = text.replace(" ", "")
        if s == "N":
            return cls.naturals()
        if s.startswith("N\\"):
            body = s[2:]
        else:
            body = s
        if not (body.startswith("{") and body.endswith("}")):
            raise ValueError(f"cannot parse membership set {text!r}")
        inner = body[1:-1]
        try:
            items = [int(t) for t in inner.split(",")] if inner else []
        except ValueError:
            raise ValueError(f"cannot parse membership set {text!r}") from None
        return cls("cofinite" if s.startswith("N\\") else "finite", items)

    def contains(self, x: int) -> bool:
        return (x in self.elements) == (self.kind == "finite")

    def __str__(self):
        body = "{" + ",".join(str(x) for x in sorted(self.elements)) + "}"
        if self.kind == "finite":
            return body
        return "N" if not self.elements else "N\\" + body

    def __repr__(self):
        return f"MembershipSet({self})"

    def __eq__(self, other):
        if not isinstance(other, MembershipSet):
            return NotImplemented
        return self.kind == other.kind and self.elements == other.elements

    def __hash__(self):
        return hash((self.kind, self.elements))


def d_of(mu: MembershipSet) -> int:
    """d(N) = 0; otherwise 1 + max of the finite part, beyond which
    membership is constant."""
    if not mu.elements:
        return 0
    return 1 + max(mu.elements)


def contains_capped(mu: MembershipSet, c: int, d: int) -> bool:
    """Membership decided from a count capped at d; requires
    d >= d(mu), so a capped-out count lies in mu iff mu is cofinite."""
    if c < d:
        return mu.contains(c)
    return mu.kind == "cofinite"


@dataclass
class SigmaRhoSpec:
    sigma: MembershipSet
    rho: MembershipSet
    objective: str = "maximize"

    def __post_init__(self):
        if self.objective not in ("maximize", "minimize"):
            raise ValueError(f"unknown objective {self.objective!r}")

    @property
    def d(self) -> int:
        return max(d_of(self.sigma), d_of(self.rho))


PRESETS = {
    "mim": lambda: SigmaRhoSpec(
        MembershipSet("finite", [1]), MembershipSet.naturals(), "maximize"
    ),
    "independent-set": lambda: SigmaRhoSpec(
        MembershipSet("finite", [0]), MembershipSet.naturals(), "maximize"
    ),
    "dominating-set": lambda: SigmaRhoSpec(
        MembershipSet.naturals(), MembershipSet("cofinite", [0]), "minimize"
    ),
}


def preset(name: str) -> SigmaRhoSpec:
    try:
        return PRESETS[name]()
    except KeyError:
        raise ValueError(f"unknown problem preset {name!r}") from None


def d_neighborhood_vector(g, A: VertexSet, d: int, X: VertexSet) -> tuple:
    """(min(d, |N(u) cap X|)) for u outside A, ascending.  X must be a
    subset of A.  The class of X within A is exactly this tuple."""
    if not X <= A:
        raise ValueError("X must be a subset of A")
    return tuple(
        min(d, (g.adj_masks[u] & X.mask).bit_count()) for u in A.complement()
    )


class ClassFamily:
    """Capped-count equivalence classes of the subsets of one cut
    side, each with a deterministic representative.

    Class ids are discovery order: the breadth-first closure extends
    every known representative by every absent side vertex and keeps
    the first candidate (size, then lexicographic set order) whose
    vector is new.  A prefix-chain sweep over the side's vertices runs
    afterwards; it provably reaches every class, so it files anything
    the closure overlooked (the tests check it never has to)."""

    __slots__ = ("side", "d", "universe", "reps", "vectors", "index", "swept_in")

    def __init__(self, side, d, universe, reps, vectors, index, swept_in):
        self.side = side
        self.d = d
        self.universe = universe  # opposite-side vertices, ascending
        self.reps = reps  # representative masks, one per class id
        self.vectors = vectors  # capped-count bytes, one per class id
        self.index = index  # vector bytes -> class id
        self.swept_in = swept_in  # classes the closure missed; expect 0

    def __len__(self):
        return len(self.reps)

    @property
    def nec(self):
        return len(self.reps)


def _extend(vec: bytes, d: int, hits) -> bytes:
    """Vector of S + v from the vector of S (v outside S): capped
    increment at the positions of v's neighbors."""
    out = bytearray(vec)
    for p in hits:
        if out[p] < d:
            out[p] += 1
    return bytes(out)


def enumerate_classes(g, A: VertexSet, d: int) -> ClassFamily:
    if d > 250:
        raise ScaleLimitError("capped counts are stored in bytes; d > 250 unsupported")
    universe = [u for u in range(g.n) if u not in A]
    pos = {u: i for i, u in enumerate(universe)}
    hits_of = {
        v: [pos[u] for u in universe if (g.adj_masks[v] >> u) & 1] for v in A
    }
    base = bytes(len(universe))
    reps = [0]
    vectors = [base]
    index = {base: 0}
    rep_id = {0: 0}
    frontier = [0]
    while frontier:
        cands = {}
        for rmask in frontier:
            for v in A:
                if not (rmask >> v) & 1:
                    cands.setdefault(rmask | (1 << v), (rmask, v))
        nxt = []
        for smask in sorted(cands, key=lambda m: tuple(VertexSet.from_mask(g.n, m))):
            rmask, v = cands[smask]
            vec = _extend(vectors[rep_id[rmask]], d, hits_of[v])
            if vec not in index:
                cid = len(reps)
                index[vec] = cid
                reps.append(smask)
                vectors.append(vec)
                rep_id[smask] = cid
                nxt.append(smask)
        frontier = nxt
    # Safety sweep.  Chaining over A's vertices reaches every class:
    # any S is built element by element, and the capped vector of S+v
    # follows from the capped vector of S.  Representatives from the
    # sweep only appear for classes the closure failed to reach.
    swept_in = 0
    chain = {base: 0}
    for v in sorted(A):
        hits = hits_of[v]
        vb = 1 << v
        for vec, rmask in list(chain.items()):
            nv = _extend(vec, d, hits)
            if nv not in chain:
                chain[nv] = rmask | vb
            if nv not in index:
                cid = len(reps)
                index[nv] = cid
                reps.append(rmask | vb)
                vectors.append(nv)
                swept_in += 1
    return ClassFamily(A, d, universe, reps, vectors, index, swept_in)


def nec_of_decomposition(g, order, d: int) -> int:
    """Max class count over the proper prefix cuts (i = 1..n-1), both
    sides of each cut.  1 when there is no proper cut."""
    _check_order(g, order)
    best = 1
    for i in range(1, g.n):
        A = VertexSet(g.n, order[:i])
        best = max(best, len(enumerate_classes(g, A, d)))
        best = max(best, len(enumerate_classes(g, A.complement(), d)))
    return best


def bounds(g, order, d: int) -> dict:
    """log2 upper bounds on nec from the cut structure of the ordering:
    'ub1' = d * k^2 with k the boolean width, 'ub2' = (max over cuts of
    the smaller twin-class count) * log2(d+1), 'ub3' = d * k * log2(max
    twin-class count over both sides of every cut)."""
    _check_order(g, order)
    k, per_prefix = width_of_ordering(g, order)
    minntc = 1
    maxntc = 1
    for cs in per_prefix:
        minntc = max(minntc, min(cs.ntc_left, cs.ntc_right))
        maxntc = max(maxntc, max(cs.ntc_left, cs.ntc_right))
    return {
        "ub1": d * k * k,
        "ub2": minntc * math.log2(d + 1),
        "ub3": d * k * math.log2(maxntc) if maxntc > 1 else 0.0,
    }


def _check_order(g, order):
    if sorted(order) != list(range(g.n)):
        raise ValueError("order must be a permutation of the vertices")


@dataclass
class SigmaRhoResult:
    feasible: bool
    size: int | None
    witness: VertexSet | None


def is_sigma_rho_set(g, spec: SigmaRhoSpec, X: VertexSet) -> bool:
    for v in range(g.n):
        mu = spec.sigma if v in X else spec.rho
        if not mu.contains((g.adj_masks[v] & X.mask).bit_count()):
            return False
    return True


def solve_sigma_rho(g, spec: SigmaRhoSpec, order) -> SigmaRhoResult:
    """Optimal (sigma, rho)-set along the given ordering, with witness.

    Tables are dense (inner class, outer class) arrays of best partial
    |X cap A_i| (negated when minimizing, so the DP always maximizes).
    Per crossing vertex and per membership bit b, the surviving entries
    shift tables: inner class ci maps to the class of rep(ci) + v on
    the grown left side, and a new outer class co' maps back to the old
    outer class of rep(co') + v.  Updates scan b = 0 then 1 and ci
    ascending, replacing only on strict improvement, so tie-breaking is
    deterministic.  Infeasibility (possible: some sigma/rho admit no
    set at all) is reported, not folded into size 0.
    """
    _check_order(g, order)
    n = g.n
    d = spec.d
    maximize = spec.objective == "maximize"
    if n == 0:
        return SigmaRhoResult(True, 0, VertexSet(0))

    fam_in = []
    fam_out = []
    for i in range(n + 1):
        A = VertexSet(n, order[:i])
        fam_in.append(enumerate_classes(g, A, d))
        fam_out.append(enumerate_classes(g, A.complement(), d))

    ok = np.zeros((2, d + 1, d + 1), dtype=bool)
    for b, mu in ((0, spec.rho), (1, spec.sigma)):
        for ci in range(d + 1):
            for co in range(d + 1):
                ok[b, ci, co] = contains_capped(mu, min(d, ci + co), d)

    table = np.zeros((1, 1), dtype=np.int64)
    steps = []
    for i in range(n):
        v = order[i]
        vbit = 1 << v
        fin, fin2 = fam_in[i], fam_in[i + 1]
        fout, fout2 = fam_out[i], fam_out[i + 1]
        pos_in = {u: p for p, u in enumerate(fin2.universe)}
        hits_in = [pos_in[u] for u in fin2.universe if (g.adj_masks[v] >> u) & 1]
        drop_in = fin.universe.index(v)
        pos_out = {u: p for p, u in enumerate(fout.universe)}
        hits_out = [pos_out[u] for u in fout.universe if (g.adj_masks[v] >> u) & 1]
        drop_out = fout2.universe.index(v)

        inner_map = np.empty((2, len(fin)), dtype=np.int64)
        cap_in = np.empty(len(fin), dtype=np.int64)
        for ci in range(len(fin)):
            vec = fin.vectors[ci]
            shrunk = vec[:drop_in] + vec[drop_in + 1 :]
            inner_map[0, ci] = fin2.index[shrunk]
            inner_map[1, ci] = fin2.index[_extend(shrunk, d, hits_in)]
            cap_in[ci] = min(d, (g.adj_masks[v] & fin.reps[ci]).bit_count())

        outer_compat = np.empty((2, len(fout2)), dtype=np.int64)
        cap_out = np.empty(len(fout2), dtype=np.int64)
        for co in range(len(fout2)):
            vec = fout2.vectors[co]
            shrunk = vec[:drop_out] + vec[drop_out + 1 :]
            outer_compat[0, co] = fout.index[shrunk]
            outer_compat[1, co] = fout.index[_extend(shrunk, d, hits_out)]
            cap_out[co] = min(d, (g.adj_masks[v] & fout2.reps[co]).bit_count())

        nxt = np.full((len(fin2), len(fout2)), _NEG, dtype=np.int64)
        pred_b = np.full((len(fin2), len(fout2)), -1, dtype=np.int8)
        pred_ci = np.full((len(fin2), len(fout2)), -1, dtype=np.int64)
        for b in (0, 1):
            gathered = table[:, outer_compat[b]]  # (nin, nout2)
            allow = ok[b][np.ix_(cap_in, cap_out)]
            delta = (1 if maximize else -1) if b else 0
            cand = np.where((gathered > _NEG) & allow, gathered + delta, _NEG)
            for ci in range(len(fin)):
                row = cand[ci]
                tgt = inner_map[b, ci]
                better = row > nxt[tgt]
                if better.any():
                    nxt[tgt, better] = row[better]
                    pred_b[tgt, better] = b
                    pred_ci[tgt, better] = ci
        steps.append((pred_b, pred_ci, outer_compat))
        table = nxt

    final = int(table[0, 0])
    if final <= _NEG // 2:
        return SigmaRhoResult(False, None, None)
    mask = 0
    ci, co = 0, 0
    for i in range(n - 1, -1, -1):
        pred_b, pred_ci, outer_compat = steps[i]
        b = int(pred_b[ci, co])
        if b:
            mask |= 1 << order[i]
        ci, co = int(pred_ci[ci, co]), int(outer_compat[b, co])
    witness = VertexSet.from_mask(n, mask)
    size = final if maximize else -final
    assert len(witness) == size
    return SigmaRhoResult(True, size, witness)


def brute_force_sigma_rho(g, spec: SigmaRhoSpec) -> SigmaRhoResult:
    """Check all 2^n subsets.  Smallest qualifying mask among optima
    wins, so results are reproducible.  Guarded at n <= 18."""
    n = g.n
    if n > 18:
        raise ScaleLimitError(f"brute force capped at 18 vertices, got {n}")
    adj = g.adj_masks
    sigma, rho = spec.sigma, spec.rho
    maximize = spec.objective == "maximize"
    best = None
    best_size = None
    for x in range(1 << n):
        good = True
        for v in range(n):
            mu = sigma if (x >> v) & 1 else rho
            if not mu.contains((adj[v] & x).bit_count()):
                good = False
                break
        if not good:
            continue
        s = x.bit_count()
        if best is None or (s > best_size if maximize else s < best_size):
            best, best_size = x, s
    if best is None:
        return SigmaRhoResult(False, None, None)
    return SigmaRhoResult(True, best_size, VertexSet.from_mask(n, best))
