"""Pure-Python kernels on raw int bitmasks.

Reference implementations of the three hot loops; the compiled module
in _kernels.pyx mirrors them exactly (same orderings, same tie-breaks,
same counts).  All take n, a sequence adj of n neighbor masks, and
vertex indices; families of unions of neighborhoods are sets of masks
over the current right side.

The one-vertex family step everything builds on: given UN(X) and a new
vertex v, every member S splits into S \\ {v} (v's row dropped) and
(S \\ {v}) | (N(v) restricted to the remaining right side), and the
results are deduplicated.  |UN| never more than doubles.
"""

HAVE_COMPILED = False


def _increment(fam, nv_rest, vbit):
    keep = ~vbit
    out = set()
    for s in fam:
        s0 = s & keep
        out.add(s0)
        out.add(s0 | nv_rest)
    return out


def chain_un_sizes(n, adj, order):
    """|UN| of every proper nonempty prefix of order: n-1 counts."""
    sizes = []
    fam = {0}
    left = 0
    for i in range(n - 1):
        v = order[i]
        vbit = 1 << v
        fam = _increment(fam, adj[v] & ~(left | vbit), vbit)
        left |= vbit
        sizes.append(len(fam))
    return sizes


def _n2_candidates(n, adj, left, right):
    reach = left
    m = left
    while m:
        low = m & -m
        reach |= adj[low.bit_length() - 1]
        m ^= low
    n2 = 0
    m = reach
    while m:
        low = m & -m
        n2 |= adj[low.bit_length() - 1]
        m ^= low
    cand = n2 & right
    return cand if cand else right


def iun_greedy(n, adj, init, use_n2, bound):
    """Greedy ordering by incremental unions of neighborhoods.

    Per step: if some candidate's right-neighborhood is empty or equals
    the right-neighborhood of a placed vertex, take the smallest such
    (trivial case, width-neutral); otherwise take the candidate whose
    placement leaves the fewest UN members, smallest index on ties.

    Returns (order, sizes, trivial) where sizes[i] = |UN| after placing
    order[i] for i < n-1 and trivial[i] flags trivial-case placements,
    or None when some proper-prefix |UN| exceeds bound (bound 0 = off).
    """
    full = (1 << n) - 1
    vbit = 1 << init
    left, right = vbit, full ^ vbit
    order = [init]
    trivial = [False]
    fam = {0, adj[init] & right}
    sizes = [len(fam)]
    if bound and n > 1 and sizes[0] > bound:
        return None
    while right:
        cand = _n2_candidates(n, adj, left, right) if use_n2 else right
        chosen = -1
        lrn = set()
        m = left
        while m:
            low = m & -m
            lrn.add(adj[low.bit_length() - 1] & right)
            m ^= low
        m = cand
        while m:
            low = m & -m
            v = low.bit_length() - 1
            nvr = adj[v] & right
            if nvr == 0 or nvr in lrn:
                chosen = v
                break
            m ^= low
        if chosen >= 0:
            trivial.append(True)
            cbit = 1 << chosen
            fam = _increment(fam, adj[chosen] & right & ~cbit, cbit)
        else:
            trivial.append(False)
            best_fam = None
            m = cand
            while m:
                low = m & -m
                v = low.bit_length() - 1
                f2 = _increment(fam, adj[v] & right & ~low, low)
                if best_fam is None or len(f2) < len(best_fam):
                    chosen, best_fam = v, f2
                m ^= low
            fam = best_fam
        cbit = 1 << chosen
        left |= cbit
        right ^= cbit
        order.append(chosen)
        if right:
            sizes.append(len(fam))
            if bound and sizes[-1] > bound:
                return None
    return order, sizes[: n - 1], trivial


def exact_stage(n, adj, K):
    """One stage of the exact solver: explore subsets reachable through
    chains whose every prefix satisfies |UN| <= K, then run the
    recurrence P(X) = min over v of max(|UN(X)|, P(X minus v)) with the
    propagation pruned to P <= K.

    Returns (pv, explored, order): pv = P(V) if P(V) <= K else None,
    explored = number of subsets with a computed |UN| (the empty set
    included), order = an optimal ordering when pv is not None.
    """
    full = (1 << n) - 1
    tun = {0: 0}

    def dfs(x, fam):
        rest = full ^ x
        m = rest
        while m:
            low = m & -m
            v = low.bit_length() - 1
            y = x | low
            if y not in tun:
                f2 = _increment(fam, adj[v] & rest & ~low, low)
                tun[y] = len(f2)
                if tun[y] <= K:
                    dfs(y, f2)
            m ^= low

    if n > 0:
        dfs(0, {0})
    INF = 1 << 60
    P = {0: 0}
    pred = {}
    for x in sorted(tun):
        px = P.get(x, INF)
        if px > K:
            continue
        m = full ^ x
        while m:
            low = m & -m
            v = low.bit_length() - 1
            y = x | low
            ty = tun.get(y)
            if ty is not None:
                val = px if px > ty else ty
                cur = P.get(y, INF)
                if val < cur or (val == cur and v < pred[y]):
                    P[y] = val
                    pred[y] = v
            m ^= low
    pv = P.get(full, INF)
    explored = len(tun)
    if pv > K:
        return None, explored, None
    order = []
    y = full
    while y:
        v = pred[y]
        order.append(v)
        y ^= 1 << v
    order.reverse()
    return pv, explored, order
