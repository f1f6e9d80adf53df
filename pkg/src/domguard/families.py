"""Generators for the split-graph families the solvers are validated on:
exhaustive claw-free split graphs up to iso for small n, plus random
samplers for the claw-free, 2-split and K_{1,4}-free 3-split classes."""

from __future__ import annotations

from itertools import combinations, combinations_with_replacement

from .graph import (
    Graph,
    is_connected,
    is_k1t_free,
    make_partition,
    split_partition,
)


def _build_split(c, nbhds):
    """Graph with clique 0..c-1 and one independent vertex per neighborhood."""
    n = c + len(nbhds)
    edges = [(u, v) for u in range(c) for v in range(u + 1, c)]
    for j, A in enumerate(nbhds):
        iv = c + j
        for u in A:
            edges.append((u, iv))
    return Graph(n, edges)


def _nx(g: Graph):
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges)
    return h


def _invariant(g: Graph):
    degs = tuple(sorted(g.degree(v) for v in g.vertices))
    tri = tuple(sorted(
        sum(1 for u in g.adj[v] for w in g.adj[v] if u < w and g.has_edge(u, w))
        for v in g.vertices))
    return (g.n, len(g.edges), degs, tri)


def enumerate_claw_free_split(n, up_to_iso=True):
    """All connected claw-free split graphs on n vertices.

    Claw-free split graphs have a partition with Delta^I <= 2, and in the
    Delta^I = 2 case at most three independent vertices, which keeps the
    enumeration small.  With up_to_iso the list is deduplicated by a
    canonical form (feasible for n <= 9).
    """
    import networkx as nx

    graphs = []
    buckets = {}

    def emit(g):
        if not is_connected(g) or not is_k1t_free(g, 3):
            return
        if split_partition(g) is None:
            return
        if up_to_iso:
            key = _invariant(g)
            gx = _nx(g)
            for other in buckets.get(key, ()):
                if nx.is_isomorphic(gx, other):
                    return
            buckets.setdefault(key, []).append(gx)
        graphs.append(g)

    # complete graph
    emit(_build_split(n, []))

    # Delta^I <= 1: disjoint nonempty neighborhoods, sizes < c
    for i in range(1, n):
        c = n - i
        if c < 1:
            continue

        def rec(sizes, remaining, max_size):
            if len(sizes) == i:
                if all(s >= 1 for s in sizes):
                    nbhds = []
                    nxt = 0
                    ok = True
                    for s in sizes:
                        if nxt + s > c:
                            ok = False
                            break
                        nbhds.append(set(range(nxt, nxt + s)))
                        nxt += s
                    if ok and all(len(a) < c for a in nbhds):
                        emit(_build_split(c, nbhds))
                return
            for s in range(1, min(remaining, max_size) + 1):
                rec(sizes + [s], remaining - s, s)

        rec([], c, c - 1 if c > 1 else 0)

    # Delta^I = 2: |I| in {2, 3}, arbitrary proper neighborhoods subject to
    # the per-vertex cap of 2 and the shared-neighbor condition
    for i in (2, 3):
        c = n - i
        if c < 2:
            continue
        subsets = []
        for size in range(1, c):
            subsets.extend(frozenset(s) for s in combinations(range(c), size))
        for choice in combinations_with_replacement(subsets, i):
            counts = {v: 0 for v in range(c)}
            for A in choice:
                for v in A:
                    counts[v] += 1
            if any(cnt > 2 for cnt in counts.values()):
                continue
            if max(counts.values()) != 2:
                continue
            emit(_build_split(c, [set(A) for A in choice]))

    return graphs


def random_claw_free_split(n, rng):
    """One random connected claw-free split graph on n vertices."""
    while True:
        if rng.random() < 0.5:
            # Delta^I <= 1 shape
            i = rng.randint(1, max(1, n - 2))
            c = n - i
            if c < 2:
                continue
            sizes = []
            left = c
            ok = True
            for _ in range(i):
                hi = min(left - 0, c - 1)
                if hi < 1:
                    ok = False
                    break
                s = rng.randint(1, hi)
                if s > left:
                    ok = False
                    break
                sizes.append(s)
                left -= s
            if not ok:
                continue
            nxt = 0
            nbhds = []
            for s in sizes:
                nbhds.append(set(range(nxt, nxt + s)))
                nxt += s
            g = _build_split(c, nbhds)
        else:
            i = rng.choice([2, 3])
            c = n - i
            if c < 2:
                continue
            nbhds = []
            counts = [0] * c
            ok = True
            for _ in range(i):
                size = rng.randint(1, c - 1)
                A = set(rng.sample(range(c), size))
                if any(counts[v] >= 2 for v in A):
                    ok = False
                    break
                nbhds.append(A)
                for v in A:
                    counts[v] += 1
            if not ok or max(counts) != 2:
                continue
            g = _build_split(c, nbhds)
        if is_connected(g) and is_k1t_free(g, 3) and split_partition(g):
            return g


def random_2split(n, rng, require_claw=False):
    """Random connected 2-split graph (Delta^I exactly 2, so K_{1,4}-free).

    With require_claw, resample until the graph contains a claw, which is
    the regime the matching-based solver exists for.
    """
    while True:
        i = rng.randint(2, max(2, n - 3))
        c = n - i
        if c < 3:
            continue
        nbhds = []
        counts = [0] * c
        ok = True
        for _ in range(i):
            size = rng.randint(1, min(c - 1, 4))
            A = set(rng.sample(range(c), size))
            if any(counts[v] >= 2 for v in A):
                ok = False
                break
            nbhds.append(A)
            for v in A:
                counts[v] += 1
        if not ok or max(counts) != 2:
            continue
        g = _build_split(c, nbhds)
        if not is_connected(g):
            continue
        p = split_partition(g)
        if p is None or p.deltaI != 2:
            continue
        if require_claw and is_k1t_free(g, 3):
            continue
        return g


def _accept_3split(g):
    from .graph import k14_free_3split_check

    if not is_connected(g):
        return None
    p = split_partition(g)
    if p is None or p.deltaI != 3:
        return None
    try:
        if not k14_free_3split_check(g, p):
            return None
    except Exception:
        return None
    return p


def random_3split_k14free(n, rng):
    """Random connected K_{1,4}-free 3-split graph on n vertices.

    Vertex 0 gets three I-neighbors; the remaining clique vertices attach
    to up to three random I-vertices, then the K_{1,4}-freeness condition
    (every degree-3 clique vertex shares an I-neighbor with every other
    clique vertex) is rejection-checked.
    """
    while True:
        i = rng.randint(3, n - 2)
        c = n - i
        if c < 2:
            continue
        nbhds = [set() for _ in range(i)]
        for t in range(3):
            nbhds[t].add(0)
        for v in range(1, c):
            for j in rng.sample(range(i), min(rng.randint(1, 3), i)):
                nbhds[j].add(v)
        counts = [0] * c
        for A in nbhds:
            for v in A:
                counts[v] += 1
        if counts[0] != 3 or max(counts) != 3:
            continue
        if any(not A or len(A) >= c for A in nbhds):
            continue
        g = _build_split(c, nbhds)
        p = _accept_3split(g)
        if p is not None:
            return g


def _shape_columns(rng):
    """x plus three columns, each holding one removed-side and one surviving
    I-vertex; tends to classify as Type I."""
    extra_c = rng.randint(0, 1)
    c = 4 + extra_c
    n_i = 6 if extra_c else 6 + rng.randint(0, 1)
    nbhds = [set() for _ in range(n_i)]
    for j in range(3):
        nbhds[j].add(0)
        nbhds[j].add(1 + j)
        nbhds[3 + j].add(1 + j)
    for v in range(4, c):
        nbhds[rng.randrange(3)].add(v)
        if n_i > 6 and rng.random() < 0.7:
            nbhds[6].add(v)
    if rng.random() < 0.5:
        j = rng.randrange(3)
        v = rng.randint(1, 3)
        if sum(1 for A in nbhds if v in A) < 3:
            nbhds[j].add(v)
    return [A for A in nbhds if A], c


def _shape_shared_column(rng):
    """Removed-side vertices spread over shared columns plus two pendant
    surviving I-vertices; tends to classify as Type II."""
    c = rng.randint(4, 6)
    cols = list(range(1, c))
    nbhds = [set() for _ in range(5)]
    for j in range(3):
        nbhds[j].add(0)
        hi = min(3, len(cols)) - 1 or 1
        for v in rng.sample(cols, rng.randint(1, hi)):
            nbhds[j].add(v)
    i1, i2 = rng.sample(cols, 2)
    nbhds[3].add(i1)
    nbhds[4].add(i2)
    counts = {}
    for A in nbhds:
        for v in A:
            counts[v] = counts.get(v, 0) + 1
            if counts[v] > 3:
                return None
    return nbhds, c


def random_3split_typed(rng, kind, max_tries=100_000):
    """Random K_{1,4}-free 3-split graph whose auxiliary bipartite graph Q
    classifies as `kind` ("type-I", "type-II" or "neither").

    Uses shape templates biased toward the requested class plus rejection
    on the actual classification, so the returned instance is guaranteed.
    """
    from .splitsolve import solve_k14_3split

    for _ in range(max_tries):
        if kind == "type-I":
            shaped = _shape_columns(rng)
        elif kind == "type-II":
            shaped = _shape_shared_column(rng)
        else:
            shaped = None
        if shaped is None:
            g = random_3split_k14free(rng.randint(7, 11), rng)
            p = _accept_3split(g)
        else:
            nbhds, c = shaped
            g = _build_split(c, nbhds)
            p = _accept_3split(g)
        if p is None:
            continue
        _, ex = solve_k14_3split(g, p)
        if ex["Q_type"] == kind:
            return g, p
    raise RuntimeError(f"could not generate a {kind} instance")
