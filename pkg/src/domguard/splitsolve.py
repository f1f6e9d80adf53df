"""Polynomial-time m-eternal domination solvers for K_{1,3}-free and
K_{1,4}-free split graphs, with the labeled-graph / matching machinery and
the Type I / Type II classification of the auxiliary bipartite graph."""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import (
    Graph,
    NotApplicableError,
    SplitPartition,
    claw_free_split_check,
    is_connected,
    make_partition,
    split_partition,
)
from .matching import max_cardinality_matching


class PaperInconsistencyError(AssertionError):
    """A structural fact the algorithm relies on failed to hold."""


@dataclass
class LabeledGraph:
    vertices: list                      # the independent-side vertices
    labeled_edges: list                 # (u, v, label) with u < v

    @property
    def edges(self):
        return [(u, v) for u, v, _ in self.labeled_edges]


@dataclass
class ReducedInstance:
    L: frozenset
    Iprime: frozenset
    reduced_graph: Graph
    matching: list = field(default_factory=list)
    method: str = "formula"


@dataclass
class BipartiteQ:
    A: list                             # the 3 removed I-neighbors of x
    B: list
    q_edges: set                        # (a, b) pairs
    weight: dict                        # B vertex -> weight class id


def is_star(g: Graph) -> bool:
    if g.n < 3:
        return False
    degs = sorted(g.degree(v) for v in g.vertices)
    return degs[-1] == g.n - 1 and all(d == 1 for d in degs[:-1])


def _check_common(g: Graph, p: SplitPartition, caller):
    if not is_connected(g):
        raise NotApplicableError(f"{caller}: graph is not connected")
    if g.is_complete():
        raise NotApplicableError(f"{caller}: graph is complete")


def solve_k13_free(g: Graph, p: SplitPartition) -> int:
    """gamma_m^infty of a connected K_{1,3}-free split graph.

    Delta^I <= 1: |I|+1 when the I-neighborhoods miss part of C, else |I|.
    Delta^I = 2: always 2.  With a maximal clique side, claw-freeness forces
    |I| <= 3 and (for |I| = 3) every clique vertex to cover exactly two of
    the three I-vertices with all three pair types present, a generalized
    sun; rotating two guards among the pair-type regions defends every
    attack.  (Exhaustively cross-checked against the configuration oracle
    for n <= 9.)
    """
    _check_common(g, p, "solve_k13_free")
    if not claw_free_split_check(g, p):
        raise NotApplicableError("solve_k13_free: graph contains a claw")
    I = p.independent
    if p.deltaI == 2:
        if len(I) > 3:
            raise PaperInconsistencyError(
                "claw-free split graph with Delta^I = 2 and |I| > 3")
        return 2
    union_nbrs = set()
    for v in I:
        union_nbrs |= g.adj[v]
    if union_nbrs & set(p.clique) != set(p.clique):
        return len(I) + 1
    return len(I)


def build_labeled_graph(h: Graph, p: SplitPartition) -> LabeledGraph:
    """Auxiliary graph on the independent side: uv is an edge iff u and v
    share a clique neighbor; label = the least-id common neighbor."""
    if p.deltaI > 2:
        raise NotApplicableError("labeled graph requires Delta^I <= 2")
    ivs = sorted(p.independent)
    edges = []
    for i, u in enumerate(ivs):
        for v in ivs[i + 1:]:
            common = (h.adj[u] & h.adj[v]) & set(p.clique)
            if common:
                edges.append((u, v, min(common)))
    return LabeledGraph(ivs, edges)


def max_matching(m: LabeledGraph):
    """Maximum matching of the labeled graph, as (u, v, label) triples."""
    idx = {v: i for i, v in enumerate(m.vertices)}
    pairs = max_cardinality_matching(len(m.vertices),
                                     [(idx[u], idx[v]) for u, v, _ in m.labeled_edges])
    label_of = {(min(u, v), max(u, v)): w for u, v, w in m.labeled_edges}
    out = []
    for i, j in pairs:
        u, v = m.vertices[i], m.vertices[j]
        out.append((u, v, label_of[(min(u, v), max(u, v))]))
    return sorted(out)


def _reduce(h: Graph, p: SplitPartition) -> ReducedInstance:
    lg = build_labeled_graph(h, p)
    mm = max_matching(lg)
    L = frozenset(w for _, _, w in mm)
    if len(L) != len(mm):
        raise PaperInconsistencyError("matching edges with repeated labels")
    NL = set()
    for l in L:
        NL |= h.adj[l] & set(p.independent)
    Iprime = frozenset(set(p.independent) - NL)
    removed = {(min(l, i), max(l, i)) for l in L for i in NL if h.has_edge(l, i)}
    kept = [e for e in h.edges if e not in removed]
    reduced = Graph(h.n, kept, h.labels)
    return ReducedInstance(L, Iprime, reduced, mm)


def _two_sat(nvars, clauses):
    """Satisfiability of 2-CNF clauses [(var, polarity), (var, polarity)]
    by strongly connected components of the implication graph."""
    nlits = 2 * nvars

    def lit(var, pol):
        return 2 * var + (0 if pol else 1)

    imp = [[] for _ in range(nlits)]
    for a, b in clauses:
        la, lb = lit(*a), lit(*b)
        imp[la ^ 1].append(lb)
        imp[lb ^ 1].append(la)

    # iterative Tarjan
    index = [0]
    idx = [-1] * nlits
    low = [0] * nlits
    on = [False] * nlits
    stack = []
    comp = [-1] * nlits
    ncomp = [0]

    for root in range(nlits):
        if idx[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                idx[v] = low[v] = index[0]
                index[0] += 1
                stack.append(v)
                on[v] = True
            advanced = False
            for i in range(pi, len(imp[v])):
                w = imp[v][i]
                if idx[w] == -1:
                    work[-1] = (v, i + 1)
                    work.append((w, 0))
                    advanced = True
                    break
                if on[w]:
                    low[v] = min(low[v], idx[w])
            if advanced:
                continue
            if low[v] == idx[v]:
                while True:
                    w = stack.pop()
                    on[w] = False
                    comp[w] = ncomp[0]
                    if w == v:
                        break
                ncomp[0] += 1
            work.pop()
            if work:
                pv, _ = work[-1]
                low[pv] = min(low[pv], low[v])
    return all(comp[2 * v] != comp[2 * v + 1] for v in range(nvars))


def _packing_2split(h: Graph, p: SplitPartition, ri: ReducedInstance) -> bool:
    """True iff the lower-bound packing exists: one endpoint per matched
    edge, clear of N(I'), pairwise sharing no clique neighbor.

    Each label has exactly two independent neighbors (the endpoints of its
    matching edge), so the choice is binary per edge and conflicts are
    pairwise: a 2-SAT instance."""
    P = sorted(ri.Iprime)
    for i, u in enumerate(P):
        for v in P[i + 1:]:
            if h.adj[u] & h.adj[v]:
                return False
    nIprime = set()
    for v in ri.Iprime:
        nIprime |= h.adj[v]
    ends = [(u, v) for u, v, _ in ri.matching]
    clauses = []
    for e, (u, v) in enumerate(ends):
        bad_u = bool(h.adj[u] & nIprime)
        bad_v = bool(h.adj[v] & nIprime)
        if bad_u and bad_v:
            return False
        if bad_u:
            clauses.append(((e, False), (e, False)))
        if bad_v:
            clauses.append(((e, True), (e, True)))
    for e1 in range(len(ends)):
        for e2 in range(e1 + 1, len(ends)):
            for s1, a in ((True, ends[e1][0]), (False, ends[e1][1])):
                for s2, b in ((True, ends[e2][0]), (False, ends[e2][1])):
                    if h.adj[a] & h.adj[b]:
                        clauses.append(((e1, not s1), (e2, not s2)))
    return _two_sat(len(ends), clauses)


def solve_k14_2split(h: Graph, p: SplitPartition, budget=None):
    """gamma_m^infty of a connected K_{1,4}-free 2-split graph:
    |L| + |I'| + 1 from a maximum matching of the labeled graph.

    The formula's lower bound needs a packing: one matched vertex per label,
    clear of N(I') and pairwise sharing no clique neighbor.  Rare instances
    admit no such packing and can beat the formula by one guard, so in that
    case the value is decided exactly instead (ri.method == "oracle")."""
    _check_common(h, p, "solve_k14_2split")
    if is_star(h):
        raise NotApplicableError("solve_k14_2split: graph is a star")
    if p.deltaI != 2:
        raise NotApplicableError("solve_k14_2split: Delta^I must be 2")
    ri = _reduce(h, p)
    # sanity: the reduction leaves a <=1-split graph on I'
    for c in p.clique:
        if len(ri.reduced_graph.adj[c] & ri.Iprime) > 1:
            raise PaperInconsistencyError("reduced graph is not <=1-split")
    if not _packing_2split(h, p, ri):
        from .oracle import medn_oracle

        ri.method = "oracle"
        return medn_oracle(h, budget), ri
    return len(ri.L) + len(ri.Iprime) + 1, ri


def _remove_x_pipeline(g: Graph, p: SplitPartition, x):
    """Remove N^I(x), then label/match/reduce.  Returns the pieces the
    3-split theorem needs."""
    NIx = sorted(g.adj[x] & set(p.independent))
    if len(NIx) != 3:
        raise NotApplicableError("chosen x must have exactly 3 I-neighbors")
    keep = sorted(set(g.vertices) - set(NIx))
    h_small, old_ids = g.induced(keep)
    back = {i: v for i, v in enumerate(old_ids)}
    fwd = {v: i for i, v in enumerate(old_ids)}
    C_h = {fwd[c] for c in p.clique}
    I_h = {fwd[i] for i in p.independent if i in fwd}
    ph = make_partition(h_small, C_h, I_h)
    if ph.deltaI > 2:
        raise PaperInconsistencyError(
            "post-removal graph is not an l-split graph with l <= 2")
    ri = _reduce(h_small, ph)
    if len(ri.matching) > 2:
        raise PaperInconsistencyError("labeled-graph matching exceeds size 2")
    L = frozenset(back[v] for v in ri.L)
    Iprime = frozenset(back[v] for v in ri.Iprime)
    # clique vertices adjacent to I' in the reduced graph, mapped back
    NI = set()
    for v in ri.Iprime:
        NI |= ri.reduced_graph.adj[v]
    NHI = frozenset(back[v] for v in NI)
    # representative classes: each I' vertex with its reduced-graph neighbors
    classes = {back[v]: frozenset(back[u] for u in ri.reduced_graph.adj[v])
               for v in ri.Iprime}
    return NIx, L, Iprime, NHI, classes


def build_Q(g: Graph, p: SplitPartition, x) -> BipartiteQ:
    """Auxiliary bipartite graph deciding the +1 vs +2 case of the 3-split
    theorem.  Weight classes merge B-vertices sharing an I'-neighbor of the
    reduced graph; B-vertices with none get singleton classes."""
    NIx, L, Iprime, NHI, classes = _remove_x_pipeline(g, p, x)
    A = NIx
    B = sorted(L | NHI)
    q_edges = set()
    for a in A:
        for b in B:
            if g.has_edge(a, b):
                q_edges.add((a, b))
    weight = {}
    for b in B:
        owner = [iv for iv, nbrs in classes.items() if b in nbrs]
        if owner:
            # reduced graph is <=1-split, so the owner is unique
            weight[b] = ("class", min(owner))
        else:
            weight[b] = ("solo", b)
    return BipartiteQ(A, B, q_edges, weight)


def _packing(g: Graph, p: SplitPartition, L, Iprime, NIx):
    """Pairwise disjoint-neighborhood independent vertices: I' plus, per
    label, one matched I-vertex sharing no clique neighbor with I'."""
    removed = set(NIx)
    nIprime = set()
    for v in Iprime:
        nIprime |= g.adj[v]
    P = sorted(Iprime)
    for l in sorted(L):
        cands = [y for y in sorted((g.adj[l] & p.independent) - removed)
                 if not g.adj[y] & nIprime and y not in Iprime]
        if not cands:
            raise PaperInconsistencyError(
                "label without a matched vertex clear of N(I')")
        P.append(cands[0])
    for i, z in enumerate(P):
        for z2 in P[i + 1:]:
            if g.adj[z] & g.adj[z2] or g.has_edge(z, z2):
                raise PaperInconsistencyError(
                    "packing vertices share a neighbor")
    return P


def _boundary_masks(g: Graph, p: SplitPartition, L, Iprime, NIx, budget=None):
    """Surviving configs of the exact +1 decision when Q is neither Type I
    nor Type II.

    Every dominating set of size |L|+|I'|+1 must place one guard inside each
    disjoint packing region N[z] plus one floater, so the greatest fixed
    point over those structured configs decides feasibility."""
    from itertools import product

    from .oracle import Budget, greatest_fixed_point, is_dominating

    budget = budget or Budget()
    P = _packing(g, p, L, Iprime, NIx)
    cells = [sorted({z} | g.adj[z]) for z in P]
    masks = set()
    for picks in product(*cells):
        pick_set = set(picks)
        base = 0
        for v in picks:
            base |= 1 << v
        for f in g.vertices:
            if f in pick_set:
                continue
            budget.spend()
            cfg = base | (1 << f)
            if cfg not in masks and is_dominating(g, list(picks) + [f]):
                masks.add(cfg)
    return greatest_fixed_point(g, sorted(masks), budget)


def _boundary_plus_one(g: Graph, p: SplitPartition, L, Iprime, NIx, budget=None):
    return bool(_boundary_masks(g, p, L, Iprime, NIx, budget))


TYPE_I = "type-I"
TYPE_II = "type-II"
NEITHER = "neither"


def classify_Q_witness(q: BipartiteQ):
    """Exhaustive classification with a witness.  Type I wins ties.

    Returns (kind, witness) where witness lists B-side vertices whose
    closed neighborhoods jointly cover A: the three matched vertices for
    Type I, the shared center and the pendant partner for Type II, and
    None for Neither."""
    if len(q.A) != 3:
        raise NotApplicableError("Q must have |A| = 3")
    nbrs = {a: [b for b in q.B if (a, b) in q.q_edges] for a in q.A}
    a1, a2, a3 = q.A
    for b1 in nbrs[a1]:
        for b2 in nbrs[a2]:
            if b2 == b1 or q.weight[b2] == q.weight[b1]:
                continue
            for b3 in nbrs[a3]:
                if b3 in (b1, b2):
                    continue
                if q.weight[b3] in (q.weight[b1], q.weight[b2]):
                    continue
                return TYPE_I, [b1, b2, b3]
    # Type II: two A-vertices sharing a B-neighbor c, the third A-vertex
    # adjacent to some e with a different weight
    import itertools
    for a, b in itertools.permutations(q.A, 2):
        d = next(v for v in q.A if v not in (a, b))
        if a > b:
            continue
        for c in nbrs[a]:
            if c not in nbrs[b]:
                continue
            for e in nbrs[d]:
                if e != c and q.weight[e] != q.weight[c]:
                    return TYPE_II, [c, e]
    return NEITHER, None


def classify_Q(q: BipartiteQ) -> str:
    return classify_Q_witness(q)[0]


def solve_k14_3split(g: Graph, p: SplitPartition, x=None, budget=None):
    """gamma_m^infty of a connected K_{1,4}-free 3-split graph.

    The answer is always |L| + |I'| + 1 or |L| + |I'| + 2.  A Type I or
    Type II graph Q certifies the +1 case with a static-representative
    strategy.  The converse does not hold: rare instances defend the +1
    guard count by rotating guards between packing regions (the symmetric
    design where every clique vertex covers three of four I-vertices is the
    smallest example), so the Neither case is decided exactly over the
    structured configs instead of defaulting to +2.
    """
    from .graph import k14_free_3split_check

    _check_common(g, p, "solve_k14_3split")
    if p.deltaI != 3:
        raise NotApplicableError("solve_k14_3split: Delta^I must be 3")
    if not k14_free_3split_check(g, p):
        raise NotApplicableError("solve_k14_3split: graph contains a K_{1,4}")
    if x is None:
        x = min(v for v in p.clique if len(g.adj[v] & set(p.independent)) == 3)
    q = build_Q(g, p, x)
    NIx, L, Iprime, _, _ = _remove_x_pipeline(g, p, x)
    kind = classify_Q(q)
    explanation = {"x": x, "L": sorted(L), "Iprime": sorted(Iprime),
                   "Q_type": kind}
    if kind in (TYPE_I, TYPE_II):
        plus_one = True
    else:
        try:
            plus_one = _boundary_plus_one(g, p, L, Iprime, NIx, budget)
            explanation["boundary"] = "plus-one" if plus_one else "plus-two"
        except PaperInconsistencyError:
            # no packing vertex exists for some label, so the structured
            # config argument does not apply; decide exactly instead
            from .oracle import medn_oracle

            value = medn_oracle(g, budget)
            explanation["boundary"] = "oracle"
            return value, explanation
    value = len(L) + len(Iprime) + (1 if plus_one else 2)
    return value, explanation


def solve_split_auto(g: Graph, budget=None):
    """Dispatch over the split-graph cases; falls back to the exact oracle
    where the problem is NP-complete (K_{1,5} and beyond)."""
    from .graph import is_k1t_free
    from .oracle import medn_oracle

    p = split_partition(g)
    if p is None:
        raise NotApplicableError("solve_split_auto: not a split graph")
    if not is_connected(g):
        raise NotApplicableError("solve_split_auto: graph is not connected")
    if g.is_complete():
        return 1, "complete"
    if is_star(g):
        return 2, "star"
    if p.deltaI <= 2 and claw_free_split_check(g, p):
        return solve_k13_free(g, p), "k13"
    if p.deltaI == 2:
        value, ri = solve_k14_2split(g, p, budget)
        return value, "k14-2" if ri.method == "formula" else "k14-2-oracle"
    if p.deltaI == 3 and is_k1t_free(g, 4):
        return solve_k14_3split(g, p)[0], "k14-3"
    return medn_oracle(g, budget), "oracle-fallback"
