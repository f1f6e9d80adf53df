"""Simple undirected graphs plus the structural recognizers used everywhere else.

Vertices are always 0..n-1.  Graphs are immutable after construction and all
functions here are pure, so values can be shared freely.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field


class GraphError(ValueError):
    """Malformed graph input (syntax, bad vertex id, self loop)."""


class NotApplicableError(ValueError):
    """An operation's structural precondition does not hold."""


class Graph:
    def __init__(self, n, edges=(), labels=None):
        if n <= 0:
            raise GraphError("graph must have at least one vertex")
        self.n = n
        self.adj = [set() for _ in range(n)]
        self.labels = dict(labels) if labels else {}
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"vertex id out of range: ({u},{v})")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            a, b = min(u, v), max(u, v)
            if (a, b) in seen:
                continue
            seen.add((a, b))
            self.adj[a].add(b)
            self.adj[b].add(a)
        self._edges = frozenset(seen)

    @property
    def edges(self):
        return self._edges

    @property
    def vertices(self):
        return range(self.n)

    def degree(self, v):
        return len(self.adj[v])

    def has_edge(self, u, v):
        return v in self.adj[u]

    def closed_nbhd(self, v):
        return self.adj[v] | {v}

    def neighborhood_mask(self, v):
        """Bitmask of N[v]; handy for the configuration oracles."""
        m = 1 << v
        for u in self.adj[v]:
            m |= 1 << u
        return m

    def is_complete(self):
        return len(self._edges) == self.n * (self.n - 1) // 2

    def induced(self, vertices):
        """Induced subgraph; returns (Graph, old-id list in new-id order)."""
        vs = sorted(vertices)
        idx = {v: i for i, v in enumerate(vs)}
        es = [(idx[u], idx[v]) for (u, v) in self._edges if u in idx and v in idx]
        return Graph(len(vs), es), vs

    def to_json(self):
        out = {"n": self.n, "edges": [list(e) for e in sorted(self._edges)]}
        if self.labels:
            out["labels"] = {str(k): v for k, v in sorted(self.labels.items())}
        return json.dumps(out)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self._edges == other._edges

    def __hash__(self):
        return hash((self.n, self._edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self._edges)})"


def parse_graph(text: str) -> Graph:
    """Parse either the JSON graph format or a whitespace edge list.

    JSON: {"n": int, "edges": [[u,v],...], "labels": {"id": "name"}?}
    Edge list: one "u v" per line, '#' comments, optional leading "n=<int>".
    """
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphError(f"invalid JSON graph: {exc}") from exc
        if not isinstance(obj, dict) or "n" not in obj:
            raise GraphError("JSON graph must be an object with an 'n' field")
        n = obj["n"]
        if not isinstance(n, int):
            raise GraphError("'n' must be an integer")
        edges = []
        for e in obj.get("edges", []):
            if not (isinstance(e, (list, tuple)) and len(e) == 2):
                raise GraphError(f"bad edge entry: {e!r}")
            edges.append((e[0], e[1]))
        labels = {}
        for k, v in (obj.get("labels") or {}).items():
            labels[int(k)] = str(v)
        return Graph(n, edges, labels)

    n_header = None
    edges = []
    max_id = -1
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("n="):
            if edges or n_header is not None:
                raise GraphError("n= header must be the first non-comment line")
            n_header = int(line[2:])
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"bad edge line: {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise GraphError(f"bad edge line: {raw!r}") from exc
        edges.append((u, v))
        max_id = max(max_id, u, v)
    if n_header is None:
        if max_id < 0:
            raise GraphError("empty edge list without an n= header")
        n_header = max_id + 1
    return Graph(n_header, edges)


# ---------------------------------------------------------------------------
# split graphs

@dataclass(frozen=True)
class SplitPartition:
    clique: frozenset
    independent: frozenset
    deltaI: int

    def d_I(self, g, v):
        return len(g.adj[v] & self.independent)


def _validate_partition(g: Graph, C: set, I: set):
    if C | I != set(g.vertices) or C & I:
        return False
    for u in C:
        if not C <= g.adj[u] | {u}:
            return False
    for u in I:
        if g.adj[u] & I:
            return False
    return True


def make_partition(g: Graph, C, I) -> SplitPartition:
    C, I = set(C), set(I)
    if not _validate_partition(g, C, I):
        raise NotApplicableError("invalid split partition for this graph")
    delta = max((len(g.adj[v] & I) for v in C), default=0)
    return SplitPartition(frozenset(C), frozenset(I), delta)


def split_partition(g: Graph):
    """Hammer-Simeone degree-sequence split recognition.

    Returns a SplitPartition with a *maximal* clique side, or None if the
    graph is not split.  Ties in the degree order break by ascending id and
    I-vertices adjacent to all of C are promoted until C is maximal, so the
    result is deterministic.
    """
    order = sorted(g.vertices, key=lambda v: (-g.degree(v), v))
    degs = [g.degree(v) for v in order]
    m = 0
    for i, d in enumerate(degs, start=1):
        if d >= i - 1:
            m = i
    lhs = sum(degs[:m])
    rhs = m * (m - 1) + sum(degs[m:])
    if lhs != rhs:
        return None
    C = set(order[:m])
    I = set(order[m:])
    # promote I-vertices adjacent to all of C (paper assumes maximal C)
    changed = True
    while changed:
        changed = False
        for v in sorted(I):
            if C <= g.adj[v]:
                # keep C a clique: v joins, and one non-neighbor must leave?
                # v adjacent to all of C, and I stays independent, so just move.
                C.add(v)
                I.remove(v)
                changed = True
                break
    if not _validate_partition(g, C, I):
        return None
    return make_partition(g, C, I)


def all_split_partitions(g: Graph):
    """Every split partition of g with a maximal clique side (brute force).

    Exponential; intended for the partition-independence tests at n <= 8.
    """
    from itertools import combinations

    out = []
    vs = list(g.vertices)
    for k in range(g.n + 1):
        for Cs in combinations(vs, k):
            C = set(Cs)
            I = set(vs) - C
            if _validate_partition(g, C, I) and not any(C <= g.adj[v] for v in I):
                out.append(make_partition(g, C, I))
    return out


def is_k1t_free(g: Graph, t: int) -> bool:
    """True iff no vertex has t pairwise non-adjacent neighbors (exact search)."""
    if t < 1:
        raise ValueError("t must be positive")

    def has_indep(cands, need, start):
        if need == 0:
            return True
        for i in range(start, len(cands)):
            v = cands[i]
            rest = [u for u in cands[i + 1:] if u not in g.adj[v]]
            if len(rest) >= need - 1 and has_indep_list(rest, need - 1):
                return True
        return False

    def has_indep_list(cands, need):
        if need == 0:
            return True
        if len(cands) < need:
            return False
        v = cands[0]
        rest = [u for u in cands[1:] if u not in g.adj[v]]
        if has_indep_list(rest, need - 1):
            return True
        return has_indep_list(cands[1:], need)

    for v in g.vertices:
        nb = sorted(g.adj[v])
        if len(nb) >= t and has_indep_list(nb, t):
            return False
    return True


def claw_free_split_check(g: Graph, p: SplitPartition) -> bool:
    """Characterization of claw-free connected split graphs via Delta^I."""
    if not _validate_partition(g, set(p.clique), set(p.independent)):
        raise NotApplicableError("partition does not fit the graph")
    if p.deltaI <= 1:
        return True
    if p.deltaI == 2:
        I = p.independent
        deg2 = [v for v in p.clique if len(g.adj[v] & I) == 2]
        for v in deg2:
            nv = g.adj[v] & I
            for u in p.clique:
                if u == v:
                    continue
                if not (g.adj[u] & I) & nv:
                    return False
        return True
    return False


def k14_free_3split_check(g: Graph, p: SplitPartition) -> bool:
    """3-split graphs: K_{1,4}-free iff every d^I=3 clique vertex shares an
    I-neighbor with every other clique vertex."""
    if p.deltaI != 3:
        raise NotApplicableError("check applies to 3-split graphs only")
    I = p.independent
    for v in p.clique:
        nv = g.adj[v] & I
        if len(nv) != 3:
            continue
        for u in p.clique:
            if u == v:
                continue
            if not (g.adj[u] & I) & nv:
                return False
    return True


# ---------------------------------------------------------------------------
# chordal machinery

def lex_bfs(g: Graph):
    """Lexicographic BFS order (ties by ascending id); reversed it is a PEO
    candidate for chordal graphs."""
    label = {v: [] for v in g.vertices}
    order = []
    unvisited = set(g.vertices)
    while unvisited:
        # max label, ties by smaller id
        v = None
        for u in sorted(unvisited):
            if v is None or label[u] > label[v]:
                v = u
        order.append(v)
        unvisited.remove(v)
        for u in g.adj[v] & unvisited:
            label[u].append(len(order) * -1)
    return order


def perfect_elimination_ordering(g: Graph):
    """Returns a PEO (list, eliminated first to last) or None if not chordal."""
    order = lex_bfs(g)
    peo = list(reversed(order))
    pos = {v: i for i, v in enumerate(peo)}
    # verify: for each v, later neighbors must form a clique (check via parent)
    for v in peo:
        later = [u for u in g.adj[v] if pos[u] > pos[v]]
        if not later:
            continue
        parent = min(later, key=lambda u: pos[u])
        rest = set(later) - {parent}
        if not rest <= g.adj[parent]:
            return None
    return peo


def is_chordal(g: Graph) -> bool:
    return perfect_elimination_ordering(g) is not None


def maximal_cliques_chordal(g: Graph, peo=None):
    """All maximal cliques of a chordal graph, via the PEO (at most n of them)."""
    if peo is None:
        peo = perfect_elimination_ordering(g)
        if peo is None:
            raise NotApplicableError("graph is not chordal")
    pos = {v: i for i, v in enumerate(peo)}
    cands = []
    for v in peo:
        c = frozenset({v} | {u for u in g.adj[v] if pos[u] > pos[v]})
        cands.append(c)
    cliques = []
    for c in cands:
        if not any(c < d for d in cands):
            if c not in cliques:
                cliques.append(c)
    return sorted(cliques, key=lambda c: sorted(c))


@dataclass
class CliqueTree:
    nodes: list                      # list of frozensets (maximal cliques)
    tree_edges: set                  # unordered pairs of node indices
    vertex_paths: dict = field(default_factory=dict)
    path_property: bool = False

    def compute_vertex_data(self, g: Graph):
        nbrs = {i: set() for i in range(len(self.nodes))}
        for i, j in self.tree_edges:
            nbrs[i].add(j)
            nbrs[j].add(i)
        self.vertex_paths = {
            v: [i for i, c in enumerate(self.nodes) if v in c] for v in g.vertices
        }
        self.path_property = True
        for v, ids in self.vertex_paths.items():
            sub = set(ids)
            degs = [len(nbrs[i] & sub) for i in ids]
            # connected and a path: |edges| = |nodes|-1 and max degree <= 2
            inner_edges = sum(degs) // 2
            if inner_edges != len(ids) - 1 or (degs and max(degs) > 2):
                self.path_property = False
                continue
            if not self._connected(sub, nbrs):
                self.path_property = False

    @staticmethod
    def _connected(sub, nbrs):
        if not sub:
            return True
        seen = set()
        stack = [next(iter(sorted(sub)))]
        while stack:
            x = stack.pop()
            if x in seen:
                continue
            seen.add(x)
            stack.extend(nbrs[x] & sub - seen)
        return seen == sub

    def vertex_subtrees_connected(self):
        nbrs = {i: set() for i in range(len(self.nodes))}
        for i, j in self.tree_edges:
            nbrs[i].add(j)
            nbrs[j].add(i)
        return all(self._connected(set(ids), nbrs) for ids in self.vertex_paths.values())


def clique_tree(g: Graph):
    """Clique tree of a chordal graph (None if not chordal).

    Built as a maximum-weight spanning tree over clique intersection sizes;
    ties break by the (i, j) pair order, so the tree is reproducible.
    The path_property flag reports whether every vertex's cliques induce a
    path (the undirected-path-graph condition).
    """
    peo = perfect_elimination_ordering(g)
    if peo is None:
        return None
    nodes = maximal_cliques_chordal(g, peo)
    k = len(nodes)
    edges = []
    for i in range(k):
        for j in range(i + 1, k):
            w = len(nodes[i] & nodes[j])
            if w > 0:
                edges.append((-w, i, j))
    edges.sort()
    parent = list(range(k))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    tree_edges = set()
    for _, i, j in edges:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
            tree_edges.add((i, j))
    # a connected chordal graph yields a tree; for disconnected graphs join
    # components with zero-weight edges (smallest indices first)
    roots = sorted({find(i) for i in range(k)})
    for extra in roots[1:]:
        tree_edges.add((roots[0], extra))
        parent[find(extra)] = find(roots[0])
    ct = CliqueTree(nodes, tree_edges)
    ct.compute_vertex_data(g)
    return ct


def chordal_max_independent_set(g: Graph):
    """Maximum independent set of a chordal graph (greedy along a PEO)."""
    peo = perfect_elimination_ordering(g)
    if peo is None:
        raise NotApplicableError("graph is not chordal")
    chosen = set()
    blocked = set()
    for v in peo:
        if v not in blocked:
            chosen.add(v)
            blocked.add(v)
            blocked |= g.adj[v]
    return chosen


def connected_components(g: Graph):
    """Maximal connected vertex sets, ordered by smallest contained id."""
    seen = set()
    comps = []
    for s in g.vertices:
        if s in seen:
            continue
        comp = set()
        stack = [s]
        while stack:
            x = stack.pop()
            if x in comp:
                continue
            comp.add(x)
            stack.extend(g.adj[x] - comp)
        seen |= comp
        comps.append(comp)
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1
