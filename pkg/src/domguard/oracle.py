"""Exact (exponential-time) ground truth for gamma, gamma^infty and
gamma_m^infty via greatest-fixed-point search over guard configurations.

Configurations are bitmasks over vertex ids.  The all-guards fixed point
starts from every dominating k-subset and deletes any configuration that
cannot answer some attack inside the surviving set; the result is the
greatest fixed point, i.e. the winning set certifying gamma_m^infty <= k.

A configurable budget bounds the number of reachability (matching) tests;
exhausting it raises BudgetExceededError, which is an explicit "unknown"
outcome, never silently treated as infeasible.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, NotApplicableError, connected_components
from .graph import chordal_max_independent_set, is_chordal

DEFAULT_BUDGET = 50_000_000


class BudgetExceededError(RuntimeError):
    """The oracle ran out of its config-pair test budget (outcome unknown)."""


class Budget:
    def __init__(self, limit=DEFAULT_BUDGET):
        self.limit = limit
        self.used = 0

    def spend(self, amount=1):
        self.used += amount
        if self.used > self.limit:
            raise BudgetExceededError(
                f"exceeded budget of {self.limit} config-pair tests")


def _mask(vertices):
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _bits(mask):
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def is_dominating(g: Graph, s) -> bool:
    """True iff N[s] covers every vertex."""
    m = 0
    for v in s:
        m |= g.neighborhood_mask(v)
    return m == (1 << g.n) - 1


def guards_move_reachable(g: Graph, d, d2) -> bool:
    """True iff d2 is obtainable from d by a guards move: a perfect matching
    pairing each guard x in d with a target x' in N[x] covering all of d2."""
    d, d2 = set(d), set(d2)
    if len(d) != len(d2):
        raise ValueError("guard counts differ")
    return _matching_reachable(g, _mask(d), _mask(d2),
                               [g.neighborhood_mask(v) for v in range(g.n)])


def _matching_reachable(g, dm, d2m, nbhd):
    if dm == d2m:
        return True
    guards = _bits(dm)
    targets = _bits(d2m)
    tpos = {t: i for i, t in enumerate(targets)}
    # quick necessary conditions
    cover = 0
    for u in guards:
        cover |= nbhd[u]
    if d2m & ~cover:
        return False
    cover2 = 0
    for t in targets:
        cover2 |= nbhd[t]
    if dm & ~cover2:
        return False
    adj = []
    for u in guards:
        opts = nbhd[u] & d2m
        adj.append([tpos[t] for t in _bits(opts)])
    # Kuhn's algorithm, guards in ascending vertex order
    match_t = [-1] * len(targets)

    def try_assign(ui, seen):
        for ti in adj[ui]:
            if ti in seen:
                continue
            seen.add(ti)
            if match_t[ti] == -1 or try_assign(match_t[ti], seen):
                match_t[ti] = ui
                return True
        return False

    for ui in range(len(guards)):
        if not try_assign(ui, set()):
            return False
    return True


@dataclass
class WinningSet:
    k: int
    masks: list

    @property
    def configs(self):
        return [frozenset(_bits(m)) for m in self.masks]

    def __len__(self):
        return len(self.masks)

    def __contains__(self, config):
        if isinstance(config, int):
            return config in set(self.masks)
        return _mask(config) in set(self.masks)


def dominating_k_subsets(g: Graph, k):
    """All dominating sets of size exactly k, as sorted bitmasks."""
    n = g.n
    full = (1 << n) - 1
    nbhd = [g.neighborhood_mask(v) for v in range(n)]
    # suffix[i] = union of N[v] for v >= i, for pruning
    suffix = [0] * (n + 1)
    for v in range(n - 1, -1, -1):
        suffix[v] = suffix[v + 1] | nbhd[v]
    out = []

    def rec(start, left, mask, covered):
        if covered == full and left == 0:
            out.append(mask)
            return
        if left == 0:
            return
        if covered | suffix[start] != full:
            return
        if n - start < left:
            return
        for v in range(start, n):
            if n - v < left:
                break
            if covered | suffix[v] != full:
                break
            rec(v + 1, left - 1, mask | (1 << v), covered | nbhd[v])

    rec(0, k, 0, 0)
    return out


def _medn_fixed_point(g: Graph, k, budget):
    """Greatest fixed point of the all-guards attack-defense relation over
    dominating k-subsets.  Returns the list of surviving masks."""
    return greatest_fixed_point(g, dominating_k_subsets(g, k), budget)


def greatest_fixed_point(g: Graph, masks, budget):
    """Kill loop over an arbitrary candidate config list: repeatedly delete
    configs with an unanswerable attack, until stable."""
    if not masks:
        return []
    n = g.n
    nbhd = [g.neighborhood_mask(v) for v in range(n)]
    size = len(masks)
    nd = [0] * size  # union of guard neighborhoods per config
    for i, m in enumerate(masks):
        acc = 0
        mm = m
        v = 0
        while mm:
            if mm & 1:
                acc |= nbhd[v]
            mm >>= 1
            v += 1
        nd[i] = acc
    by_vertex = [[] for _ in range(n)]
    for i, m in enumerate(masks):
        for v in _bits(m):
            by_vertex[v].append(i)

    alive = [True] * size
    # witness[i][r] = index of a surviving successor containing r (or -1)
    witness = [[-2] * n for _ in range(size)]
    for i, m in enumerate(masks):
        for r in range(n):
            if (m >> r) & 1:
                witness[i][r] = i  # identity answers attacks on occupied

    def find_witness(i, r):
        mi = masks[i]
        ndi = nd[i]
        for j in by_vertex[r]:
            if not alive[j]:
                continue
            mj = masks[j]
            if mj & ~ndi or mi & ~nd[j]:
                continue
            budget.spend()
            if _matching_reachable(g, mi, mj, nbhd):
                return j
        return -1

    pending = [(i, r) for i in range(size) for r in range(n)
               if witness[i][r] == -2]
    while pending:
        killed = []
        for i, r in pending:
            if not alive[i]:
                continue
            w = witness[i][r]
            if w >= 0 and alive[w]:
                continue
            w = find_witness(i, r)
            if w < 0:
                alive[i] = False
                killed.append(i)
            else:
                witness[i][r] = w
        if not killed:
            break
        dead = set(killed)
        pending = []
        for i in range(size):
            if not alive[i]:
                continue
            wi = witness[i]
            for r in range(n):
                w = wi[r]
                if w in dead or w == -2 or (w >= 0 and not alive[w]):
                    pending.append((i, r))
    return [m for i, m in enumerate(masks) if alive[i]]


def medn_feasible(g: Graph, k, budget=None):
    """WinningSet for k guards in the all-guards model, or None if infeasible.

    The graph must be connected (medn_oracle handles components)."""
    if len(connected_components(g)) != 1:
        raise NotApplicableError("medn_feasible expects a connected graph")
    if k > g.n:
        raise ValueError("k exceeds vertex count")
    budget = budget or Budget()
    surviving = _medn_fixed_point(g, k, budget)
    return WinningSet(k, surviving) if surviving else None


def medn_oracle(g: Graph, budget=None) -> int:
    """gamma_m^infty by fixed-point search, summed over components."""
    budget = budget or Budget()
    total = 0
    for comp in connected_components(g):
        sub, _ = g.induced(comp)
        k = gamma_exact(sub)
        while True:
            if _medn_fixed_point(sub, k, budget):
                total += k
                break
            k += 1
            if k > sub.n:
                raise AssertionError("no feasible k found (impossible)")
    return total


def _edn_fixed_point(g: Graph, k):
    """One-guard model: a config answers an attack on r either by identity
    (r occupied) or by moving exactly one guard along one edge onto r."""
    masks = set(dominating_k_subsets(g, k))
    if not masks:
        return []
    n = g.n
    changed = True
    while changed:
        changed = False
        for m in sorted(masks):
            ok = True
            for r in range(n):
                if (m >> r) & 1:
                    continue
                found = False
                for u in g.adj[r]:
                    if (m >> u) & 1:
                        m2 = (m & ~(1 << u)) | (1 << r)
                        if m2 in masks:
                            found = True
                            break
                if not found:
                    ok = False
                    break
            if not ok:
                masks.remove(m)
                changed = True
    return sorted(masks)


def edn_oracle(g: Graph, budget=None) -> int:
    """gamma^infty (one guard moves per attack), summed over components.

    On chordal inputs the independence number is an exact shortcut (perfect
    graphs); the fixed point result is asserted against it."""
    total = 0
    for comp in connected_components(g):
        sub, _ = g.induced(comp)
        k = gamma_exact(sub)
        while not _edn_fixed_point(sub, k):
            k += 1
            if k > sub.n:
                raise AssertionError("no feasible k found (impossible)")
        if is_chordal(sub):
            alpha = len(chordal_max_independent_set(sub))
            if alpha != k:
                raise AssertionError(
                    f"one-guard fixed point {k} disagrees with alpha {alpha} "
                    "on a chordal graph")
        total += k
    return total


def gamma_exact(g: Graph) -> int:
    """Minimum dominating set size by branch and bound."""
    n = g.n
    full = (1 << n) - 1
    nbhd = [g.neighborhood_mask(v) for v in range(n)]

    # greedy upper bound
    covered = 0
    best = 0
    while covered != full:
        v = max(range(n), key=lambda u: bin(nbhd[u] & ~covered).count("1"))
        covered |= nbhd[v]
        best += 1

    def lower_bound(covered):
        # greedy packing of vertices with pairwise disjoint closed nbhds
        need = 0
        used = 0
        for v in range(n):
            if (covered >> v) & 1:
                continue
            if nbhd[v] & used:
                continue
            used |= nbhd[v]
            need += 1
        return need

    best_holder = [best]

    def rec(covered, count):
        if covered == full:
            best_holder[0] = min(best_holder[0], count)
            return
        if count + lower_bound(covered) >= best_holder[0]:
            return
        # branch on the least undominated vertex: some vertex of N[v] is in
        # any dominating set
        v = next(v2 for v2 in range(n) if not (covered >> v2) & 1)
        for u in sorted(g.closed_nbhd(v)):
            rec(covered | nbhd[u], count + 1)

    rec(0, 0)
    return best_holder[0]


def alpha_exact(g: Graph) -> int:
    """Brute-force independence number (test oracle for small graphs)."""
    best = 0
    vs = list(g.vertices)

    def rec(i, chosen):
        nonlocal best
        best = max(best, len(chosen))
        if i == len(vs):
            return
        if len(chosen) + (len(vs) - i) <= best:
            return
        v = vs[i]
        if not (g.adj[v] & chosen):
            rec(i + 1, chosen | {v})
        rec(i + 1, chosen)

    rec(0, set())
    return best


def verify_winning_set(g: Graph, ws: WinningSet) -> bool:
    """Replay check: every member is dominating and every attack on every
    member is answerable inside the set."""
    nbhd = [g.neighborhood_mask(v) for v in range(g.n)]
    mask_set = set(ws.masks)
    for m in ws.masks:
        if not is_dominating(g, _bits(m)):
            return False
        for r in range(g.n):
            if (m >> r) & 1:
                continue
            if not any((m2 >> r) & 1 and _matching_reachable(g, m, m2, nbhd)
                       for m2 in mask_set):
                return False
    return True
