"""Maximum-cardinality matching in general graphs (blossom contraction).

Classic O(V^3) augmenting-path algorithm.  Vertices are scanned in ascending
order and adjacency in sorted order, so the returned matching is deterministic
for a fixed input.  The labeled graphs this is applied to are tiny, so the
cubic bound is irrelevant in practice.
"""

from __future__ import annotations


def max_cardinality_matching(n, edges):
    """Returns the matching as a sorted list of (u, v) pairs with u < v."""
    adj = [[] for _ in range(n)]
    for u, v in edges:
        if u == v:
            continue
        adj[u].append(v)
        adj[v].append(u)
    for a in adj:
        a.sort()

    match = [-1] * n
    p = [0] * n
    base = [0] * n

    def lca(a, b):
        used = [False] * n
        while True:
            a = base[a]
            used[a] = True
            if match[a] == -1:
                break
            a = p[match[a]]
        while True:
            b = base[b]
            if used[b]:
                return b
            b = p[match[b]]

    def mark_path(v, b, child, blossom):
        while base[v] != b:
            blossom[base[v]] = True
            blossom[base[match[v]]] = True
            p[v] = child
            child = match[v]
            v = p[match[v]]

    def find_path(root):
        used = [False] * n
        for i in range(n):
            p[i] = -1
            base[i] = i
        used[root] = True
        queue = [root]
        qi = 0
        while qi < len(queue):
            v = queue[qi]
            qi += 1
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and p[match[to]] != -1):
                    curbase = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, curbase, to, blossom)
                    mark_path(to, curbase, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = curbase
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif p[to] == -1:
                    p[to] = v
                    if match[to] == -1:
                        # augment along the path ending at `to`
                        u = to
                        while u != -1:
                            pv = p[u]
                            ppv = match[pv]
                            match[u] = pv
                            match[pv] = u
                            u = ppv
                        return True
                    used[match[to]] = True
                    queue.append(match[to])
        return False

    for v in range(n):
        if match[v] == -1:
            find_path(v)

    out = []
    for v in range(n):
        if match[v] > v:
            out.append((v, match[v]))
    return sorted(out)


def brute_force_max_matching_size(n, edges):
    """Exact maximum matching size by exhaustive search (test oracle)."""
    es = sorted({(min(u, v), max(u, v)) for u, v in edges if u != v})

    def rec(i, used):
        if i == len(es):
            return 0
        best = rec(i + 1, used)
        u, v = es[i]
        if not (used >> u) & 1 and not (used >> v) & 1:
            best = max(best, 1 + rec(i + 1, used | (1 << u) | (1 << v)))
        return best

    return rec(0, 0)
