"""Small definition-level oracles used to cross-check the package.

Everything here is written from the definitions, independent of the package
internals, and only meant for tiny inputs.
"""

from itertools import combinations

from dirmat.network import EH


def brute_crossings(net):
    """Boundary-to-boundary simple paths with interior middles, by DFS."""
    adj = {v: [] for v in net.vertices}
    for e, (u, v) in net.edges.items():
        adj[u].append((e, v))
        adj[v].append((e, u))
    bd = set(net.boundary)
    found = set()

    def walk(v, goal_pool, used_edges, used_verts):
        for e, w in adj[v]:
            if e in used_edges:
                continue
            if w in bd:
                if w in goal_pool:
                    found.add(frozenset(used_edges | {e}))
                continue
            if w in used_verts:
                continue
            walk(w, goal_pool, used_edges | {e}, used_verts | {w})

    for b in bd:
        walk(b, bd - {b}, set(), {b})
    return found


def _acyclic(net, labels):
    parent = {v: v for v in net.vertices}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for e in labels:
        u, v = net.edges[e]
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def brute_independent(net, subset):
    """Independence straight from the grove definition."""
    subset = set(subset)
    edge_part = subset - {EH}
    if not _acyclic(net, edge_part):
        return False
    inside = sum(1 for c in brute_crossings(net) if c <= edge_part)
    budget = 0 if EH in subset else 1
    return inside <= budget


def brute_rank(net, subset):
    subset = list(subset)
    best = 0
    for r in range(len(subset), -1, -1):
        for c in combinations(subset, r):
            if brute_independent(net, c):
                return r
    return best


def brute_color_count(mg, k):
    """Proper colorings of a multigraph with k colors, by enumeration."""
    verts = list(mg.vertices)
    pairs = set()
    for u, v in mg.edges.values():
        if u == v:
            return 0
        pairs.add((u, v))

    def rec(i, coloring):
        if i == len(verts):
            return 1
        total = 0
        v = verts[i]
        for c in range(k):
            coloring[v] = c
            ok = all(
                coloring.get(a) != c if b == v else coloring.get(b) != c
                for a, b in pairs
                if v in (a, b)
            )
            if ok:
                total += rec(i + 1, coloring)
            del coloring[v]
        return total

    return rec(0, {})
