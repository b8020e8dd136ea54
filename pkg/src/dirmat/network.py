"""Networks with boundary.

A network is a finite connected simple graph together with a distinguished set
of at least two boundary nodes which spans no edge. Everything downstream
(matroids, polynomials, response matrices, duals) is built on top of this
module: validation, boundary-to-boundary paths, interior blocks, groves, and
the two derived graphs (boundary nodes identified to a single node, and the
boundary turned into a clique).
"""

import json

from .errors import (
    BadParameter,
    BoundaryEdge,
    BoundaryTooSmall,
    Disconnected,
    LoopOrMultiEdge,
    UnknownLabel,
)

EH = "eh"  # reserved label for the extra lift element


class MultiGraph:
    """A labelled multigraph. Loops and parallel edges are allowed.

    Edges are (label, u, v) triples with unique labels. This is the carrier
    for quotients and duals, where parallels naturally appear.
    """

    def __init__(self, vertices, edges):
        self.vertices = tuple(sorted(set(vertices)))
        vset = set(self.vertices)
        seen = set()
        norm = {}
        for label, u, v in edges:
            if label in seen:
                raise BadParameter(f"duplicate edge label {label!r}")
            seen.add(label)
            if u not in vset or v not in vset:
                raise UnknownLabel(f"edge {label!r} uses unknown vertex")
            norm[label] = (u, v) if u <= v else (v, u)
        self.edges = norm
        self.edge_order = tuple(sorted(norm))
        adj = {v: [] for v in self.vertices}
        for label in self.edge_order:
            u, v = norm[label]
            adj[u].append((label, v))
            if v != u:
                adj[v].append((label, u))
        self.adj = adj

    def degree(self, v):
        # a loop contributes 2
        return sum(2 if w == v else 1 for _, w in self.adj[v])

    def has_loop(self):
        return any(u == v for u, v in self.edges.values())

    def loops(self):
        return sorted(e for e, (u, v) in self.edges.items() if u == v)

    def parallel_classes(self):
        """Nontrivial classes of parallel non-loop edges, as sorted tuples."""
        byends = {}
        for e, (u, v) in self.edges.items():
            if u != v:
                byends.setdefault((u, v), []).append(e)
        return sorted(tuple(sorted(es)) for es in byends.values() if len(es) > 1)

    def components(self):
        seen = set()
        out = []
        for s in self.vertices:
            if s in seen:
                continue
            comp = {s}
            stack = [s]
            while stack:
                x = stack.pop()
                for _, y in self.adj[x]:
                    if y not in comp:
                        comp.add(y)
                        stack.append(y)
            seen |= comp
            out.append(frozenset(comp))
        return sorted(out, key=lambda c: sorted(c))

    def is_connected(self):
        return len(self.components()) <= 1

    def restrict(self, edge_labels):
        """Spanning subgraph keeping only the given edges."""
        keep = set(edge_labels)
        return MultiGraph(
            self.vertices,
            [(e, u, v) for e, (u, v) in self.edges.items() if e in keep],
        )

    def simplify(self):
        """Simple graph on the same vertices: drop loops, collapse parallels.

        Returns (graph, kept) where kept maps each surviving label to its
        parallel class.
        """
        byends = {}
        for e, (u, v) in sorted(self.edges.items()):
            if u == v:
                continue
            byends.setdefault((u, v), []).append(e)
        edges = []
        kept = {}
        for (u, v), es in sorted(byends.items()):
            edges.append((es[0], u, v))
            kept[es[0]] = tuple(es)
        return MultiGraph(self.vertices, edges), kept


class Network:
    """A connected simple graph with an independent boundary set.

    Validation happens at construction time and raises the taxonomy errors,
    so any Network object in hand is valid.
    """

    def __init__(self, vertices, boundary, edges, name=None, _skip=False):
        vs = list(vertices)
        if len(set(vs)) != len(vs):
            raise BadParameter("duplicate vertex labels")
        vset = set(vs)
        bd = list(boundary)
        if len(set(bd)) != len(bd):
            raise BadParameter("duplicate boundary labels")
        for b in bd:
            if b not in vset:
                raise UnknownLabel(f"boundary node {b!r} is not a vertex")
        if len(bd) < 2:
            raise BoundaryTooSmall(f"need at least 2 boundary nodes, got {len(bd)}")
        if len(bd) >= len(vs):
            raise BoundaryTooSmall("boundary must be a proper subset of the vertices")

        self.vertices = tuple(sorted(vs))
        self.boundary = tuple(sorted(bd))
        self._bset = frozenset(bd)
        self.interior = tuple(v for v in self.vertices if v not in self._bset)
        self.name = name or "network"

        edict = {}
        ends_seen = set()
        for item in edges:
            if len(item) == 3:
                label, u, v = item
            else:
                u, v = item
                label = f"{min(u, v)}-{max(u, v)}"
            if label == EH:
                raise BadParameter(f"edge label {EH!r} is reserved")
            if label in edict:
                raise BadParameter(f"duplicate edge label {label!r}")
            if u not in vset or v not in vset:
                raise UnknownLabel(f"edge {label!r} joins unknown vertices {u!r},{v!r}")
            if u == v:
                raise LoopOrMultiEdge(f"loop at {u!r}")
            key = (u, v) if u <= v else (v, u)
            if key in ends_seen:
                raise LoopOrMultiEdge(f"parallel edge {u!r}-{v!r}")
            ends_seen.add(key)
            if u in self._bset and v in self._bset:
                raise BoundaryEdge(f"edge {label!r} joins two boundary nodes")
            edict[label] = key
        self.edges = edict
        self.edge_order = tuple(sorted(edict))

        adj = {v: [] for v in self.vertices}
        for label in self.edge_order:
            u, v = edict[label]
            adj[u].append((label, v))
            adj[v].append((label, u))
        self.adj = adj

        # connectivity
        if self.vertices:
            seen = {self.vertices[0]}
            stack = [self.vertices[0]]
            while stack:
                x = stack.pop()
                for _, y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            if len(seen) != len(self.vertices):
                raise Disconnected(
                    f"{len(self.vertices) - len(seen)} vertices unreachable"
                )

        self._cache = {}

    # -- basics ---------------------------------------------------------

    def is_boundary(self, v):
        return v in self._bset

    def other_end(self, e, v):
        u, w = self.edges[e]
        return w if v == u else u

    def edge_index(self):
        return {e: i for i, e in enumerate(self.edge_order)}

    def require_edges(self, labels):
        for e in labels:
            if e not in self.edges and e != EH:
                raise UnknownLabel(f"unknown edge label {e!r}")

    def __repr__(self):
        return (
            f"Network({self.name}: {len(self.vertices)} vertices, "
            f"{len(self.boundary)} boundary, {len(self.edges)} edges)"
        )

    # -- serialization ----------------------------------------------------

    def to_json(self):
        data = {
            "vertices": list(self.vertices),
            "boundary": list(self.boundary),
            "edges": [[u, v, e] for e, (u, v) in sorted(self.edges.items())],
        }
        emb = getattr(self, "embedding_json", None)
        if emb:
            data["embedding"] = emb()
        return data

    @classmethod
    def from_json(cls, data):
        if not isinstance(data, dict):
            raise BadParameter("network JSON must be an object")
        for key in ("vertices", "boundary", "edges"):
            if key not in data:
                raise BadParameter(f"network JSON lacks {key!r}")
        edges = []
        for item in data["edges"]:
            if not isinstance(item, (list, tuple)) or len(item) not in (2, 3):
                raise BadParameter(f"bad edge entry {item!r}")
            if len(item) == 3:
                edges.append((item[2], item[0], item[1]))
            else:
                edges.append(tuple(item))
        if data.get("embedding"):
            from .circular import CircularNetwork

            emb = data["embedding"]
            if "rotation" not in emb or "boundary_order" not in emb:
                raise BadParameter("embedding needs rotation and boundary_order")
            return CircularNetwork(
                data["vertices"],
                data["boundary"],
                edges,
                rotation=emb["rotation"],
                boundary_order=emb["boundary_order"],
                name=data.get("name"),
            )
        return cls(data["vertices"], data["boundary"], edges, name=data.get("name"))

    @classmethod
    def from_file(cls, path):
        with open(path) as fh:
            try:
                data = json.load(fh)
            except json.JSONDecodeError as exc:
                raise BadParameter(f"invalid JSON: {exc}") from None
        return cls.from_json(data)


# -- derived graphs -------------------------------------------------------


def identify_boundary(net):
    """Identify all boundary nodes to one node.

    Returns (multigraph, hub) where hub is the new node's label. Edge labels
    are preserved; parallels appear whenever an interior node has several
    boundary neighbours, loops never do (no boundary-boundary edges).
    """
    hub = "*"
    while hub in net.vertices:
        hub += "*"
    vertices = list(net.interior) + [hub]
    edges = []
    for e, (u, v) in sorted(net.edges.items()):
        uu = hub if net.is_boundary(u) else u
        vv = hub if net.is_boundary(v) else v
        edges.append((e, uu, vv))
    return MultiGraph(vertices, edges), hub


def add_boundary_clique(net):
    """The graph plus a complete graph on the boundary nodes.

    Simple by construction since a valid network has no boundary-boundary
    edges. Added edges get labels '+i' in sorted pair order.
    """
    edges = [(e, u, v) for e, (u, v) in sorted(net.edges.items())]
    pairs = []
    bd = net.boundary
    for i in range(len(bd)):
        for j in range(i + 1, len(bd)):
            pairs.append((bd[i], bd[j]))
    for k, (u, v) in enumerate(sorted(pairs)):
        edges.append((f"+{k}", u, v))
    return MultiGraph(net.vertices, edges)


# -- crossings ------------------------------------------------------------


def crossings(net):
    """All boundary-to-boundary paths with interior middles.

    Each is returned as a frozenset of edge labels (a path's edge set
    determines it). Sorted deterministically.
    """
    key = "crossings"
    if key in net._cache:
        return net._cache[key]
    found = {}
    bd = net.boundary
    for b in bd:
        # DFS over simple paths leaving b through interior vertices only
        stack = [(b, [], set())]
        while stack:
            x, path_edges, used = stack.pop()
            for e, y in net.adj[x]:
                if e in path_edges:
                    continue
                if net.is_boundary(y):
                    if y != b and path_edges:
                        fs = frozenset(path_edges + [e])
                        if fs not in found:
                            found[fs] = (min(b, y), max(b, y))
                    elif y != b and not path_edges:
                        # a direct boundary-boundary edge cannot exist
                        continue
                    continue
                if y in used:
                    continue
                stack.append((y, path_edges + [e], used | {y}))
    out = tuple(sorted(found, key=lambda fs: sorted(fs)))
    net._cache[key] = out
    net._cache["crossing_ends"] = {fs: found[fs] for fs in out}
    return out


def crossing_endpoints(net):
    """Map each crossing to its (sorted) pair of boundary endpoints."""
    crossings(net)
    return dict(net._cache["crossing_ends"])


def crossing_pair_graph(net):
    """The graph on boundary nodes with an edge for each crossing pair."""
    pairs = sorted(set(crossing_endpoints(net).values()))
    return pairs


# -- blocks and tracts ------------------------------------------------------


def _interior_components(net):
    comp_of = {}
    comps = []
    for s in net.interior:
        if s in comp_of:
            continue
        comp = {s}
        stack = [s]
        while stack:
            x = stack.pop()
            for _, y in net.adj[x]:
                if not net.is_boundary(y) and y not in comp:
                    comp.add(y)
                    stack.append(y)
        for v in comp:
            comp_of[v] = len(comps)
        comps.append(comp)
    return comps, comp_of


def block_decomposition(net):
    """Pairs (vertex set, edge set), one per interior component: the
    component plus its adjacent boundary nodes, and every edge with an
    endpoint in the component. The edge sets partition E because
    boundary-boundary edges are forbidden."""
    comps, comp_of = _interior_components(net)
    pairs = []
    for k, comp in enumerate(comps):
        bset = set()
        for v in comp:
            for _, y in net.adj[v]:
                if net.is_boundary(y):
                    bset.add(y)
        eset = {
            e
            for e, (u, v) in net.edges.items()
            if comp_of.get(u) == k or comp_of.get(v) == k
        }
        pairs.append((frozenset(comp | bset), frozenset(eset)))
    pairs.sort(key=lambda p: sorted(p[1]))
    return tuple(pairs)


def blocks(net):
    """Interior components together with their adjacent boundary nodes."""
    return tuple(p[0] for p in block_decomposition(net))


def tracts(net):
    """The edge sets of the blocks. They partition the edge set."""
    return tuple(p[1] for p in block_decomposition(net))


def block_boundary_counts(net):
    """For each block, how many boundary nodes it contains."""
    return tuple(
        sum(1 for v in blk if net.is_boundary(v)) for blk in blocks(net)
    )


def interior_is_connected(net):
    comps, _ = _interior_components(net)
    return len(comps) <= 1


# -- groves ---------------------------------------------------------------

_GROVE_MODES = ("no-crossing", "one-crossing", "all")


def groves(net, mode="all"):
    """Enumerate groves: forests covering the interior, every tree touching
    the boundary.

    mode: 'no-crossing' (no completed crossing), 'one-crossing' (exactly
    one), or 'all'. Returns a sorted tuple of frozensets of edge labels.
    """
    if mode not in _GROVE_MODES:
        raise BadParameter(f"grove mode must be one of {_GROVE_MODES}")
    key = ("groves", mode)
    if key in net._cache:
        return net._cache[key]

    order = net.edge_order
    n = len(order)
    eidx = {e: i for i, e in enumerate(order)}
    vidx = {v: i for i, v in enumerate(net.vertices)}
    nv = len(net.vertices)
    ends = [(vidx[net.edges[e][0]], vidx[net.edges[e][1]]) for e in order]
    is_bd = [net.is_boundary(v) for v in net.vertices]

    cross_masks = []
    for fs in crossings(net):
        m = 0
        for e in fs:
            m |= 1 << eidx[e]
        cross_masks.append(m)
    per_edge_cross = [[] for _ in range(n)]
    for cm in cross_masks:
        for i in range(n):
            if cm >> i & 1:
                per_edge_cross[i].append(cm)

    max_cross = {"no-crossing": 0, "one-crossing": 1, "all": n + 1}[mode]

    parent = list(range(nv))
    size = [1] * nv
    meets_bd = list(is_bd)

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    # remaining undecided-or-included incident edge count per vertex
    remaining = [0] * nv
    for a, b in ends:
        remaining[a] += 1
        remaining[b] += 1
    covered = [0] * nv

    out = []
    chosen_mask = 0
    trail = []

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra == rb:
            return None
        if size[ra] < size[rb]:
            ra, rb = rb, ra
        parent[rb] = ra
        size[ra] += size[rb]
        old_flag = meets_bd[ra]
        meets_bd[ra] = meets_bd[ra] or meets_bd[rb]
        return (ra, rb, old_flag)

    def undo(rec):
        ra, rb, old_flag = rec
        parent[rb] = rb
        size[ra] -= size[rb]
        meets_bd[ra] = old_flag

    def emit():
        # every included-edge component must reach the boundary
        roots = set()
        for i in range(n):
            if chosen_mask >> i & 1:
                a, b = ends[i]
                roots.add(find(a))
                roots.add(find(b))
        for r in roots:
            if not meets_bd[r]:
                return
        fs = frozenset(order[i] for i in range(n) if chosen_mask >> i & 1)
        out.append(fs)

    def rec(i, ncross):
        nonlocal chosen_mask
        if i == n:
            if mode != "one-crossing" or ncross == 1:
                emit()
            return
        a, b = ends[i]

        # include branch
        ra, rb = find(a), find(b)
        if ra != rb:
            completed = 0
            new_mask = chosen_mask | (1 << i)
            for cm in per_edge_cross[i]:
                if cm & new_mask == cm:
                    completed += 1
            if ncross + completed <= max_cross:
                recu = union(a, b)
                chosen_mask = new_mask
                covered[a] += 1
                covered[b] += 1
                rec(i + 1, ncross + completed)
                covered[a] -= 1
                covered[b] -= 1
                chosen_mask = new_mask & ~(1 << i)
                if recu:
                    undo(recu)

        # exclude branch: interior coverage must stay possible
        remaining[a] -= 1
        remaining[b] -= 1
        ok = True
        if not is_bd[a] and covered[a] == 0 and remaining[a] == 0:
            ok = False
        if ok and not is_bd[b] and covered[b] == 0 and remaining[b] == 0:
            ok = False
        if ok:
            rec(i + 1, ncross)
        remaining[a] += 1
        remaining[b] += 1

    rec(0, 0)
    result = tuple(sorted(out, key=lambda fs: sorted(fs)))
    net._cache[key] = result
    return result


def grove_crossing(net, fs):
    """The unique crossing inside a one-crossing grove, and its endpoints."""
    ends = crossing_endpoints(net)
    hit = [c for c in ends if c <= fs]
    if len(hit) != 1:
        raise BadParameter("not a one-crossing grove")
    return hit[0], ends[hit[0]]
