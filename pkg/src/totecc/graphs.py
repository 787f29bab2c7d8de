"""Small undirected simple graphs with BFS distance/eccentricity machinery.

Vertices are the integers ``0..n-1`` and adjacency is stored as one int
bitmask per vertex, which keeps BFS, hashing and enumeration fast for the
orders this package targets (n <= 64).  Graphs are immutable values: every
edit returns a fresh ``Graph`` and the original is never touched.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

MAX_VERTICES = 64


class GraphError(ValueError):
    """Violation of a structural precondition (bad edge, wrong class, ...)."""


class DisconnectedGraphError(GraphError):
    """Raised where a connected graph is required (eccentricity is undefined)."""


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0..n-1``."""

    n: int
    adj: tuple[int, ...]

    @property
    def m(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> Iterator[int]:
        return _bits(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> tuple[tuple[int, int], ...]:
        """All edges as (u, v) pairs with u < v, in sorted order."""
        return tuple((u, v) for u in range(self.n) for v in _bits(self.adj[u]) if u < v)

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((a.bit_count() for a in self.adj), reverse=True))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"


@dataclass(frozen=True)
class EccProfile:
    """Per-vertex eccentricities plus the derived radius/diameter summary."""

    ecc: tuple[int, ...]
    rad: int
    diam: int
    center: tuple[int, ...]
    peripheral: tuple[int, ...]


@dataclass(frozen=True)
class GraphPath:
    """A vertex-simple path inside some host graph."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def ends(self) -> tuple[int, int]:
        return self.vertices[0], self.vertices[-1]


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list, deduplicating repeated pairs.

    Raises :class:`GraphError` for self-loops and out-of-range endpoints,
    naming the offending pair.
    """
    if not 1 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise GraphError(f"self-loop ({u}, {v}) is not allowed")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def add_edge(g: Graph, u: int, v: int) -> Graph:
    """Return a copy of ``g`` with the new edge ``uv``."""
    if u == v or not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphError(f"invalid edge ({u}, {v})")
    if g.has_edge(u, v):
        raise GraphError(f"edge ({u}, {v}) already present")
    adj = list(g.adj)
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    return Graph(g.n, tuple(adj))


def remove_edge(g: Graph, u: int, v: int) -> Graph:
    """Return a copy of ``g`` without the edge ``uv``."""
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise GraphError(f"edge ({u}, {v}) not present")
    adj = list(g.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph(g.n, tuple(adj))


def delete_vertex(g: Graph, v: int) -> Graph:
    """Return ``g - v`` with vertices above ``v`` shifted down by one."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range")
    if g.n == 1:
        raise GraphError("cannot delete the last vertex")
    keep = [u for u in range(g.n) if u != v]
    remap = {u: i for i, u in enumerate(keep)}
    return build_graph(
        g.n - 1,
        [(remap[a], remap[b]) for a, b in g.edges() if a != v and b != v],
    )


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Apply the vertex permutation ``perm`` (old id -> new id)."""
    if sorted(perm) != list(range(g.n)):
        raise GraphError("perm must be a permutation of 0..n-1")
    return build_graph(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


def bfs_distances(g: Graph, src: int) -> tuple[Optional[int], ...]:
    """Hop distances from ``src``; unreachable vertices are ``None``."""
    if not 0 <= src < g.n:
        raise GraphError(f"source {src} out of range")
    dist: list[Optional[int]] = [None] * g.n
    dist[src] = 0
    queue = deque([src])
    adj = g.adj
    while queue:
        u = queue.popleft()
        du = dist[u]
        for w in _bits(adj[u]):
            if dist[w] is None:
                dist[w] = du + 1
                queue.append(w)
    return tuple(dist)


def is_connected(g: Graph) -> bool:
    full = (1 << g.n) - 1
    seen = 1
    frontier = 1
    adj = g.adj
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == full


def _eccentricity_from(adj: tuple[int, ...], src: int, full: int) -> int:
    """Eccentricity of ``src`` by frontier expansion; raises if disconnected."""
    seen = 1 << src
    frontier = seen
    d = 0
    while seen != full:
        nxt = 0
        for v in _bits(frontier):
            nxt |= adj[v]
        frontier = nxt & ~seen
        if not frontier:
            raise DisconnectedGraphError("graph is not connected")
        seen |= frontier
        d += 1
    return d


def eccentricities(g: Graph) -> tuple[int, ...]:
    """Eccentricity of every vertex; requires a connected graph."""
    full = (1 << g.n) - 1
    adj = g.adj
    return tuple(_eccentricity_from(adj, v, full) for v in range(g.n))


def eccentricity_profile(g: Graph) -> EccProfile:
    """Eccentricities with radius, diameter, center and peripheral sets."""
    ecc = eccentricities(g)
    rad = min(ecc)
    diam = max(ecc)
    return EccProfile(
        ecc=ecc,
        rad=rad,
        diam=diam,
        center=tuple(v for v in range(g.n) if ecc[v] == rad),
        peripheral=tuple(v for v in range(g.n) if ecc[v] == diam),
    )


def eccentric_set(g: Graph, u: int) -> frozenset[int]:
    """Vertices at distance exactly ecc(u) from ``u``."""
    dist = bfs_distances(g, u)
    if any(d is None for d in dist):
        raise DisconnectedGraphError("graph is not connected")
    e = max(dist)
    return frozenset(v for v in range(g.n) if dist[v] == e)


def diametrical_path(g: Graph) -> GraphPath:
    """A shortest path realising the diameter, with a deterministic tie-break.

    The source is the smallest-id peripheral vertex, the target the smallest
    id at diameter distance from it, and each step takes the smallest-id
    neighbor that still shortens the way, so the returned vertex sequence is
    the lexicographically least diametrical path from that source.
    """
    profile = eccentricity_profile(g)
    u = profile.peripheral[0]
    du = bfs_distances(g, u)
    v = min(w for w in range(g.n) if du[w] == profile.diam)
    back = bfs_distances(g, v)
    path = [u]
    cur = u
    while cur != v:
        cur = min(w for w in g.neighbors(cur) if back[w] == back[cur] - 1)
        path.append(cur)
    return GraphPath(tuple(path))


def classify(g: Graph) -> str:
    """Label ``g`` as 'tree', 'unicyclic', 'bicyclic' or 'other'."""
    if not is_connected(g):
        return "other"
    excess = g.m - g.n
    if excess == -1:
        return "tree"
    if excess == 0:
        return "unicyclic"
    if excess == 1:
        return "bicyclic"
    return "other"


def is_tree(g: Graph) -> bool:
    return classify(g) == "tree"


def simple_cycles(g: Graph) -> tuple[tuple[int, ...], ...]:
    """All simple cycles of a graph with cycle rank at most two.

    Cycles are recovered from the fundamental cycles of a spanning tree; with
    rank <= 2 the only candidates are the two fundamental cycles and their
    symmetric difference.  Each cycle is returned as a canonically rotated
    vertex tuple.
    """
    if not is_connected(g):
        raise DisconnectedGraphError("graph is not connected")
    rank = g.m - g.n + 1
    if rank > 2:
        raise GraphError(f"cycle rank {rank} exceeds the supported bound of 2")
    if rank <= 0:
        return ()

    parent: dict[int, int] = {0: -1}
    order = [0]
    stack = [0]
    tree_edges = set()
    while stack:
        u = stack.pop()
        for w in g.neighbors(u):
            if w not in parent:
                parent[w] = u
                tree_edges.add((min(u, w), max(u, w)))
                order.append(w)
                stack.append(w)
    extra = [e for e in g.edges() if e not in tree_edges]

    def fundamental(e: tuple[int, int]) -> frozenset[tuple[int, int]]:
        u, v = e
        au, av = [], []
        x = u
        while x != -1:
            au.append(x)
            x = parent[x]
        x = v
        while x != -1:
            av.append(x)
            x = parent[x]
        common = set(au) & set(av)
        pu = [x for x in au if x not in common]
        pv = [x for x in av if x not in common]
        meet = next(x for x in au if x in common)
        walk = pu + [meet] + pv[::-1]
        edges = {(min(a, b), max(a, b)) for a, b in zip(walk, walk[1:])}
        edges.add((min(u, v), max(u, v)))
        return frozenset(edges)

    candidates = [fundamental(e) for e in extra]
    if len(candidates) == 2:
        candidates.append(candidates[0] ^ candidates[1])

    cycles = []
    for edge_set in candidates:
        if not edge_set:
            continue
        deg: dict[int, list[int]] = {}
        for a, b in edge_set:
            deg.setdefault(a, []).append(b)
            deg.setdefault(b, []).append(a)
        if any(len(nb) != 2 for nb in deg.values()):
            continue
        start = min(deg)
        walk = [start]
        prev = -1
        cur = start
        while True:
            nxt = min(w for w in deg[cur] if w != prev) if len(walk) == 1 else next(
                w for w in deg[cur] if w != prev
            )
            if nxt == start:
                break
            walk.append(nxt)
            prev, cur = cur, nxt
        if len(walk) != len(deg):
            continue  # two disjoint circuits, not a single simple cycle
        cycles.append(tuple(walk))
    return tuple(sorted(cycles, key=lambda c: (len(c), c)))
