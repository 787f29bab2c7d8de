"""Perfect matchings on trees via leaf peeling.

A leaf can only ever be matched to its unique neighbor, so repeatedly
matching a leaf and deleting the pair either covers every vertex or proves
that no perfect matching exists.  On trees the resulting edge set is
independent of the order leaves are processed, which the test suite asserts
by peeling under shuffled priorities.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Optional, Sequence

from .graphs import Graph, GraphError, is_tree


@dataclass(frozen=True)
class Matching:
    """A set of pairwise-disjoint edges; ``perfect`` iff every vertex is covered."""

    edges: frozenset[tuple[int, int]]
    perfect: bool

    def covers(self, v: int) -> bool:
        return any(v in e for e in self.edges)


def tree_perfect_matching(
    t: Graph, priority: Optional[Sequence[int]] = None
) -> Optional[Matching]:
    """The unique perfect matching of a tree, or ``None`` if there is none.

    ``priority`` overrides the order in which available leaves are peeled
    (lowest value first, vertex id as tie-break); the result does not depend
    on it.
    """
    if not is_tree(t):
        raise GraphError("perfect matching search requires a tree")
    n = t.n
    if n % 2:
        return None
    rank = list(range(n)) if priority is None else list(priority)
    if len(rank) != n:
        raise GraphError("priority must rank every vertex")

    alive = [True] * n
    adj = [t.adj[v] for v in range(n)]
    deg = [a.bit_count() for a in adj]
    heap = [(rank[v], v) for v in range(n) if deg[v] == 1]
    heapq.heapify(heap)

    edges: set[tuple[int, int]] = set()
    matched = 0
    while heap:
        _, v = heapq.heappop(heap)
        if not alive[v] or deg[v] != 1:
            continue
        mask = adj[v]
        if not mask:
            return None
        u = (mask & -mask).bit_length() - 1
        edges.add((min(u, v), max(u, v)))
        matched += 2
        for x in (v, u):
            alive[x] = False
        for w in range(n):
            if alive[w] and adj[w] >> u & 1 | adj[w] >> v & 1:
                adj[w] &= ~(1 << u | 1 << v)
                deg[w] = adj[w].bit_count()
                if deg[w] == 1:
                    heapq.heappush(heap, (rank[w], w))
                elif deg[w] == 0:
                    return None
        adj[v] = adj[u] = 0
    if matched != n:
        return None
    return Matching(frozenset(edges), perfect=True)


def is_conjugated(t: Graph) -> bool:
    """True iff the tree has a perfect matching."""
    return tree_perfect_matching(t) is not None
