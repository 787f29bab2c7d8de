"""Deterministic constructors for the named extremal graph families.

Every family uses a fixed, documented vertex layout so traces and golden
files stay stable:

* ``path``      0-1-...-(n-1)
* ``cycle``     ring 0..n-1
* ``star``      center 0, leaves 1..n-1
* ``complete``  all pairs
* ``complete_bipartite``  parts {0..k-1} and {k..n-1}
* ``U1``        star plus the leaf-leaf edge (1,2)
* ``U2``        triangle (0,1,2) with the pendant path 2-3-...-(n-1)
* ``B1``        star plus the disjoint leaf-leaf edges (1,2) and (3,4)
* ``B1prime``   star plus the adjacent leaf-leaf edges (1,2) and (2,3)
* ``B2``        triangles (0,1,2) and (3,4,5) joined by an edge 2-3 at n=6,
                or by the path 2-6-...-(n-1)-3 for larger n
* ``B2prime``   path 0-...-(n-2) plus the apex n-1 adjacent to 0, 1, 2
* ``subdivided_star``  center 0, spoke i in 1..s-1, tip of spoke i at s-1+i
                       (s = (n+1)/2 spokes of length two; odd order)
* ``S_star``    subdivided star of order n+1 with the last tip removed, so
                the final spoke is a bare pendant on the center (even order)
* ``double_star``  centers 0 and 1 joined; 0 carries leaves 2..k,
                   1 carries leaves k+1..n-1

The layouts for U1/U2/B*/S_star are reconstructions pinned down by the
structural identities they must satisfy (vertex deletions collapsing to
known families, tau recurrences, pendant counts); ``family_identities``
checks those identities and raises ``AssertionError`` on any mismatch,
since a failure there means the construction itself is wrong.
"""

from __future__ import annotations

import itertools
from typing import Optional

from .canonical import canonical_key, tree_key
from .graphs import Graph, GraphError, build_graph, classify, delete_vertex, remove_edge
from .indices import tau_path, total_eccentricity

FAMILY_IDS = (
    "path", "cycle", "star", "complete", "complete_bipartite",
    "U1", "U2", "B1", "B1prime", "B2", "B2prime",
    "subdivided_star", "S_star", "double_star",
)

EXPECTED_CLASS = {
    "path": "tree", "star": "tree", "subdivided_star": "tree",
    "S_star": "tree", "double_star": "tree",
    "cycle": "unicyclic", "U1": "unicyclic", "U2": "unicyclic",
    "B1": "bicyclic", "B1prime": "bicyclic", "B2": "bicyclic",
    "B2prime": "bicyclic",
}


def _check(cond: bool, family: str, constraint: str) -> None:
    if not cond:
        raise GraphError(f"{family}: invalid parameters, requires {constraint}")


def _star_edges(n: int) -> list[tuple[int, int]]:
    return [(0, i) for i in range(1, n)]


def _path_edges(n: int) -> list[tuple[int, int]]:
    return [(i, i + 1) for i in range(n - 1)]


def construct(family: str, n: int, k: Optional[int] = None) -> Graph:
    """Build one family member on its canonical vertex layout."""
    if family not in FAMILY_IDS:
        raise GraphError(f"unknown family {family!r}")
    if family in ("complete_bipartite", "double_star"):
        _check(k is not None, family, "a part size k")
    elif k is not None:
        raise GraphError(f"{family}: takes no parameter k")

    if family == "path":
        _check(n >= 1, family, "n >= 1")
        return build_graph(n, _path_edges(n))
    if family == "cycle":
        _check(n >= 3, family, "n >= 3")
        return build_graph(n, _path_edges(n) + [(n - 1, 0)])
    if family == "star":
        _check(n >= 1, family, "n >= 1")
        return build_graph(n, _star_edges(n))
    if family == "complete":
        _check(n >= 1, family, "n >= 1")
        return build_graph(n, list(itertools.combinations(range(n), 2)))
    if family == "complete_bipartite":
        _check(n >= 4 and 2 <= k <= n - 2, family, "2 <= k <= n-2")
        return build_graph(n, [(i, j) for i in range(k) for j in range(k, n)])
    if family == "U1":
        _check(n >= 4, family, "n >= 4")
        return build_graph(n, _star_edges(n) + [(1, 2)])
    if family == "U2":
        _check(n >= 4, family, "n >= 4")
        edges = [(0, 1), (0, 2), (1, 2)] + [(i, i + 1) for i in range(2, n - 1)]
        return build_graph(n, edges)
    if family == "B1":
        _check(n >= 5, family, "n >= 5")
        return build_graph(n, _star_edges(n) + [(1, 2), (3, 4)])
    if family == "B1prime":
        _check(n >= 4, family, "n >= 4")
        return build_graph(n, _star_edges(n) + [(1, 2), (2, 3)])
    if family == "B2":
        _check(n >= 6, family, "n >= 6")
        edges = [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]
        if n == 6:
            edges.append((2, 3))
        else:
            chain = [2] + list(range(6, n)) + [3]
            edges.extend(zip(chain, chain[1:]))
        return build_graph(n, edges)
    if family == "B2prime":
        _check(n >= 5, family, "n >= 5")
        return build_graph(n, _path_edges(n - 1) + [(n - 1, 0), (n - 1, 1), (n - 1, 2)])
    if family == "subdivided_star":
        _check(n >= 3 and n % 2 == 1, family, "odd n >= 3")
        s = (n + 1) // 2
        edges = []
        for i in range(1, s):
            edges.append((0, i))
            edges.append((i, s - 1 + i))
        return build_graph(n, edges)
    if family == "S_star":
        _check(n >= 6 and n % 2 == 0, family, "even n >= 6")
        spokes = (n + 2) // 2 - 1
        edges = [(0, i) for i in range(1, spokes + 1)]
        edges += [(i, spokes + i) for i in range(1, spokes)]
        return build_graph(n, edges)
    if family == "double_star":
        _check(n >= 4 and 2 <= k <= n - 2, family, "n >= 4 and 2 <= k <= n-2")
        edges = [(0, 1)]
        edges += [(0, i) for i in range(2, k + 1)]
        edges += [(1, i) for i in range(k + 1, n)]
        return build_graph(n, edges)
    raise AssertionError("unreachable")


def pendant_count(g: Graph) -> int:
    return sum(1 for v in range(g.n) if g.degree(v) == 1)


def family_identities(family: str, n: int, k: Optional[int] = None) -> tuple[str, ...]:
    """Check the structural identities that pin down a family's layout.

    Returns the names of the identities verified; raises ``AssertionError``
    naming the first identity that fails (a failure means the constructor is
    wrong, not the input).
    """
    g = construct(family, n, k)
    checked: list[str] = []

    def verify(cond: bool, name: str) -> None:
        if not cond:
            raise AssertionError(f"{family}(n={n}): identity {name!r} failed")
        checked.append(name)

    expected = EXPECTED_CLASS.get(family)
    if expected is not None:
        verify(classify(g) == expected, f"classify == {expected}")

    if family == "U2":
        t1 = remove_edge(g, 0, 1)
        verify(classify(t1) == "tree", "minus one cycle edge is a tree")
        verify(
            total_eccentricity(t1) == total_eccentricity(g),
            "tau unchanged by removing the cycle edge",
        )
    elif family == "B2":
        rest = delete_vertex(g, 4)
        verify(
            canonical_key(rest) == canonical_key(construct("U2", n - 1)),
            "minus a far triangle vertex is U2 on n-1 vertices",
        )
        verify(
            total_eccentricity(g)
            == total_eccentricity(construct("U2", n - 1)) + n - 3,
            "tau recurrence through U2",
        )
    elif family == "B2prime":
        rest = delete_vertex(g, n - 1)
        verify(tree_key(rest) == tree_key(construct("path", n - 1)),
               "minus the apex is a path")
        verify(total_eccentricity(g) == tau_path(n - 1) + n - 3,
               "tau recurrence through the path")
    elif family == "S_star":
        verify(pendant_count(g) == n // 2, "exactly n/2 pendant vertices")

    return tuple(checked)
