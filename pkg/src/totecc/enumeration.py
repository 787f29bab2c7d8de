"""Exhaustive streams of pairwise non-isomorphic graphs at desk scale.

Trees are grown order by order: attaching a new leaf to every vertex of
every (n-1)-vertex representative reaches every isomorphism class, and the
center-rooted tree key deduplicates.  Unicyclic and bicyclic graphs are the
trees plus one or two extra edges, deduplicated by canonical key; that is
complete because removing suitable cycle edges from any such graph leaves a
spanning tree (asserted against an independent filter oracle in the
verification battery).
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

from .canonical import canonical_key, tree_key
from .graphs import Graph, GraphError, add_edge
from .indices import total_eccentricity
from .matching import is_conjugated

TREE_MAX = 12
UNICYCLIC_MAX = 10
BICYCLIC_MAX = 9
CONJUGATED_MAX = 12

GRAPH_CLASSES = ("tree", "unicyclic", "bicyclic", "conjugated-tree")


@lru_cache(maxsize=None)
def gen_trees(n: int, limit: int = TREE_MAX) -> tuple[Graph, ...]:
    """Every isomorphism class of n-vertex trees, exactly once."""
    if not 1 <= n <= limit:
        raise GraphError(f"tree enumeration supports 1 <= n <= {limit}, got {n}")
    if n == 1:
        return (Graph(1, (0,)),)
    out: dict[bytes, Graph] = {}
    for base in gen_trees(n - 1, limit):
        grown = Graph(n, base.adj + (0,))
        for v in range(n - 1):
            t = add_edge(grown, v, n - 1)
            out.setdefault(tree_key(t), t)
    return tuple(out.values())


@lru_cache(maxsize=None)
def gen_unicyclic(n: int, limit: int = UNICYCLIC_MAX) -> tuple[Graph, ...]:
    """Every isomorphism class of connected n-vertex graphs with n edges."""
    if not 3 <= n <= limit:
        raise GraphError(f"unicyclic enumeration supports 3 <= n <= {limit}, got {n}")
    out: dict[bytes, Graph] = {}
    for t in gen_trees(n):
        for u, v in itertools.combinations(range(n), 2):
            if not t.has_edge(u, v):
                g = add_edge(t, u, v)
                out.setdefault(canonical_key(g), g)
    return tuple(out.values())


@lru_cache(maxsize=None)
def gen_bicyclic(n: int, limit: int = BICYCLIC_MAX) -> tuple[Graph, ...]:
    """Every isomorphism class of connected n-vertex graphs with n+1 edges."""
    if not 4 <= n <= limit:
        raise GraphError(f"bicyclic enumeration supports 4 <= n <= {limit}, got {n}")
    out: dict[bytes, Graph] = {}
    for t in gen_trees(n):
        non_edges = [
            (u, v)
            for u, v in itertools.combinations(range(n), 2)
            if not t.has_edge(u, v)
        ]
        for e1, e2 in itertools.combinations(non_edges, 2):
            g = add_edge(add_edge(t, *e1), *e2)
            out.setdefault(canonical_key(g), g)
    return tuple(out.values())


@lru_cache(maxsize=None)
def gen_conjugated_trees(n: int, limit: int = CONJUGATED_MAX) -> tuple[Graph, ...]:
    """The n-vertex trees possessing a perfect matching (even n only)."""
    if n % 2:
        raise GraphError(f"conjugated trees have even order, got {n}")
    if not 2 <= n <= limit:
        raise GraphError(f"conjugated enumeration supports 2 <= n <= {limit}, got {n}")
    return tuple(t for t in gen_trees(n) if is_conjugated(t))


def graphs_of_class(graph_class: str, n: int) -> tuple[Graph, ...]:
    if graph_class == "tree":
        return gen_trees(n)
    if graph_class == "unicyclic":
        return gen_unicyclic(n)
    if graph_class == "bicyclic":
        return gen_bicyclic(n)
    if graph_class == "conjugated-tree":
        return gen_conjugated_trees(n)
    raise GraphError(f"unknown graph class {graph_class!r}")


@dataclass(frozen=True)
class ExtremalReport:
    """Exact tau extremes over one (class, n) cell with all witnesses."""

    graph_class: str
    n: int
    count: int
    min_tau: int
    max_tau: int
    min_witnesses: tuple[bytes, ...]
    max_witnesses: tuple[bytes, ...]
    min_witness_graphs: tuple[Graph, ...]
    max_witness_graphs: tuple[Graph, ...]


def _tau_values(graphs: tuple[Graph, ...], threads: int) -> list[int]:
    if threads <= 1 or len(graphs) < 64:
        return [total_eccentricity(g) for g in graphs]
    chunk = max(32, len(graphs) // (threads * 4))
    parts = [graphs[i : i + chunk] for i in range(0, len(graphs), chunk)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        results = pool.map(lambda part: [total_eccentricity(g) for g in part], parts)
    values: list[int] = []
    for part in results:
        values.extend(part)
    return values


def extremal_scan(graph_class: str, n: int, threads: int = 1) -> ExtremalReport:
    """Exhaustively evaluate tau over one class and report min/max witnesses."""
    graphs = graphs_of_class(graph_class, n)
    if not graphs:
        raise GraphError(f"no graphs in class {graph_class!r} at n={n}")
    taus = _tau_values(graphs, threads)
    lo, hi = min(taus), max(taus)
    min_graphs = tuple(g for g, t in zip(graphs, taus) if t == lo)
    max_graphs = tuple(g for g, t in zip(graphs, taus) if t == hi)
    return ExtremalReport(
        graph_class=graph_class,
        n=n,
        count=len(graphs),
        min_tau=lo,
        max_tau=hi,
        min_witnesses=tuple(canonical_key(g) for g in min_graphs),
        max_witnesses=tuple(canonical_key(g) for g in max_graphs),
        min_witness_graphs=min_graphs,
        max_witness_graphs=max_graphs,
    )
