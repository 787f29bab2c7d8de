"""Canonical keys for identifying small graphs up to isomorphism.

``canonical_key`` minimises the column-major upper-triangle adjacency
bitstring over vertex relabelings.  The search only considers orderings that
list the cells of an iterated neighbor-degree refinement in their invariant
order, prunes lexicographically against the best labeling found so far, and
skips interchangeable true twins, which keeps even the symmetric worst cases
(stars, complete graphs) cheap at the supported orders.

``tree_key`` is the classic linear-time center-rooted encoding for trees; its
equivalence classes must (and are tested to) coincide with the general key.
"""

from __future__ import annotations

from .graphs import Graph, GraphError, eccentricity_profile, is_tree

CANON_MAX_N = 12

_HUGE = 1 << 62


def _refined_colors(g: Graph) -> list[int]:
    """Stable vertex coloring by iterated (color, neighbor-color multiset)."""
    n = g.n
    degrees = [g.degree(v) for v in range(n)]
    palette = sorted(set(degrees))
    colors = [palette.index(d) for d in degrees]
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[w] for w in g.neighbors(v))))
            for v in range(n)
        ]
        ordered = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        new = [ordered[sigs[v]] for v in range(n)]
        if new == colors:
            return colors
        colors = new


def _twin_reps(g: Graph, colors: list[int]) -> list[int]:
    """Representative per true-twin class (N(u) - {w} == N(w) - {u})."""
    n = g.n
    rep = list(range(n))
    for u in range(n):
        if rep[u] != u:
            continue
        for w in range(u + 1, n):
            if rep[w] != w or colors[u] != colors[w]:
                continue
            if g.adj[u] & ~(1 << w) == g.adj[w] & ~(1 << u):
                rep[w] = u
    return rep


def canonical_key(g: Graph) -> bytes:
    """Label-invariant byte encoding; equal keys iff isomorphic (n <= 12)."""
    n = g.n
    if n > CANON_MAX_N:
        raise GraphError(f"canonical_key supports n <= {CANON_MAX_N}, got {n}")
    if n == 1:
        return bytes([1])

    adj = g.adj
    colors = _refined_colors(g)
    twin = _twin_reps(g, colors)
    slot_color = sorted(colors)

    best = [_HUGE] * n
    placed: list[int] = []
    used = 0

    def search(level: int) -> None:
        nonlocal used
        if level == n:
            return
        want = slot_color[level]
        cands = []
        for v in range(n):
            if used >> v & 1 or colors[v] != want:
                continue
            av = adj[v]
            chunk = 0
            for p in placed:
                chunk = chunk << 1 | (av >> p & 1)
            cands.append((chunk, v))
        cands.sort()
        tried: set[int] = set()
        for chunk, v in cands:
            if chunk > best[level]:
                break
            if twin[v] in tried:
                continue
            tried.add(twin[v])
            if chunk < best[level]:
                best[level] = chunk
                for i in range(level + 1, n):
                    best[i] = _HUGE
            placed.append(v)
            used |= 1 << v
            search(level + 1)
            placed.pop()
            used &= ~(1 << v)

    search(0)

    value = 0
    for level in range(1, n):
        value = value << level | best[level]
    nbits = n * (n - 1) // 2
    return bytes([n]) + value.to_bytes((nbits + 7) // 8, "big")


def _ahu(g: Graph, v: int, parent: int) -> bytes:
    children = sorted(_ahu(g, w, v) for w in g.neighbors(v) if w != parent)
    return b"(" + b"".join(children) + b")"


def tree_key(t: Graph) -> bytes:
    """Center-rooted canonical encoding for trees of any supported order."""
    if not is_tree(t):
        raise GraphError("tree_key requires a tree")
    center = eccentricity_profile(t).center
    if len(center) == 1:
        body = _ahu(t, center[0], -1)
    else:
        c1, c2 = center
        halves = sorted((_ahu(t, c1, c2), _ahu(t, c2, c1)))
        body = b"<" + halves[0] + halves[1] + b">"
    return bytes([t.n]) + body
