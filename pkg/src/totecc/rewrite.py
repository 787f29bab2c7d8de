"""Guarded edge-move procedures that drive a tree to an extremal shape.

Three deterministic rewrites, each emitting a full trace with the graph
snapshot, tau and radius after every move:

* ``rewrite_to_path``  repeatedly re-hangs a pendant vertex onto the growing
  end of a diametrical path; tau strictly increases per move and the result
  is the path.
* ``rewrite_to_star``  re-attaches all radius-distant leaves directly to a
  fixed central vertex, one radius round at a time; tau strictly decreases
  per round and the result is the star.
* ``rewrite_to_matched_star``  the matching-preserving variant for trees
  with a perfect matching: only the support edge above a matched far leaf
  pair is moved, every snapshot keeps the original perfect matching, and the
  result is the balanced subdivided-star shape with n/2 pendants.

Candidate choice is always the smallest edge pair, and the starting
diametrical endpoints / central vertex use the smallest-id tie-break, so
traces are reproducible byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass

from .canonical import tree_key
from .families import construct
from .graphs import (
    Graph,
    GraphError,
    add_edge,
    bfs_distances,
    diametrical_path,
    eccentricity_profile,
    is_tree,
    remove_edge,
)
from .indices import total_eccentricity
from .matching import Matching, tree_perfect_matching


@dataclass(frozen=True)
class RewriteStep:
    iteration: int
    round: int
    removed: tuple[int, int]
    added: tuple[int, int]
    tau_after: int
    rad_after: int
    snapshot: Graph


@dataclass(frozen=True)
class RewriteTrace:
    algorithm: int
    initial: Graph
    initial_tau: int
    initial_rad: int
    steps: tuple[RewriteStep, ...]
    final: Graph

    @property
    def final_tau(self) -> int:
        return self.steps[-1].tau_after if self.steps else self.initial_tau

    @property
    def final_rad(self) -> int:
        return self.steps[-1].rad_after if self.steps else self.initial_rad

    def round_taus(self) -> tuple[int, ...]:
        """Tau after each completed round, starting from the input value."""
        taus = [self.initial_tau]
        for i, step in enumerate(self.steps):
            last_of_round = i + 1 == len(self.steps) or self.steps[i + 1].round != step.round
            if last_of_round:
                taus.append(step.tau_after)
        return tuple(taus)


def _require_tree(t: Graph, n_min: int) -> None:
    if not is_tree(t):
        raise GraphError("rewrite requires a tree")
    if t.n < n_min:
        raise GraphError(f"rewrite requires at least {n_min} vertices, got {t.n}")


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def pendant_move_candidates(t: Graph, u: int, v: int) -> tuple[tuple[int, int], ...]:
    """Pendant edges (x, y) with x a leaf other than the endpoints u, v."""
    if not is_tree(t):
        raise GraphError("candidate sets are defined on trees")
    dist = bfs_distances(t, u)
    if dist[v] != eccentricity_profile(t).diam:
        raise GraphError(f"({u}, {v}) is not a diametrical pair")
    out = []
    for x in range(t.n):
        if t.degree(x) == 1 and x != u and x != v:
            y = next(t.neighbors(x))
            out.append((x, y))
    return tuple(sorted(out))


def rewrite_to_path(t: Graph) -> RewriteTrace:
    """Stretch a tree into the path by pendant moves; tau rises every step."""
    _require_tree(t, 4)
    dp = diametrical_path(t)
    u, v = dp.ends
    steps: list[RewriteStep] = []
    cur = t
    tau_prev = total_eccentricity(t)
    trace_init = (tau_prev, eccentricity_profile(t).rad)
    for iteration in range(1, t.n):
        cands = pendant_move_candidates(cur, u, v)
        if not cands:
            break
        x, y = cands[0]
        cur = add_edge(remove_edge(cur, x, y), u, x)
        profile = eccentricity_profile(cur)
        tau_now = sum(profile.ecc)
        if tau_now <= tau_prev:
            raise AssertionError(
                f"tau failed to increase at step {iteration}: {tau_prev} -> {tau_now}"
            )
        steps.append(
            RewriteStep(iteration, iteration, _edge(x, y), _edge(u, x), tau_now, profile.rad, cur)
        )
        u = x
        tau_prev = tau_now
    else:
        raise AssertionError("pendant moves did not finish within n-1 steps")
    if tree_key(cur) != tree_key(construct("path", t.n)):
        raise AssertionError("rewrite did not terminate on the path")
    return RewriteTrace(1, t, trace_init[0], trace_init[1], tuple(steps), cur)


def radial_candidates(t: Graph, c: int) -> tuple[tuple[int, int], ...]:
    """Edges (x, y) with x at radius distance from c and y its neighbor toward c.

    Any x at distance rad from a central vertex is necessarily a leaf, so y
    is unique.
    """
    if not is_tree(t):
        raise GraphError("candidate sets are defined on trees")
    profile = eccentricity_profile(t)
    if profile.ecc[c] != profile.rad:
        raise GraphError(f"vertex {c} is not central")
    dist = bfs_distances(t, c)
    out = []
    for x in range(t.n):
        if dist[x] == profile.rad:
            y = min(w for w in t.neighbors(x) if dist[w] == profile.rad - 1)
            out.append((x, y))
    return tuple(sorted(out))


def _run_rounds(
    t: Graph,
    algorithm: int,
    stop_rad: int,
    candidates,
    move,
    attach: int,
) -> RewriteTrace:
    """Shared round loop for the contracting rewrites (algorithms 2 and 3).

    ``attach`` says which endpoint of a candidate pair gets re-hung on the
    central vertex: the far leaf itself for algorithm 2, the matched support
    vertex for algorithm 3.
    """
    profile = eccentricity_profile(t)
    c = min(profile.center)
    rad = profile.rad
    initial = (total_eccentricity(t), rad)
    steps: list[RewriteStep] = []
    cur = t
    tau_round = initial[0]
    iteration = 0
    round_no = 0
    while rad > stop_rad:
        round_no += 1
        batch = candidates(cur, c)
        if not batch:
            raise AssertionError(f"empty candidate set at radius {rad}")
        for pair in batch:
            iteration += 1
            cur = move(cur, c, pair)
            p = eccentricity_profile(cur)
            steps.append(
                RewriteStep(
                    iteration, round_no, _edge(*pair), _edge(c, pair[attach]),
                    sum(p.ecc), p.rad, cur,
                )
            )
        profile = eccentricity_profile(cur)
        if profile.ecc[c] != profile.rad:
            raise AssertionError(f"vertex {c} stopped being central after round {round_no}")
        if profile.rad >= rad:
            raise AssertionError(f"radius failed to shrink in round {round_no}")
        tau_now = sum(profile.ecc)
        if tau_now >= tau_round:
            raise AssertionError(
                f"tau failed to decrease over round {round_no}: {tau_round} -> {tau_now}"
            )
        tau_round = tau_now
        rad = profile.rad
    return RewriteTrace(algorithm, t, initial[0], initial[1], tuple(steps), cur)


def rewrite_to_star(t: Graph) -> RewriteTrace:
    """Contract a tree onto a fixed central vertex; tau falls every round."""
    _require_tree(t, 4)

    def move(cur: Graph, c: int, pair: tuple[int, int]) -> Graph:
        x, y = pair
        return add_edge(remove_edge(cur, x, y), c, x)

    def candidates(cur: Graph, c: int):
        return radial_candidates(cur, c)

    trace = _run_rounds(t, 2, 1, candidates, move, attach=0)
    if tree_key(trace.final) != tree_key(construct("star", t.n)):
        raise AssertionError("rewrite did not terminate on the star")
    return trace


def matched_pair_candidates(
    t: Graph, c: int, m: Matching
) -> tuple[tuple[int, int], ...]:
    """Support edges (u, v) above matched far leaves.

    For every leaf w at radius distance from c, its neighbor v is matched to
    w, has degree two, and hangs from u by a non-matching edge; those (u, v)
    edges are the ones a matching-preserving contraction may move.
    """
    if not is_tree(t):
        raise GraphError("candidate sets are defined on trees")
    mm = tree_perfect_matching(t)
    if mm is None or not m.perfect or m.edges != mm.edges:
        raise GraphError("m is not the perfect matching of this tree")
    profile = eccentricity_profile(t)
    if profile.ecc[c] != profile.rad:
        raise GraphError(f"vertex {c} is not central")
    dist = bfs_distances(t, c)
    out = []
    for w in range(t.n):
        if dist[w] != profile.rad:
            continue
        v = next(t.neighbors(w))
        if _edge(v, w) not in m.edges:
            raise AssertionError(f"far leaf {w} is not matched to its support {v}")
        if t.degree(v) != 2:
            raise AssertionError(f"support vertex {v} must have degree 2")
        u = next(x for x in t.neighbors(v) if x != w)
        if _edge(u, v) in m.edges:
            raise AssertionError(f"edge ({u}, {v}) unexpectedly lies in the matching")
        out.append((u, v))
    return tuple(sorted(out))


def rewrite_to_matched_star(t: Graph) -> RewriteTrace:
    """Matching-preserving contraction of a conjugated tree.

    Stops at radius two; the unique conjugated tree of that radius is the
    subdivided-star shape with n/2 pendants (the path P4 for n=4).
    """
    _require_tree(t, 4)
    if t.n % 2:
        raise GraphError("rewrite requires an even order (perfect matching)")
    m = tree_perfect_matching(t)
    if m is None:
        raise GraphError("tree has no perfect matching")

    def move(cur: Graph, c: int, pair: tuple[int, int]) -> Graph:
        u, v = pair
        nxt = add_edge(remove_edge(cur, u, v), c, v)
        if not all(nxt.has_edge(a, b) for a, b in m.edges):
            raise AssertionError("a matching edge was destroyed by the move")
        return nxt

    def candidates(cur: Graph, c: int):
        return matched_pair_candidates(cur, c, m)

    trace = _run_rounds(t, 3, 2, candidates, move, attach=1)
    expected = construct("path", 4) if t.n == 4 else construct("S_star", t.n)
    if tree_key(trace.final) != tree_key(expected):
        raise AssertionError("rewrite did not terminate on the matched star shape")
    return trace


def format_trace(trace: RewriteTrace) -> str:
    """Stable one-record-per-step text form, shared by the CLI and goldens."""
    lines = [
        f"algorithm {trace.algorithm}",
        f"n {trace.initial.n}",
        f"initial tau {trace.initial_tau} rad {trace.initial_rad}",
    ]
    for s in trace.steps:
        lines.append(
            f"step {s.iteration} remove {s.removed[0]}-{s.removed[1]} "
            f"add {s.added[0]}-{s.added[1]} tau {s.tau_after} rad {s.rad_after}"
        )
    lines.append(
        f"final tau {trace.final_tau} rad {trace.final_rad} steps {len(trace.steps)}"
    )
    return "\n".join(lines) + "\n"
