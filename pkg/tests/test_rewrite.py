from pathlib import Path

import pytest

from totecc import (
    GraphError,
    build_graph,
    classify,
    total_eccentricity,
    tree_key,
    tree_perfect_matching,
)
from totecc.enumeration import gen_trees
from totecc.families import construct
from totecc.rewrite import (
    format_trace,
    matched_pair_candidates,
    pendant_move_candidates,
    radial_candidates,
    rewrite_to_matched_star,
    rewrite_to_path,
    rewrite_to_star,
)

DATA = Path(__file__).parent / "data"


def spider(legs: list[int]):
    """Hub 0 with one path of each requested length hanging off it."""
    edges = []
    nxt = 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return build_graph(nxt, edges)


def test_pendant_candidates_path_empty():
    p = construct("path", 6)
    assert pendant_move_candidates(p, 0, 5) == ()


def test_pendant_candidates_star():
    s = construct("star", 5)
    cands = pendant_move_candidates(s, 1, 2)
    assert cands == ((3, 0), (4, 0))


def test_pendant_candidates_spider_tips():
    g = spider([2, 2, 2])  # tips are 2, 4, 6
    cands = pendant_move_candidates(g, 2, 4)
    assert cands == ((6, 5),)


def test_pendant_candidates_require_diametrical_pair():
    with pytest.raises(GraphError, match="diametrical"):
        pendant_move_candidates(construct("path", 6), 0, 1)


def test_algorithm1_fixed_point_on_path():
    tr = rewrite_to_path(construct("path", 7))
    assert tr.steps == ()
    assert tr.final == tr.initial


def test_algorithm1_golden_trace_s5():
    tr = rewrite_to_path(construct("star", 5))
    assert format_trace(tr) == (DATA / "alg1_s5.trace").read_text()
    assert [s.tau_after for s in tr.steps] == [13, 16]
    assert tr.final_tau == total_eccentricity(construct("path", 5)) == 16


def test_algorithm1_nine_vertex_diam5_takes_three_steps():
    g = build_graph(9, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (2, 6), (2, 7), (2, 8)])
    tr = rewrite_to_path(g)
    assert len(tr.steps) == 3
    assert tree_key(tr.final) == tree_key(construct("path", 9))
    taus = [tr.initial_tau] + [s.tau_after for s in tr.steps]
    assert all(a < b for a, b in zip(taus, taus[1:]))


def test_algorithm1_rejects_bad_inputs():
    with pytest.raises(GraphError):
        rewrite_to_path(construct("cycle", 5))
    with pytest.raises(GraphError):
        rewrite_to_path(construct("path", 3))


def test_radial_candidates_p5():
    assert radial_candidates(construct("path", 5), 2) == ((0, 1), (4, 3))


def test_radial_candidates_star_center():
    assert radial_candidates(construct("star", 5), 0) == ((1, 0), (2, 0), (3, 0), (4, 0))


def test_radial_candidates_spider_hub():
    assert radial_candidates(spider([2, 2, 2]), 0) == ((2, 1), (4, 3), (6, 5))


def test_radial_candidates_require_central_vertex():
    with pytest.raises(GraphError, match="central"):
        radial_candidates(construct("path", 5), 0)


def test_algorithm2_fixed_point_on_star():
    tr = rewrite_to_star(construct("star", 6))
    assert tr.steps == ()


def test_algorithm2_p4():
    tr = rewrite_to_star(construct("path", 4))
    assert tr.initial_tau == 10 and tr.final_tau == 7
    assert len(tr.steps) == 1
    assert tree_key(tr.final) == tree_key(construct("star", 4))


def test_algorithm2_fourteen_vertex_rad4_three_rounds():
    spine = [(i, i + 1) for i in range(8)]
    extra = [(4, 9), (4, 10), (3, 11), (3, 12), (5, 13)]
    g = build_graph(14, spine + extra)
    tr = rewrite_to_star(g)
    assert tree_key(tr.final) == tree_key(construct("star", 14))
    assert tr.steps[-1].round == 3
    taus = tr.round_taus()
    assert all(a > b for a, b in zip(taus, taus[1:]))


def test_matched_candidates_p6():
    t = construct("path", 6)
    m = tree_perfect_matching(t)
    assert m.edges == {(0, 1), (2, 3), (4, 5)}
    assert matched_pair_candidates(t, 2, m) == ((3, 4),)


def test_matched_candidates_corona():
    # spine 0-1-2-3, one pendant per spine vertex; only the deepest matched
    # leaf (7, under support 3) contributes
    g = build_graph(8, [(0, 1), (1, 2), (2, 3), (0, 4), (1, 5), (2, 6), (3, 7)])
    m = tree_perfect_matching(g)
    assert matched_pair_candidates(g, 1, m) == ((2, 3),)


def test_matched_candidates_reject_wrong_matching():
    from totecc.matching import Matching

    t = construct("path", 6)
    wrong = Matching(frozenset({(1, 2), (3, 4)}), perfect=False)
    with pytest.raises(GraphError, match="perfect matching"):
        matched_pair_candidates(t, 2, wrong)


def test_algorithm3_fixed_points():
    assert rewrite_to_matched_star(construct("S_star", 8)).steps == ()
    assert rewrite_to_matched_star(construct("path", 4)).steps == ()


def test_algorithm3_p6():
    tr = rewrite_to_matched_star(construct("path", 6))
    assert (tr.initial_tau, tr.final_tau) == (24, 19)
    assert tree_key(tr.final) == tree_key(construct("S_star", 6))


def test_algorithm3_p8():
    tr = rewrite_to_matched_star(construct("path", 8))
    assert tr.final_tau == 26
    assert tree_key(tr.final) == tree_key(construct("S_star", 8))
    m = tree_perfect_matching(construct("path", 8))
    for step in tr.steps:
        assert all(step.snapshot.has_edge(u, v) for u, v in m.edges)


def test_algorithm3_rejects_unmatched_trees():
    with pytest.raises(GraphError, match="no perfect matching"):
        rewrite_to_matched_star(construct("star", 6))
    with pytest.raises(GraphError, match="even"):
        rewrite_to_matched_star(construct("path", 7))


def test_snapshots_stay_trees_of_same_order():
    for t in gen_trees(7):
        for tr in (rewrite_to_path(t), rewrite_to_star(t)):
            for step in tr.steps:
                assert step.snapshot.n == 7
                assert classify(step.snapshot) == "tree"


def test_algorithm1_strict_monotonicity_up_to_n10():
    for n in (7, 10):
        for t in gen_trees(n):
            tr = rewrite_to_path(t)
            taus = [tr.initial_tau] + [s.tau_after for s in tr.steps]
            assert all(a < b for a, b in zip(taus, taus[1:]))
            assert len(tr.steps) <= n - 1
