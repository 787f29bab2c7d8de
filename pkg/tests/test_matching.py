import random

import pytest

from totecc import GraphError, is_conjugated, tree_perfect_matching
from totecc.enumeration import gen_conjugated_trees, gen_trees
from totecc.families import construct


def test_p6_matching():
    m = tree_perfect_matching(construct("path", 6))
    assert m is not None and m.perfect
    assert m.edges == {(0, 1), (2, 3), (4, 5)}


def test_star_has_no_perfect_matching():
    assert tree_perfect_matching(construct("star", 5)) is None
    assert tree_perfect_matching(construct("star", 6)) is None


def test_s_star_matching():
    m = tree_perfect_matching(construct("S_star", 8))
    assert m is not None and len(m.edges) == 4
    # every spoke pairs with its tip, the hub with its bare pendant
    assert m.edges == {(0, 4), (1, 5), (2, 6), (3, 7)}


def test_double_star_2_4_not_conjugated():
    assert not is_conjugated(construct("double_star", 6, 2))


def test_paths():
    assert not is_conjugated(construct("path", 7))
    assert is_conjugated(construct("path", 8))
    assert is_conjugated(construct("path", 2))


def test_odd_order_never_conjugated():
    for t in gen_trees(7):
        assert tree_perfect_matching(t) is None


def test_non_tree_rejected():
    with pytest.raises(GraphError, match="tree"):
        tree_perfect_matching(construct("cycle", 6))
    with pytest.raises(GraphError):
        is_conjugated(construct("cycle", 4))


def test_peeling_order_invariance():
    rng = random.Random(7)
    for n in (6, 8, 10):
        for t in gen_conjugated_trees(n):
            ref = tree_perfect_matching(t)
            for _ in range(4):
                order = list(range(n))
                rng.shuffle(order)
                alt = tree_perfect_matching(t, priority=order)
                assert alt is not None and alt.edges == ref.edges


def test_matching_size_is_half_order():
    for n in (4, 6, 8, 10, 12):
        for t in gen_conjugated_trees(n):
            m = tree_perfect_matching(t)
            assert len(m.edges) == n // 2
            covered = {v for e in m.edges for v in e}
            assert covered == set(range(n))


def test_covers():
    m = tree_perfect_matching(construct("path", 4))
    assert m.covers(0) and m.covers(3)
