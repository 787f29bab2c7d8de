import pytest

from totecc import GraphError, canonical_key, classify, total_eccentricity
from totecc.enumeration import (
    extremal_scan,
    gen_bicyclic,
    gen_conjugated_trees,
    gen_trees,
    gen_unicyclic,
    graphs_of_class,
)
from totecc.families import construct
from totecc.graphs import simple_cycles
from totecc.verification import filter_oracle_classes, prufer_tree_classes
from totecc.canonical import tree_key


FREE_TREE_COUNTS = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551]


def test_tree_counts_match_published_table():
    for n, expected in enumerate(FREE_TREE_COUNTS, start=1):
        assert len(gen_trees(n)) == expected


def test_every_generated_tree_is_a_tree():
    for n in (5, 9):
        for t in gen_trees(n):
            assert classify(t) == "tree"


def test_unicyclic_small_counts():
    assert len(gen_unicyclic(3)) == 1
    assert [len(gen_unicyclic(n)) for n in range(3, 9)] == [1, 2, 5, 13, 33, 89]
    for g in gen_unicyclic(6):
        assert classify(g) == "unicyclic"


def test_bicyclic_cycle_structure():
    for g in gen_bicyclic(5):
        assert classify(g) == "bicyclic"
        assert len(simple_cycles(g)) in (2, 3)


def test_unicyclic_matches_filter_oracle():
    for n in (4, 5, 6):
        assert {canonical_key(g) for g in gen_unicyclic(n)} == filter_oracle_classes(n, n)


def test_bicyclic_matches_filter_oracle():
    for n in (4, 5, 6):
        assert {canonical_key(g) for g in gen_bicyclic(n)} == filter_oracle_classes(n, n + 1)


def test_trees_match_prufer_oracle():
    for n in (4, 6, 7, 8):
        assert {tree_key(t) for t in gen_trees(n)} == prufer_tree_classes(n)


@pytest.mark.slow
def test_trees_match_prufer_oracle_n9():
    assert {tree_key(t) for t in gen_trees(9)} == prufer_tree_classes(9)


def test_conjugated_counts():
    assert len(gen_conjugated_trees(2)) == 1
    assert len(gen_conjugated_trees(4)) == 1
    keys6 = {canonical_key(t) for t in gen_conjugated_trees(6)}
    assert keys6 == {canonical_key(construct("path", 6)), canonical_key(construct("S_star", 6))}
    assert canonical_key(construct("star", 6)) not in keys6


def test_conjugated_rejects_odd():
    with pytest.raises(GraphError, match="even"):
        gen_conjugated_trees(7)


def test_bounds_enforced():
    with pytest.raises(GraphError):
        gen_trees(13)
    with pytest.raises(GraphError):
        gen_unicyclic(11)
    with pytest.raises(GraphError):
        gen_bicyclic(10)
    with pytest.raises(GraphError):
        gen_conjugated_trees(14)
    with pytest.raises(GraphError, match="unknown graph class"):
        graphs_of_class("planar", 5)


def test_dedup_soundness():
    for n in (6, 7):
        keys = [canonical_key(g) for g in gen_unicyclic(n)]
        assert len(keys) == len(set(keys))


def test_extremal_tree_7():
    r = extremal_scan("tree", 7)
    assert (r.count, r.min_tau, r.max_tau) == (11, 13, 33)
    assert canonical_key(construct("star", 7)) in r.min_witnesses
    assert canonical_key(construct("path", 7)) in r.max_witnesses


def test_extremal_unicyclic_5():
    r = extremal_scan("unicyclic", 5)
    assert (r.min_tau, r.max_tau) == (9, 13)
    assert canonical_key(construct("U2", 5)) in r.max_witnesses
    assert canonical_key(construct("U1", 5)) in r.min_witnesses


def test_extremal_bicyclic_6():
    r = extremal_scan("bicyclic", 6)
    assert (r.min_tau, r.max_tau) == (11, 19)
    assert canonical_key(construct("B1", 6)) in r.min_witnesses
    assert canonical_key(construct("B1prime", 6)) in r.min_witnesses
    assert canonical_key(construct("B2prime", 6)) in r.max_witnesses


def test_extremal_conjugated_8():
    r = extremal_scan("conjugated-tree", 8)
    assert (r.min_tau, r.max_tau) == (26, 44)
    assert r.min_witnesses == (canonical_key(construct("S_star", 8)),)
    assert canonical_key(construct("path", 8)) in r.max_witnesses


def test_unicyclic_max_counterexample_at_n4():
    # The published claim that U2 maximises tau among unicyclic graphs fails
    # at n=4: the 4-cycle attains 8 while U2 (the paw) only reaches 7.
    r = extremal_scan("unicyclic", 4)
    assert r.max_tau == 8
    assert r.max_witnesses == (canonical_key(construct("cycle", 4)),)
    assert total_eccentricity(construct("U2", 4)) == 7


def test_half_pendant_conjugated_trees_are_coronas():
    # Pinning the second published slip: from n=8 on, every tree on n/2
    # vertices grown by one pendant per vertex has n/2 pendants, so S_* is
    # not unique.  The count equals the number of trees on n/2 vertices.
    from totecc.families import pendant_count

    for n in (6, 8, 10, 12):
        half = [t for t in gen_conjugated_trees(n) if pendant_count(t) == n // 2]
        assert len(half) == len(gen_trees(n // 2))
        keys = {canonical_key(t) for t in half}
        assert canonical_key(construct("S_star", n)) in keys


def test_witnesses_attain_reported_extremes():
    r = extremal_scan("tree", 8)
    assert all(total_eccentricity(g) == r.min_tau for g in r.min_witness_graphs)
    assert all(total_eccentricity(g) == r.max_tau for g in r.max_witness_graphs)
    assert r.min_tau <= r.max_tau
    assert r.min_witnesses and r.max_witnesses


def test_threaded_scan_deterministic():
    serial = extremal_scan("bicyclic", 7, threads=1)
    threaded = extremal_scan("bicyclic", 7, threads=4)
    assert serial == threaded
