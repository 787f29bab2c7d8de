import itertools
import random

import pytest

from totecc import GraphError, build_graph, canonical_key, relabel, tree_key
from totecc.enumeration import gen_bicyclic, gen_trees, gen_unicyclic
from totecc.families import construct

from oracles import permutation_isomorphic


def test_p4_relabelings_share_one_key():
    p4 = construct("path", 4)
    keys = {canonical_key(relabel(p4, list(perm))) for perm in itertools.permutations(range(4))}
    assert len(keys) == 1


def test_p4_and_s4_distinct():
    assert canonical_key(construct("path", 4)) != canonical_key(construct("star", 4))


def test_all_labeled_trees_on_4_vertices_give_two_keys():
    from totecc import classify

    keys = set()
    count = 0
    for edges in itertools.combinations(itertools.combinations(range(4), 2), 3):
        g = build_graph(4, list(edges))
        if classify(g) == "tree":
            count += 1
            keys.add(canonical_key(g))
    assert count == 16  # Cayley: 4^2 labeled trees
    assert len(keys) == 2


def test_key_matches_brute_force_isomorphism():
    graphs = list(gen_trees(5)) + list(gen_unicyclic(5)) + list(gen_bicyclic(5))
    for g, h in itertools.combinations(graphs, 2):
        assert (canonical_key(g) == canonical_key(h)) == permutation_isomorphic(g, h)


def test_random_relabel_invariance():
    rng = random.Random(31337)
    pool = list(gen_trees(8)) + list(gen_unicyclic(7)) + list(gen_bicyclic(7))
    for _ in range(300):
        g = pool[rng.randrange(len(pool))]
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert canonical_key(relabel(g, perm)) == canonical_key(g)


def test_bound_enforced():
    with pytest.raises(GraphError, match="n <= 12"):
        canonical_key(construct("path", 13))


def test_tree_key_agrees_with_general_key():
    for n in range(2, 9):
        trees = gen_trees(n)
        assert len({tree_key(t) for t in trees}) == len(trees)
        assert len({canonical_key(t) for t in trees}) == len(trees)
        # same partition: every pair distinct under both encodings
        for a, b in itertools.combinations(trees, 2):
            assert (tree_key(a) == tree_key(b)) == (canonical_key(a) == canonical_key(b))


def test_tree_key_relabel_invariance():
    rng = random.Random(5)
    for t in gen_trees(9):
        perm = list(range(9))
        rng.shuffle(perm)
        assert tree_key(relabel(t, perm)) == tree_key(t)


def test_tree_key_rejects_non_trees():
    with pytest.raises(GraphError):
        tree_key(construct("cycle", 5))
