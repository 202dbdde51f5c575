import pytest

from prnwords.acceptance import FREE_TREE_COUNTS
from prnwords.families import book3_numbered, free_trees, spider_s, spider_s_word, star, tree_signature, wheel
from prnwords.graphcore import derive_graph
from prnwords.oracle import isomorphic


@pytest.mark.parametrize("n", range(1, 11))
def test_free_tree_counts(n):
    trees = free_trees(n)
    assert len(trees) == FREE_TREE_COUNTS[n]
    for t in trees:
        assert t.n == n and t.m == n - 1


def test_free_trees_are_pairwise_non_isomorphic():
    trees = free_trees(7)
    for i, a in enumerate(trees):
        for b in trees[i + 1:]:
            assert isomorphic(a, b) is None


def test_signature_ignores_labels():
    s = spider_s()
    moved = s.relabel({v: f"v{v}" for v in s.vertices})
    assert tree_signature(s.adjacency()) == tree_signature(moved.adjacency())


def test_named_graphs():
    assert derive_graph(spider_s_word()) == spider_s()
    assert star(4).degree("0") == 4
    assert wheel(5).n == 6 and wheel(5).m == 10
    assert book3_numbered().m == 10
