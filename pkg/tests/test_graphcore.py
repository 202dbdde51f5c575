import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from prnwords.families import free_trees, path_graph, spider_s, spider_s_word
from prnwords.graphcore import (
    Graph,
    InvalidArgument,
    alternates,
    as_perm_sequence,
    concat,
    derive_graph,
    represents,
    represents_permutationally,
    restrict,
    reverse_perm,
    sort_tokens,
    uniformity,
    word,
)
from prnwords.oracle import ChordDiagram, chord_intersection_graph

S_WORD = word("2 3 4 6 1 5 7 6 7 4 5 2 1 3 2 3 4 5 6 7 1")

TREE12_EDGES = [(1, 2), (1, 4), (1, 6), (2, 3), (2, 5), (3, 8), (4, 7), (7, 10), (6, 9), (6, 11), (11, 12)]
TREE12_WORD = word(
    "2 8 3 5 4 6 1 10 7 9 12 11 6 12 11 9 4 10 7 2 1 5 8 3 12 10 8 2 3 5 4 7 6 9 11 1"
)


def test_restrict():
    assert restrict(word("2 4 6 1 6 4 2 1"), {"1", "2"}) == word("2 1 2 1")
    assert restrict(word("2 4 6 1"), set()) == ()
    assert restrict(word("2 3 4 6 1 5 7"), {"5", "7"}) == ("5", "7")


def test_alternates_examples():
    assert alternates(word("a b a b"), "a", "b")
    assert not alternates(word("a a b"), "a", "b")
    assert alternates(S_WORD, "1", "2")
    assert not alternates(S_WORD, "1", "3")


def test_alternates_single_occurrences():
    assert alternates(word("a b"), "a", "b")
    assert alternates(word("b a"), "a", "b")
    assert alternates(word("a"), "a", "b")
    assert not alternates(word("a c a"), "a", "b")


def test_alternates_rejects_equal_letters():
    with pytest.raises(InvalidArgument):
        alternates(word("a b"), "a", "a")


def test_derive_graph_examples():
    assert derive_graph(word("a b a b")) == Graph(["a", "b"], [("a", "b")])
    assert derive_graph(S_WORD) == spider_s()
    assert derive_graph(TREE12_WORD) == Graph([], TREE12_EDGES)
    with pytest.raises(InvalidArgument):
        derive_graph(())


def test_represents():
    assert represents(word("a b a b"), Graph([], [("a", "b")]))
    assert represents(S_WORD, spider_s())
    s = spider_s()
    for e in s.edges:
        assert not represents(S_WORD, Graph(s.vertices, s.edges - {e}))
    with pytest.raises(InvalidArgument):
        represents(word("a b a b"), Graph([], [("a", "c")]))


def test_uniformity():
    assert uniformity(word("a b a b")) == 2
    assert uniformity(word("a a b")) is None
    assert uniformity(S_WORD) == 3


def test_as_perm_sequence():
    assert as_perm_sequence(S_WORD, map(str, range(1, 8))) == [
        tuple("2346157"), tuple("6745213"), tuple("2345671")
    ]
    assert as_perm_sequence(word("a b b a"), {"a", "b"}) == [("a", "b"), ("b", "a")]
    assert as_perm_sequence(word("a b a"), {"a", "b"}) is None
    assert as_perm_sequence(word("a a b b"), {"a", "b"}) is None


def test_reverse_perm():
    assert reverse_perm(word("1 2 3")) == word("3 2 1")
    m = 5
    p1 = [str(i) for i in range(1, m + 1)] + ["0"]
    assert reverse_perm(p1) == ("0",) + tuple(str(i) for i in range(m, 0, -1))
    assert reverse_perm(reverse_perm(p1)) == tuple(p1)
    with pytest.raises(InvalidArgument):
        reverse_perm(word("1 2 1"))


def test_token_order_is_numeric_for_integers():
    assert sort_tokens(["10", "2", "0'", "1", "a"]) == ["1", "2", "10", "0'", "a"]


def test_graph_rejects_loops_and_bad_tokens():
    with pytest.raises(InvalidArgument):
        Graph([], [("a", "a")])
    with pytest.raises(InvalidArgument):
        Graph(["a b"], [])


letters = st.sampled_from([str(i) for i in range(8)])


@settings(max_examples=300, deadline=None)
@given(st.lists(letters, min_size=1, max_size=16), letters, letters)
def test_alternation_is_symmetric(w, a, b):
    if a != b:
        assert alternates(w, a, b) == alternates(w, b, a)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 6), st.integers(1, 4), st.randoms(use_true_random=False))
def test_relabelling_equivariance(n, k, rnd):
    vs = [str(i) for i in range(n)]
    perms = [tuple(rnd.sample(vs, n)) for _ in range(k)]
    image = rnd.sample(vs, n)
    sigma = dict(zip(vs, image))
    moved = [tuple(sigma[x] for x in p) for p in perms]
    assert derive_graph(concat(moved)) == derive_graph(concat(perms)).relabel(sigma)


def _all_perm_tuples(n, k):
    vs = [str(i) for i in range(n)]
    return itertools.product(itertools.permutations(vs), repeat=k)


@pytest.mark.parametrize("n,k", [(n, k) for n in range(1, 5) for k in (1, 2, 3)] + [(5, 1), (5, 2)])
def test_reversing_every_block_keeps_the_graph(n, k):
    for perms in _all_perm_tuples(n, k):
        reversed_word = concat(p[::-1] for p in perms)
        assert derive_graph(concat(perms)) == derive_graph(reversed_word)


def test_reversing_every_block_keeps_the_graph_sampled_n5_k3():
    rng = random.Random(5)
    vs = [str(i) for i in range(5)]
    for _ in range(3000):
        perms = [tuple(rng.sample(vs, 5)) for _ in range(3)]
        assert derive_graph(concat(perms)) == derive_graph(concat(p[::-1] for p in perms))


def test_fast_check_agrees_with_alternation_scan():
    rng = random.Random(11)
    for _ in range(400):
        n, k = rng.randint(1, 7), rng.randint(1, 4)
        vs = [str(i) for i in range(n)]
        perms = [tuple(rng.sample(vs, n)) for _ in range(k)]
        g = derive_graph(concat(perms))
        assert represents_permutationally(perms, g)
        if g.m:
            e = next(iter(g.edges))
            assert not represents_permutationally(perms, Graph(g.vertices, g.edges - {e}))


def test_fast_check_on_trees():
    from prnwords.treebuilder import root_and_label, tree_permutations

    for tree in free_trees(8):
        perms = tree_permutations(root_and_label(tree), verify=False)
        assert represents_permutationally(perms, tree) == represents(concat(perms), tree)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 7), st.randoms(use_true_random=False))
def test_two_uniform_alternation_is_chord_crossing(n, rnd):
    w = [str(i) for i in range(n)] * 2
    rnd.shuffle(w)
    assert derive_graph(w) == chord_intersection_graph(ChordDiagram.from_word(w))


def test_path_graph_word_roundtrip():
    g = path_graph(4)
    assert g.m == 3 and g.has_edge("a2", "a3")
