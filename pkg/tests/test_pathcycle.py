import pytest

from prnwords.families import cycle_graph, path_graph, path_tokens
from prnwords.graphcore import InvalidArgument, concat, represents, uniformity
from prnwords.oracle import all_perm_representations
from prnwords.pathcycle import (
    NotComparabilityError,
    cycle_permutations,
    cycle_prn,
    path_closed_form,
    path_permutations,
    path_word,
)


def a(*indices):
    return tuple(f"a{i}" for i in indices)


def test_path_examples():
    assert path_permutations(5) == [a(2, 1, 4, 3, 5), a(4, 5, 2, 3, 1)]
    assert path_permutations(6) == [a(2, 1, 4, 3, 6, 5), a(6, 4, 5, 2, 3, 1)]
    assert path_permutations(3) == [a(2, 1, 3), a(2, 3, 1)]


def test_path_word():
    assert path_word(1) == ("a1",)
    assert path_word(5) == a(2, 1, 4, 3, 5, 4, 5, 2, 3, 1)
    for n in range(1, 16):
        w = path_word(n)
        assert represents(w, path_graph(n))
        assert uniformity(w) == (1 if n <= 2 else 2)


@pytest.mark.parametrize("n", range(3, 21))
def test_path_matches_closed_form(n):
    assert path_permutations(n) == path_closed_form(n)


def test_path_rejects_small_n():
    with pytest.raises(InvalidArgument):
        path_permutations(2)


def test_path_custom_tokens():
    tokens = ["x", "y", "z", "w"]
    perms = path_permutations(4, tokens)
    assert represents(concat(perms), path_graph(4, tokens))


def test_cycle_examples():
    assert cycle_permutations(6) == [a(2, 4, 3, 6, 1, 5), a(6, 2, 1, 4, 3, 5), a(6, 4, 5, 2, 3, 1)]
    assert cycle_permutations(8) == [
        a(2, 4, 6, 3, 5, 8, 1, 7),
        a(8, 2, 1, 4, 3, 6, 5, 7),
        a(8, 6, 7, 4, 5, 2, 3, 1),
    ]


@pytest.mark.parametrize("n", range(6, 31, 2))
def test_cycle_words_represent(n):
    w = concat(cycle_permutations(n))
    assert represents(w, cycle_graph(n)) and uniformity(w) == 3


def test_cycle_errors():
    with pytest.raises(NotComparabilityError):
        cycle_permutations(5)
    with pytest.raises(NotComparabilityError):
        cycle_prn(7)
    with pytest.raises(InvalidArgument, match="cycle_prn"):
        cycle_permutations(4)


def test_cycle_prn():
    four = cycle_prn(4)
    assert four.prn == 2 and represents(four.witness, cycle_graph(4)) and uniformity(four.witness) == 2
    six = cycle_prn(6, certify_lower=True)
    assert six.prn == 3 and represents(six.witness, cycle_graph(6))
    assert not six.lower_bound.found and six.lower_bound.states_examined == 720 ** 2
    assert cycle_prn(12).prn == 3


def _one_sided(perms, g):
    for p in perms:
        pos = {x: i for i, x in enumerate(p)}
        for v in g.vertices:
            sides = {pos[u] > pos[v] for u in g.neighbors(v)}
            if len(sides) > 1:
                return False
    return True


@pytest.mark.parametrize("n", range(3, 8))
def test_neighbours_sit_on_one_side(n):
    g = path_graph(n)
    reps = all_perm_representations(g, 2)
    assert reps and all(_one_sided(r, g) for r in reps)
    assert _one_sided(path_permutations(n), g)


@pytest.mark.parametrize("n", range(3, 8))
def test_two_permutation_words_for_paths(n, capsys):
    g = path_graph(n)
    reps = {tuple(r) for r in all_perm_representations(g, 2)}
    assert tuple(path_closed_form(n)) in reps
    with capsys.disabled():
        print(f"\nP_{n}: {len(reps)} ordered two-permutation representations")
    # swapping the two blocks is always another representation
    assert all((q, p) in reps for p, q in reps)


def test_path_tokens():
    assert path_tokens(3) == ["a1", "a2", "a3"]
