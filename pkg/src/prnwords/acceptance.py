"""Exit criteria for the package, shared by ``prnwords selftest`` and pytest.

Each criterion returns a :class:`CriterionResult`; exceptions (including a
damaged golden file) turn into a failed result naming the criterion.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .bookgraph import book, book_permutations
from .families import cycle_graph, free_trees, path_graph, star
from .graphcore import Graph, concat, derive_graph, represents, uniformity
from .oracle import ChordDiagram, chord_intersection_graph, circle_search, local_complement, prn_search
from .pathcycle import cycle_permutations, path_closed_form, path_permutations
from .textio import parse_graph_text, parse_word_text
from .treebuilder import root_and_label, tree_permutations

DEFAULT_SEED = 20240229
FREE_TREE_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47, 10: 106}


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] {self.number}. {self.title} ({self.seconds:.2f}s) {self.detail}"


class GoldenData:
    """Reads the bundled fixtures, or a replacement directory of them."""

    def __init__(self, directory=None):
        self.directory = Path(directory) if directory else None

    def text(self, name: str) -> str:
        if self.directory is not None:
            return (self.directory / name).read_text()
        return resources.files("prnwords.data").joinpath(name).read_text()

    def graph(self, name: str) -> Graph:
        return parse_graph_text(self.text(name), name)

    def words(self, name: str):
        return parse_word_text(self.text(name))


class _Check:
    def __init__(self):
        self.problems: list[str] = []
        self.notes: list[str] = []

    def require(self, ok: bool, message: str):
        if not ok:
            self.problems.append(message)

    def within(self, seconds: float, limit: float, what: str):
        self.notes.append(f"{what} {seconds:.2f}s")
        self.require(seconds < limit, f"{what} took {seconds:.2f}s, limit {limit}s")


def _timed(fn, *args, **kwargs):
    t0 = time.perf_counter()
    out = fn(*args, **kwargs)
    return out, time.perf_counter() - t0


def tree12_golden(data: GoldenData, **_) -> _Check:
    c = _Check()
    tree = data.graph("tree12.txt")
    expected = data.words("tree12_permutations.txt")
    perms, dt = _timed(lambda: tree_permutations(root_and_label(tree, "1")))
    c.require(len(expected) == 3, "golden file must hold three permutations")
    for i, (got, want) in enumerate(zip(perms, expected), start=1):
        c.require(got == want, f"p{i} = {' '.join(got)}, expected {' '.join(want)}")
    c.require(represents(concat(perms), tree), "p1p2p3 does not represent the tree")
    c.within(dt, 1.0, "construction")
    return c


def all_small_trees(**_) -> _Check:
    c = _Check()
    t0 = time.perf_counter()
    checked = 0
    for n in range(1, 11):
        trees = free_trees(n)
        c.require(len(trees) == FREE_TREE_COUNTS[n], f"{len(trees)} trees on {n} vertices")
        for tree in trees:
            for root in tree.sorted_vertices():
                w = concat(tree_permutations(root_and_label(tree, root), verify=False))
                checked += 1
                if not represents(w, tree) or uniformity(w) != 3:
                    c.problems.append(f"fails on {tree!r} rooted at {root}")
    c.notes.append(f"{checked} rooted trees")
    c.within(time.perf_counter() - t0, 120.0, "total")
    return c


def graph_s(data: GoldenData, quick: bool = False, **_) -> _Check:
    c = _Check()
    s = data.graph("spider_s.txt")
    (w,) = data.words("spider_s_word.txt")
    c.require(represents(w, s), "the 21-letter word does not represent S")
    c.require(uniformity(w) == 3, "the word is not 3-uniform")
    if quick:
        c.notes.append("two-permutation search skipped (--quick)")
        return c
    out, dt = _timed(prn_search, s, 2)
    c.require(not out.found, f"unexpected two-permutation witness {out.witness}")
    c.require(out.states_examined == 25_401_600, f"examined {out.states_examined} pairs")
    c.notes.append(f"{out.states_examined} pairs, none represent S")
    c.within(dt, 300.0, "search")
    return c


def paths(**_) -> _Check:
    c = _Check()
    t0 = time.perf_counter()
    for n in range(3, 15):
        perms = path_permutations(n)
        c.require(perms == path_closed_form(n), f"n={n}: construction differs from the closed form")
        c.require(represents(concat(perms), path_graph(n)), f"n={n}: p2p3 does not represent P_n")
    c.within(time.perf_counter() - t0, 1.0, "paths")
    return c


def even_cycles(**_) -> _Check:
    c = _Check()
    t0 = time.perf_counter()
    for n in range(6, 15, 2):
        w = concat(cycle_permutations(n))
        c.require(represents(w, cycle_graph(n)) and uniformity(w) == 3, f"n={n}: word fails")
    out = prn_search(cycle_graph(6), 2)
    c.require(not out.found, f"C6 has a two-permutation witness {out.witness}")
    c.require(out.states_examined == 518_400, f"examined {out.states_examined} pairs")
    c.notes.append(f"C6: {out.states_examined} pairs, none represent it")
    c.within(time.perf_counter() - t0, 30.0, "total")
    return c


def book_graphs(quick: bool = False, **_) -> _Check:
    c = _Check()
    t0 = time.perf_counter()
    for m in range(1, 13):
        w = concat(book_permutations(m))
        c.require(represents(w, book(m)) and uniformity(w) == 3, f"m={m}: q1q2q3 fails")
    if quick:
        c.notes.append("chord-diagram search skipped (--quick)")
        return c
    out = circle_search(book(3))
    c.require(not out.found, f"B3 realised by chord diagram {out.witness}")
    c.require(out.states_examined == 2_027_025, f"examined {out.states_examined} diagrams")
    c.notes.append(f"B3: {out.states_examined} diagrams, none realise it")
    c.within(time.perf_counter() - t0, 300.0, "total")
    return c


def local_complement_golden(data: GoldenData, **_) -> _Check:
    c = _Check()
    t0 = time.perf_counter()
    b3 = data.graph("book3.txt")
    expected = data.graph("book3_local_complement_1.txt")
    got = local_complement(b3, "1")
    extra = sorted(map(sorted, got.edges - expected.edges))
    missing = sorted(map(sorted, expected.edges - got.edges))
    c.require(got == expected, f"extra edges {extra}, missing edges {missing}")
    c.require(local_complement(got, "1") == b3, "local complementation is not an involution here")
    c.within(time.perf_counter() - t0, 1.0, "check")
    return c


def _best_of(fn, repeats=3):
    return min(_timed(fn)[1] for _ in range(repeats))


def performance(**_) -> _Check:
    c = _Check()

    def path_run(n):
        return lambda: tree_permutations(root_and_label(path_graph(n, [str(i) for i in range(n)]), "0"))

    def star_run(leaves):
        return lambda: tree_permutations(root_and_label(star(leaves), "0"))

    for name, make in (("path", path_run), ("star", star_run)):
        big = _timed(make(10_000))[1]
        c.within(big, 10.0, f"{name} 10000")
        small, double = _best_of(make(2_500)), _best_of(make(5_000))
        ratio = double / small
        c.notes.append(f"{name} x2 ratio {ratio:.2f}")
        c.require(ratio <= 5.0, f"{name}: doubling 2500 -> 5000 costs {ratio:.2f}x")
    return c


def chord_cross_check(seed: int = DEFAULT_SEED, **_) -> _Check:
    c = _Check()
    rng = random.Random(seed)
    t0 = time.perf_counter()
    for trial in range(500):
        letters = [str(i) for i in range(rng.randint(1, 7))]
        w = letters * 2
        rng.shuffle(w)
        a = derive_graph(w)
        b = chord_intersection_graph(ChordDiagram.from_word(w))
        if a != b:
            c.problems.append(f"trial {trial}: {' '.join(w)} disagrees")
    c.notes.append(f"500 words, seed {seed}")
    c.within(time.perf_counter() - t0, 5.0, "total")
    return c


CRITERIA = [
    (1, "tree permutations match the golden 12-vertex tree", tree12_golden),
    (2, "every free tree on <= 10 vertices, every root", all_small_trees),
    (3, "graph S: word represents it, no two permutations do", graph_s),
    (4, "paths 3..14 match the closed forms", paths),
    (5, "even cycles 6..14 and the C6 lower bound", even_cycles),
    (6, "book graphs 1..12 and the B3 chord-diagram lower bound", book_graphs),
    (7, "local complementation of B3 at vertex 1", local_complement_golden),
    (8, "tree construction runtime envelope", performance),
    (9, "2-uniform words versus chord diagrams", chord_cross_check),
]


def run_criterion(number: int, quick: bool = False, seed: int = DEFAULT_SEED, data_dir=None) -> CriterionResult:
    _, title, fn = next(c for c in CRITERIA if c[0] == number)
    data = GoldenData(data_dir)
    t0 = time.perf_counter()
    try:
        check = fn(data=data, quick=quick, seed=seed)
    except Exception as exc:  # a broken fixture or construction is a named failure
        return CriterionResult(number, title, False, f"error: {type(exc).__name__}: {exc}",
                               time.perf_counter() - t0)
    detail = "; ".join(check.problems) if check.problems else "; ".join(check.notes)
    return CriterionResult(number, title, not check.problems, detail, time.perf_counter() - t0)


def run_all(quick: bool = False, seed: int = DEFAULT_SEED, data_dir=None, echo=print) -> list[CriterionResult]:
    results = []
    for number, _, _ in CRITERIA:
        r = run_criterion(number, quick=quick, seed=seed, data_dir=data_dir)
        if echo:
            echo(r.line())
        results.append(r)
    return results
