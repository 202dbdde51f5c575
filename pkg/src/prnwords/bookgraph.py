"""Cartesian products, book graphs, and their three-permutation words."""

from __future__ import annotations

from dataclasses import dataclass

from .families import book3_numbered
from .graphcore import (
    CertificateError,
    Graph,
    InvalidArgument,
    PermSequence,
    Word,
    concat,
    represents_permutationally,
    sort_tokens,
)
from .oracle import SearchBounds, SearchOutcome, circle_search, induced_subgraph, prn_search

PRIME = "'"
ASCII_PRIME = "_p"


def product_token(a: str, b: str) -> str:
    return f"({a},{b})"


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """G box H on composite tokens ``(a,b)``."""
    pairs = [(a, b) for a in sort_tokens(g.vertices) for b in sort_tokens(h.vertices)]
    names = {p: product_token(*p) for p in pairs}
    if len(set(names.values())) != len(pairs):
        raise InvalidArgument("vertex tokens collide when rendered as product pairs")
    edges = []
    for a in g.vertices:
        for e in h.edges:
            b, d = tuple(e)
            edges.append((names[a, b], names[a, d]))
    for b in h.vertices:
        for e in g.edges:
            a, c = tuple(e)
            edges.append((names[a, b], names[c, b]))
    return Graph(names.values(), edges)


def _check_m(m):
    if not isinstance(m, int) or m < 1:
        raise InvalidArgument("book graphs need m >= 1")


def book(m: int, suffix: str = PRIME) -> Graph:
    """B_m: spines 0 and 0', pages i - i' for 1 <= i <= m."""
    _check_m(m)
    edges = [("0", f"0{suffix}")]
    for i in range(1, m + 1):
        edges += [("0", str(i)), (f"0{suffix}", f"{i}{suffix}"), (str(i), f"{i}{suffix}")]
    return Graph([], edges)


def book_permutations(m: int, suffix: str = PRIME) -> PermSequence:
    """q1, q2, q3 whose concatenation represents B_m.

    q1 and q2 interleave the two stars' tree permutations page by page,
    q3 is the two third permutations back to back with the spines swapped.
    """
    _check_m(m)
    s = suffix
    up = [str(i) for i in range(1, m + 1)]
    q1 = [f"0{s}"] + [x for i in up for x in (i, i + s)] + ["0"]
    q2 = [f"0{s}"] + [x for i in reversed(up) for x in (i, i + s)] + ["0"]
    q3 = up + [f"0{s}", "0"] + [i + s for i in reversed(up)]
    perms = [tuple(q1), tuple(q2), tuple(q3)]
    if not represents_permutationally(perms, book(m, s)):
        raise CertificateError(f"book permutations fail for m={m}")
    return perms


def book3_relabelling(suffix: str = PRIME) -> dict:
    """Map from the 1..8 drawing of B_3 to the 0/0' naming used by :func:`book`."""
    out = {"1": "0", "5": f"0{suffix}"}
    for i, (top, bottom) in enumerate((("2", "6"), ("3", "7"), ("4", "8")), start=1):
        out[top], out[bottom] = str(i), f"{i}{suffix}"
    return out


@dataclass(frozen=True)
class BookNumbers:
    representation_number: int
    prn: int
    witness: Word
    permutations: PermSequence
    certificates: dict


def book_numbers(m: int, suffix: str = PRIME, certify: bool = False,
                 bounds: SearchBounds | None = None) -> BookNumbers:
    """Representation number and prn of B_m with an upper-bound witness.

    For m <= 2 the witness is a two-permutation word found by search.  With
    ``certify`` and m >= 3 the lower bound is checked as well: B_3 sits in
    B_m as an induced subgraph and no chord diagram realises B_3.
    """
    _check_m(m)
    g = book(m, suffix)
    certs: dict = {}
    if m <= 2:
        found = prn_search(g, 2, bounds)
        if not found.found:
            raise CertificateError(f"no two-permutation word for B_{m}")
        if certify:
            certs["prn1"] = prn_search(g, 1, bounds)
        return BookNumbers(2, 2, concat(found.witness), found.witness, certs)
    perms = book_permutations(m, suffix)
    if certify:
        certs["contains_b3"] = induced_subgraph(g, book(3, suffix), bounds)
        outcome: SearchOutcome = circle_search(book(3, suffix), bounds)
        certs["circle_b3"] = outcome
        if certs["contains_b3"] is None or outcome.found:
            raise CertificateError("lower-bound certificate for the book graph failed")
    return BookNumbers(3, 3, concat(perms), perms, certs)

