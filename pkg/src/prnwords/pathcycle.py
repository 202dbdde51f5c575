"""Permutational words for paths and even cycles."""

from __future__ import annotations

from dataclasses import dataclass

from .families import cycle_graph, path_graph, path_tokens
from .graphcore import (
    CertificateError,
    InvalidArgument,
    PermSequence,
    Word,
    concat,
    represents_permutationally,
)
from .oracle import SearchBounds, SearchOutcome, prn_search
from .treebuilder import root_and_label, tree_permutations


class NotComparabilityError(InvalidArgument):
    pass


def _tokens(n, tokens):
    tokens = list(tokens) if tokens is not None else path_tokens(n)
    if len(tokens) != n or len(set(tokens)) != n:
        raise InvalidArgument(f"need {n} distinct tokens")
    return tokens


def path_permutations(n: int, tokens=None) -> PermSequence:
    """Last two of the tree permutations of P_n rooted at its first vertex."""
    if n < 3:
        raise InvalidArgument("paths on fewer than 3 vertices are complete; use path_word")
    tokens = _tokens(n, tokens)
    g = path_graph(n, tokens)
    _, p2, p3 = tree_permutations(root_and_label(g, tokens[0]), verify=False)
    if not represents_permutationally([p2, p3], g):
        raise CertificateError(f"path permutations fail for n={n}")
    return [p2, p3]


def path_closed_form(n: int, tokens=None) -> PermSequence:
    """The explicit pair for P_n, written out index by index."""
    if n < 3:
        raise InvalidArgument("closed form needs n >= 3")
    a = [None] + _tokens(n, tokens)  # 1-based
    if n % 2:
        p2 = [x for i in range(2, n, 2) for x in (a[i], a[i - 1])] + [a[n]]
        p3 = [x for i in range(n - 1, 1, -2) for x in (a[i], a[i + 1])] + [a[1]]
    else:
        p2 = [x for i in range(2, n + 1, 2) for x in (a[i], a[i - 1])]
        p3 = [a[n]] + [x for i in range(n - 2, 1, -2) for x in (a[i], a[i + 1])] + [a[1]]
    return [tuple(p2), tuple(p3)]


def path_word(n: int, tokens=None) -> Word:
    if n < 1:
        raise InvalidArgument("n must be positive")
    tokens = _tokens(n, tokens)
    if n <= 2:
        return tuple(tokens)
    return concat(path_permutations(n, tokens))


def cycle_permutations(n: int, tokens=None) -> PermSequence:
    """Three permutations representing the even cycle C_n, n >= 6.

    The path on the first n-1 vertices supplies p2 and p3 (each prefixed
    by the last vertex); p1 lists the inner even-index vertices, then the
    inner odd-index ones, then a_n a_1 a_{n-1}.
    """
    if n % 2:
        raise NotComparabilityError(f"C_{n} is an odd cycle and not a comparability graph")
    if n == 4:
        raise InvalidArgument("C_4 is a permutation graph; use cycle_prn(4) for its two-permutation word")
    if n < 4:
        raise InvalidArgument("cycles need at least 4 vertices here")
    tokens = _tokens(n, tokens)
    a = [None] + tokens
    p2, p3 = path_permutations(n - 1, tokens[:-1])
    p_even = [a[i] for i in range(2, n - 1, 2)]
    p_odd = [a[i] for i in range(3, n - 2, 2)]
    perms = [
        tuple(p_even + p_odd + [a[n], a[1], a[n - 1]]),
        (a[n],) + p2,
        (a[n],) + p3,
    ]
    if not represents_permutationally(perms, cycle_graph(n, tokens)):
        raise CertificateError(f"cycle permutations fail for n={n}")
    return perms


@dataclass(frozen=True)
class CyclePrnResult:
    prn: int
    witness: Word
    permutations: PermSequence
    lower_bound: SearchOutcome | None = None


def cycle_prn(n: int, tokens=None, certify_lower: bool = False,
              bounds: SearchBounds | None = None) -> CyclePrnResult:
    """prn of an even cycle; with ``certify_lower`` at n=6 the two-permutation search is run too."""
    if n % 2:
        raise NotComparabilityError(f"C_{n} is an odd cycle and not a comparability graph")
    if n < 4:
        raise InvalidArgument("even cycles start at 4")
    tokens = _tokens(n, tokens)
    if n == 4:
        found = prn_search(cycle_graph(4, tokens), 2, bounds)
        if not found.found:
            raise CertificateError("no two-permutation word for C_4")
        return CyclePrnResult(2, concat(found.witness), found.witness)
    perms = cycle_permutations(n, tokens)
    lower = None
    if certify_lower:
        lower = prn_search(cycle_graph(n, tokens), 2, bounds)
        if lower.found:
            raise CertificateError(f"C_{n} unexpectedly has two permutations")
    return CyclePrnResult(3, concat(perms), perms, lower)
