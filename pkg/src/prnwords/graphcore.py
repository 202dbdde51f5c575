"""Words over vertex alphabets, alternation, and the graphs words represent.

Vertex tokens are plain strings.  A word is any sequence of tokens (we use
tuples); a permutational representation is a list of words, each a
permutation of the same vertex set.
"""

from __future__ import annotations

import itertools
import re
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

Word = tuple[str, ...]
PermSequence = list[Word]

_INT_RE = re.compile(r"[+-]?\d+")


class InvalidArgument(ValueError):
    pass


class CertificateError(AssertionError):
    """A construction produced a word that does not represent its target."""


def token_key(token: str):
    """Sort key: pure-integer names numerically, first; the rest lexicographically."""
    if _INT_RE.fullmatch(token):
        return (0, int(token), token)
    return (1, 0, token)


def sort_tokens(tokens: Iterable[str]) -> list[str]:
    return sorted(tokens, key=token_key)


def check_token(token) -> str:
    if not isinstance(token, str) or not token or any(c.isspace() for c in token):
        raise InvalidArgument(f"invalid vertex token {token!r}")
    return token


def word(text_or_tokens) -> Word:
    """Build a word from whitespace-separated text or an iterable of tokens."""
    if isinstance(text_or_tokens, str):
        return tuple(text_or_tokens.split())
    return tuple(check_token(str(t)) for t in text_or_tokens)


def format_word(w: Sequence[str]) -> str:
    return " ".join(w)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on string tokens."""

    vertices: frozenset
    edges: frozenset  # of frozenset({u, v})

    def __init__(self, vertices: Iterable = (), edges: Iterable = ()):
        vs = {check_token(str(v)) for v in vertices}
        es = set()
        for e in edges:
            u, v = (str(x) for x in e)
            if u == v:
                raise InvalidArgument(f"self-loop at {u}")
            vs.add(check_token(u))
            vs.add(check_token(v))
            es.add(frozenset((u, v)))
        object.__setattr__(self, "vertices", frozenset(vs))
        object.__setattr__(self, "edges", frozenset(es))

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_vertices(self) -> list[str]:
        return sort_tokens(self.vertices)

    def edge_list(self) -> list[tuple[str, str]]:
        pairs = [tuple(sort_tokens(e)) for e in self.edges]
        return sorted(pairs, key=lambda p: (token_key(p[0]), token_key(p[1])))

    def has_edge(self, u: str, v: str) -> bool:
        return frozenset((u, v)) in self.edges

    def adjacency(self) -> dict[str, set[str]]:
        adj: dict[str, set[str]] = {v: set() for v in self.vertices}
        for e in self.edges:
            u, v = tuple(e)
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def neighbors(self, v: str) -> set[str]:
        if v not in self.vertices:
            raise InvalidArgument(f"vertex {v!r} not in graph")
        return {u for e in self.edges if v in e for u in e if u != v}

    def degree(self, v: str) -> int:
        return len(self.neighbors(v))

    def relabel(self, mapping: Mapping[str, str]) -> "Graph":
        return Graph(
            (mapping[v] for v in self.vertices),
            ((mapping[u], mapping[v]) for u, v in map(tuple, self.edges)),
        )

    def induced(self, subset: Iterable[str]) -> "Graph":
        s = set(subset)
        return Graph(s, (tuple(e) for e in self.edges if e <= s))

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_list()})"


def restrict(w: Sequence[str], keep: Iterable[str]) -> Word:
    """The subword of ``w`` made of the letters in ``keep``."""
    keep = set(keep)
    return tuple(x for x in w if x in keep)


def alternates(w: Sequence[str], a: str, b: str) -> bool:
    if a == b:
        raise InvalidArgument("alternation needs two distinct letters")
    r = restrict(w, (a, b))
    if a not in r or b not in r:
        # a single letter alternates with an absent one only if it occurs once
        return len(r) <= 1
    return all(x != y for x, y in zip(r, r[1:]))


def _occurrences(w: Sequence[str]) -> dict[str, list[int]]:
    occ: dict[str, list[int]] = defaultdict(list)
    for i, x in enumerate(w):
        occ[x].append(i)
    return occ


def _interleaved(pa: list[int], pb: list[int]) -> bool:
    # merged position lists must switch letters at every step
    if abs(len(pa) - len(pb)) > 1:
        return False
    merged = sorted([(p, 0) for p in pa] + [(p, 1) for p in pb])
    return all(x[1] != y[1] for x, y in zip(merged, merged[1:]))


def derive_graph(w: Sequence[str]) -> Graph:
    """Graph on the letters of ``w`` with an edge for every alternating pair."""
    if len(w) == 0:
        raise InvalidArgument("cannot derive a graph from the empty word")
    occ = _occurrences(w)
    letters = sort_tokens(occ)
    edges = [
        (a, b)
        for a, b in itertools.combinations(letters, 2)
        if _interleaved(occ[a], occ[b])
    ]
    return Graph(letters, edges)


def represents(w: Sequence[str], g: Graph) -> bool:
    if set(w) != set(g.vertices):
        raise InvalidArgument("letters of the word differ from the graph's vertices")
    return derive_graph(w).edges == g.edges


def uniformity(w: Sequence[str]) -> int | None:
    """k if every letter of ``w`` occurs exactly k times, else None."""
    if len(w) == 0:
        raise InvalidArgument("empty word")
    counts = set(_count(w).values())
    return counts.pop() if len(counts) == 1 else None


def _count(w):
    c: dict[str, int] = defaultdict(int)
    for x in w:
        c[x] += 1
    return c


def as_perm_sequence(w: Sequence[str], vertices: Iterable[str]) -> PermSequence | None:
    vs = set(vertices)
    n = len(vs)
    if n == 0 or len(w) == 0 or len(w) % n:
        return None
    blocks = [tuple(w[i:i + n]) for i in range(0, len(w), n)]
    if all(set(b) == vs for b in blocks):
        return blocks
    return None


def reverse_perm(p: Sequence[str]) -> Word:
    if len(set(p)) != len(p):
        raise InvalidArgument("reverse_perm expects a permutation (no repeated letters)")
    return tuple(reversed(p))


def concat(perms: Iterable[Sequence[str]]) -> Word:
    return tuple(itertools.chain.from_iterable(perms))


def perm_positions(perms: Sequence[Sequence[str]], order: Sequence[str]) -> np.ndarray:
    """(k, n) array: position of ``order[j]`` inside ``perms[i]``."""
    index = {v: j for j, v in enumerate(order)}
    pos = np.empty((len(perms), len(order)), dtype=np.int64)
    for i, p in enumerate(perms):
        if len(p) != len(order) or set(p) != set(order):
            raise InvalidArgument(f"block {i} is not a permutation of the vertex set")
        pos[i, [index[v] for v in p]] = np.arange(len(p))
    return pos


def represents_permutationally(perms: Sequence[Sequence[str]], g: Graph, chunk: int = 512) -> bool:
    """Fast check that ``perms`` (concatenated) represents ``g``.

    In a concatenation of permutations two letters alternate exactly when
    their relative order is the same in every block, so the check compares
    pairwise order signs instead of scanning the word.  Vectorised in row
    chunks; memory stays O(k * chunk * n).
    """
    order = g.sorted_vertices()
    if not perms:
        return False
    pos = perm_positions(perms, order)
    n = len(order)
    index = {v: j for j, v in enumerate(order)}
    adj = np.zeros((n, n), dtype=bool)
    for e in g.edges:
        u, v = (index[x] for x in e)
        adj[u, v] = adj[v, u] = True
    for start in range(0, n, chunk):
        rows = slice(start, min(n, start + chunk))
        first = pos[0, rows, None] < pos[0, None, :]
        agree = np.ones_like(first)
        for i in range(1, pos.shape[0]):
            agree &= (pos[i, rows, None] < pos[i, None, :]) == first
        idx = np.arange(rows.start, rows.stop)
        agree[np.arange(len(idx)), idx] = False
        if not np.array_equal(agree, adj[rows]):
            return False
    return True
