"""Small named graph families used throughout the package and its tests."""

from __future__ import annotations

from .graphcore import Graph


def path_tokens(n: int, prefix: str = "a") -> list[str]:
    return [f"{prefix}{i}" for i in range(1, n + 1)]


def path_graph(n: int, tokens=None) -> Graph:
    tokens = list(tokens) if tokens is not None else path_tokens(n)
    if len(tokens) != n or n < 1:
        raise ValueError("path needs n >= 1 tokens")
    return Graph(tokens, zip(tokens, tokens[1:]))


def cycle_graph(n: int, tokens=None) -> Graph:
    tokens = list(tokens) if tokens is not None else path_tokens(n)
    if len(tokens) != n or n < 3:
        raise ValueError("cycle needs n >= 3 tokens")
    return Graph(tokens, list(zip(tokens, tokens[1:])) + [(tokens[-1], tokens[0])])


def complete_graph(n: int) -> Graph:
    vs = [str(i) for i in range(1, n + 1)]
    return Graph(vs, ((u, v) for i, u in enumerate(vs) for v in vs[i + 1:]))


def star(m: int, center: str = "0", suffix: str = "") -> Graph:
    """K_{1,m}: center joined to leaves 1..m (tokens carry ``suffix``)."""
    c = center + suffix
    return Graph([c], ((c, f"{i}{suffix}") for i in range(1, m + 1)))


def wheel(spokes: int) -> Graph:
    """Hub ``h`` joined to every vertex of a cycle on ``spokes`` vertices."""
    rim = [str(i) for i in range(1, spokes + 1)]
    c = cycle_graph(spokes, rim)
    return Graph(c.vertices | {"h"}, list(map(tuple, c.edges)) + [("h", v) for v in rim])


def spider_s() -> Graph:
    """The spider with three legs of length two, centre 1, legs 2-3, 4-5, 6-7."""
    return Graph(map(str, range(1, 8)), [("1", "2"), ("1", "4"), ("1", "6"), ("2", "3"), ("4", "5"), ("6", "7")])


def spider_s_word() -> tuple[str, ...]:
    """A 3-uniform permutational word known to represent :func:`spider_s`."""
    return tuple("234615767452132345671")


def book3_numbered() -> Graph:
    """B_3 with spines 1 and 5, pages 2-6, 3-7, 4-8."""
    return Graph(
        map(str, range(1, 9)),
        [("1", "2"), ("1", "3"), ("1", "4"), ("1", "5"), ("2", "6"), ("3", "7"), ("4", "8"),
         ("5", "6"), ("5", "7"), ("5", "8")],
    )


def _ahu(adj, v, parent) -> str:
    return "(" + "".join(sorted(_ahu(adj, u, v) for u in adj[v] if u != parent)) + ")"


def tree_signature(adj: dict) -> str:
    """Isomorphism-invariant string for a free tree (AHU encoding at its centre)."""
    n = len(adj)
    if n <= 2:
        return "T" * n
    degree = {v: len(adj[v]) for v in adj}
    layer = [v for v in adj if degree[v] <= 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for leaf in layer:
            for u in adj[leaf]:
                degree[u] -= 1
                if degree[u] == 1:
                    nxt.append(u)
        layer = nxt
    return min(_ahu(adj, c, None) for c in layer)


def free_trees(n: int) -> list[Graph]:
    """One representative per isomorphism class of trees on vertices 1..n.

    Grown leaf by leaf from the trees on n-1 vertices and deduplicated by
    centre-rooted AHU strings.
    """
    if n < 1:
        return []
    level = {"": {1: set()}}
    for size in range(2, n + 1):
        nxt = {}
        for adj in level.values():
            for v in list(adj):
                new = {u: set(nb) for u, nb in adj.items()}
                new[v].add(size)
                new[size] = {v}
                nxt.setdefault(tree_signature(new), new)
        level = nxt
    return [
        Graph(map(str, adj), ((str(u), str(v)) for u in adj for v in adj[u] if u < v))
        for _, adj in sorted(level.items())
    ]
