"""Graph and word text formats, plus their JSON forms.

Graph text: a header ``n m``, then ``m`` lines ``u v``; any further lines
name isolated vertices, one token per line.  Word text: whitespace
separated tokens, one word per line.  ``#`` starts a comment in both.
"""

from __future__ import annotations

import json
from pathlib import Path

from .graphcore import Graph, InvalidArgument, Word, check_token, format_word


class ParseError(InvalidArgument):
    def __init__(self, source: str, line: int, message: str):
        super().__init__(f"{source}:{line}: {message}")
        self.line = line


def _content_lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line.split()


def parse_graph_text(text: str, source: str = "<graph>") -> Graph:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError(source, 1, "missing header 'n m'")
    number, header = lines[0]
    try:
        n, m = (int(x) for x in header)
    except ValueError:
        raise ParseError(source, number, f"header must be two integers 'n m', got {' '.join(header)!r}") from None
    if n < 0 or m < 0:
        raise ParseError(source, number, "header counts must be non-negative")
    body = lines[1:]
    if len(body) < m:
        last = body[-1][0] if body else number
        raise ParseError(source, last, f"expected {m} edge lines, found {len(body)}")
    vertices: set[str] = set()
    edges = set()
    for number, fields in body[:m]:
        if len(fields) != 2:
            raise ParseError(source, number, f"edge line needs two tokens 'u v', got {len(fields)}")
        u, v = fields
        if u == v:
            raise ParseError(source, number, f"self-loop at {u!r}")
        e = frozenset((u, v))
        if e in edges:
            raise ParseError(source, number, f"duplicate edge {u} {v}")
        edges.add(e)
        vertices.update(fields)
    for number, fields in body[m:]:
        if len(fields) != 1:
            raise ParseError(source, number, "after the edges only single isolated-vertex tokens are allowed")
        vertices.add(fields[0])
    if len(vertices) != n:
        raise ParseError(source, number, f"header says {n} vertices but {len(vertices)} are named")
    return Graph(vertices, (tuple(e) for e in edges))


def format_graph_text(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edge_list()]
    touched = {x for e in g.edges for x in e}
    lines += [v for v in g.sorted_vertices() if v not in touched]
    return "\n".join(lines) + "\n"


def parse_word_text(text: str) -> list[Word]:
    """One word per non-comment line."""
    out = []
    for _, fields in _content_lines(text):
        out.append(tuple(check_token(t) for t in fields))
    return out


def format_word_text(words) -> str:
    return "".join(format_word(w) + "\n" for w in words)


def read_graph(path) -> Graph:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise InvalidArgument(f"cannot read graph file {p}: {exc.strerror}") from None
    return parse_graph_text(text, str(p))


def graph_to_json(g: Graph) -> dict:
    return {"vertices": g.sorted_vertices(), "edges": [list(e) for e in g.edge_list()]}


def graph_from_json(data: dict) -> Graph:
    try:
        return Graph(data["vertices"], (tuple(e) for e in data["edges"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidArgument(f"bad graph JSON: {exc}") from None


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=True)
