import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from prnwords.graphcore import Graph
from prnwords.textio import (
    ParseError,
    dumps,
    format_graph_text,
    format_word_text,
    graph_from_json,
    graph_to_json,
    parse_graph_text,
    parse_word_text,
)


def test_parse_graph_text():
    g = parse_graph_text("# a triangle\n3 3\n1 2\n2 3  # comment\n3 1\n")
    assert g == Graph([], [("1", "2"), ("2", "3"), ("1", "3")])


def test_isolated_vertices_after_edges():
    g = parse_graph_text("3 1\na b\nc\n")
    assert g.vertices == {"a", "b", "c"} and g.m == 1


@pytest.mark.parametrize(
    "text,line,fragment",
    [
        ("", 1, "header"),
        ("2 x\n", 1, "header"),
        ("3 2\n1 2\n", 2, "expected 2 edge lines"),
        ("2 1\n1 2 3\n", 2, "two tokens"),
        ("2 1\n\n1 1\n", 3, "self-loop"),
        ("2 2\n1 2\n2 1\n", 3, "duplicate"),
        ("4 1\n1 2\n", 2, "header says 4"),
        ("3 1\n1 2\n3 4\n", 3, "isolated"),
    ],
)
def test_parse_errors_name_the_line(text, line, fragment):
    with pytest.raises(ParseError) as info:
        parse_graph_text(text, "g.txt")
    assert info.value.line == line
    assert str(info.value).startswith(f"g.txt:{line}:") and fragment in str(info.value)


tokens = st.sampled_from(["1", "2", "3", "10", "a", "b'", "0_p", "(1,2)"])


@settings(max_examples=150, deadline=None)
@given(st.sets(tokens, min_size=1), st.data())
def test_graph_text_and_json_roundtrip(vs, data):
    vs = sorted(vs)
    pairs = [(u, v) for i, u in enumerate(vs) for v in vs[i + 1:]]
    chosen = data.draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    g = Graph(vs, chosen)
    assert parse_graph_text(format_graph_text(g)) == g
    assert graph_from_json(json.loads(dumps(graph_to_json(g)))) == g


def test_word_text():
    words = [("1", "2"), ("2", "1")]
    assert parse_word_text(format_word_text(words)) == words
    assert parse_word_text("# none\n\n") == []
