import io
import json
import warnings

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oddhom.formats import (
    FormatError,
    FormatWarning,
    emit_dimacs,
    emit_edgelist_json,
    emit_graph6,
    iter_graph6,
    parse_dimacs,
    parse_edgelist_json,
    parse_graph6,
    parse_text,
    read_graph,
    sniff_format,
)
from oddhom.graph import Graph, complete, cycle

from conftest import graphs


def test_graph6_examples():
    assert emit_graph6(cycle(3)) == "Bw"
    assert emit_graph6(Graph(0)) == "?"
    assert parse_graph6("Bw") == cycle(3)
    assert parse_graph6(">>graph6<<Bw\n") == cycle(3)
    assert parse_graph6(emit_graph6(cycle(7))) == cycle(7)


def test_graph6_trailing_zero_padding_accepted():
    # 7 vertices need 4 body bytes; an extra all-zero byte is tolerated
    g = parse_graph6("F?????")
    assert (g.n, g.e) == (7, 0)
    assert parse_graph6("F????") == g


@pytest.mark.parametrize("bad", ["junk\x01", "", "Bx", "B", "F????@", "~~", "~?"])
def test_graph6_rejects(bad):
    with pytest.raises(FormatError):
        parse_graph6(bad)


def test_graph6_large_size_form():
    g = Graph(100, [(0, 99), (5, 6)])
    s = emit_graph6(g)
    assert s.startswith("~")
    assert parse_graph6(s) == g
    assert s == nx.to_graph6_bytes(_nx(g), header=False).decode().strip()


def _nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=14))
def test_graph6_round_trip_and_matches_networkx(g):
    s = emit_graph6(g)
    assert parse_graph6(s) == g
    assert s == nx.to_graph6_bytes(_nx(g), header=False).decode().strip()


@settings(max_examples=300, deadline=None)
@given(st.binary(max_size=40))
def test_graph6_parser_only_raises_format_error(data):
    try:
        parse_graph6(data)
    except FormatError:
        pass


@settings(max_examples=300, deadline=None)
@given(st.text(max_size=80))
def test_text_parsers_only_raise_format_error(text):
    for fmt in ("graph6", "dimacs", "json"):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            try:
                parse_text(text, fmt)
            except FormatError:
                pass


def test_iter_graph6_reports_line_numbers():
    stream = io.StringIO("Bw\n\nDLo\nbad\x01\n")
    it = iter_graph6(stream)
    assert next(it) == cycle(3)
    assert next(it).n == 5
    with pytest.raises(FormatError) as exc:
        next(it)
    assert exc.value.line == 4


def test_dimacs_examples():
    g = parse_dimacs("c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n")
    assert g == cycle(3)
    text = "p edge 3 5\ne 1 2\ne 2 3\ne 1 3\n"
    with pytest.raises(FormatError):
        parse_dimacs(text, strict=True)
    with pytest.warns(FormatWarning):
        assert parse_dimacs(text) == cycle(3)


def test_dimacs_duplicates_and_range():
    dup = "p edge 2 2\ne 1 2\ne 2 1\n"
    with pytest.warns(FormatWarning):
        assert parse_dimacs(dup).e == 1
    with pytest.raises(FormatError):
        parse_dimacs(dup, strict=True)
    with pytest.raises(FormatError) as exc:
        parse_dimacs("p edge 2 1\ne 1 3\n")
    assert exc.value.line == 2
    with pytest.raises(FormatError):
        parse_dimacs("e 1 2\n")
    with pytest.raises(FormatError):
        parse_dimacs("p edge 2 1\ne 1 x\n")


def test_json_examples():
    obj = {"n": 7, "edges": [[i, (i + 1) % 7] for i in range(7)]}
    assert parse_edgelist_json(json.dumps(obj)) == cycle(7)
    with pytest.raises(FormatError):
        parse_edgelist_json('{"n": 2, "edges": [[0, 2]]}')
    with pytest.raises(FormatError):
        parse_edgelist_json('{"n": 2, "edges": [[0, true]]}')
    with pytest.raises(FormatError):
        parse_edgelist_json('{"n": 3, "edges": [], "m": 1}', strict=True)
    with pytest.raises(FormatError):
        parse_edgelist_json("[1, 2]")


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=12))
def test_dimacs_and_json_round_trip(g):
    assert parse_dimacs(emit_dimacs(g, comment="x\ny"), strict=True) == g
    assert parse_edgelist_json(emit_edgelist_json(g, name="g"), strict=True) == g


def test_sniff_and_read(tmp_path):
    assert sniff_format("{}") == "json"
    assert sniff_format("p edge 1 0") == "dimacs"
    assert sniff_format("Bw") == "graph6"
    assert sniff_format("Bw", "x.json") == "json"
    p = tmp_path / "k4.col"
    p.write_text(emit_dimacs(complete(4)))
    assert read_graph(str(p)).graph == complete(4)
    p = tmp_path / "named.json"
    p.write_text(emit_edgelist_json(cycle(5), name="five"))
    doc = read_graph(str(p))
    assert doc.name == "five" and doc.graph == cycle(5) and doc.source == str(p)
    p = tmp_path / "two.g6"
    p.write_text("Bw\nBw\n")
    with pytest.raises(FormatError):
        read_graph(str(p))
