import pytest
from hypothesis import given

from conftest import trigraphs
from twinwidth.decomp import StrongTreeDecomposition, TreeDecomposition
from twinwidth.errors import ParseError
from twinwidth.families import paley, random_tree_decomposition
from twinwidth.formats import (Annotations, format_gr, format_sequence, format_td, parse_annotations,
                               parse_gr, parse_sequence, parse_td)
from twinwidth.sequence import ContractionSequence
from twinwidth.trigraph import Trigraph


@given(trigraphs())
def test_graph_round_trip(g):
    assert parse_gr(format_gr(g, ["x"])) == g


def test_graph_with_gaps_keeps_order():
    g = Trigraph([2, 5, 9], black=[(2, 9)])
    text = format_gr(g)
    assert "c ids 2 5 9" in text
    assert parse_gr(text) == Trigraph.from_edges(3, [(0, 2)])


def test_red_lines():
    g = parse_gr("p tww 3 2\n1 2\nr 2 3\n")
    assert g.red_edges() == [(1, 2)] and g.black_edges() == [(0, 1)]


@pytest.mark.parametrize("text", [
    "1 2\n",
    "p tww 2 1\n1 1\n",
    "p tww 2 1\n1 3\n",
    "p tww 2 2\n1 2\n",
    "p foo 2 1\n1 2\n",
    "p tww 2 1\n1 x\n",
    "c only comments\n",
    "p tww 2 0\np tww 2 0\n",
])
def test_graph_parse_errors(text):
    with pytest.raises(ParseError):
        parse_gr(text)


def test_sequence_round_trip():
    seq = ContractionSequence([(0, 3), (1, 2), (0, 1)])
    assert parse_sequence(format_sequence(seq, ["w 1"]), 4).steps == seq.steps
    with pytest.raises(ParseError):
        parse_sequence("1 2 3\n")
    with pytest.raises(ParseError):
        parse_sequence("1 5\n", 4)


@pytest.mark.parametrize("seed", range(10))
def test_td_round_trip(seed):
    g, td = random_tree_decomposition(3, 2, 5, seed)
    ann = Annotations({1: [frozenset({0, 1})]}, [(0, 1)])
    back, back_ann = parse_td(format_td(td, len(g), ann))
    assert isinstance(back, TreeDecomposition)
    assert back.bags == td.bags and sorted(back.edges) == sorted(td.edges)
    assert back_ann == ann


def test_std_round_trip():
    g, std = paley(13)
    back, _ = parse_td(format_td(std, len(g)))
    assert isinstance(back, StrongTreeDecomposition) and back.bags == std.bags


@pytest.mark.parametrize("text", [
    "b 1 1 2\n",
    "s td 2 2 3\nb 1 1 2\n",
    "s td 1 2 3\nb 1 1 9\n",
    "s td 2 2 3\nb 1 1\nb 1 2\n",
    "s xx 1 1 1\n",
    "s td 1 1 1\nb 1 1\n1 2 3\n",
])
def test_td_parse_errors(text):
    with pytest.raises(ParseError):
        parse_td(text)


def test_sidecar():
    ann = parse_annotations("sep 2 1 3\nvirt 1 3\n")
    assert ann.all_separators(2) == [frozenset({0, 2})] and ann.virtual == [(0, 2)]
    assert ann.all_separators(5) is None
    with pytest.raises(ParseError):
        parse_annotations("b 1 2\n")
