from __future__ import annotations

import pytest

from twoeig.cotree import Cotree, build_cotree
from twoeig.dsl import ExpressionSyntaxError, parse_block_dsl

from conftest import complete_graph, cycle_graph, disjoint_union, path_graph


def test_join_of_cocliques_is_c4():
    g, tree = parse_block_dsl("(K1+K1)*(K1+K1)")
    assert sorted(g.edges()) == [(0, 2), (0, 3), (1, 2), (1, 3)]
    assert tree.kind == "join"
    assert all(ch.kind == "union" for ch in tree.children)


def test_single_clique():
    g, tree = parse_block_dsl("K3")
    assert g == complete_graph(3)
    assert tree.kind == "join"
    assert len(tree.children) == 3


def test_union_with_apex():
    g, _ = parse_block_dsl("(K2+K3)*K1")
    assert g.n == 6
    apex = 5
    assert all(g.has_edge(apex, v) for v in range(5))
    assert not g.has_edge(0, 2)  # K2 part vs K3 part
    assert g.has_edge(0, 1) and g.has_edge(2, 3)


def test_plus_binds_tighter_than_star():
    unparenthesized, _ = parse_block_dsl("K2+K3*K1")
    parenthesized, _ = parse_block_dsl("(K2+K3)*K1")
    assert unparenthesized == parenthesized


def test_vertex_order_is_leaf_order():
    g, _ = parse_block_dsl("K1+K2")
    assert sorted(g.edges()) == [(1, 2)]


def test_k0_vanishes():
    assert parse_block_dsl("K0")[0].n == 0
    assert parse_block_dsl("K0")[1] is None
    g, tree = parse_block_dsl("K0+K3")
    assert g == complete_graph(3)
    assert tree.kind == "join"
    assert parse_block_dsl("K0*K5")[0] == complete_graph(5)
    assert parse_block_dsl("K0+K0")[0].n == 0


def test_whitespace_insensitive():
    a, _ = parse_block_dsl(" ( K1 + K2 ) * K3 ")
    b, _ = parse_block_dsl("(K1+K2)*K3")
    assert a == b


def test_nested_flattening_matches_recognizer():
    for expr in ["(K1+K1)*(K1+K1)", "(K1+K2)*K1", "K2*K2", "(K1+K1)*(K2+K2)*K3"]:
        g, tree = parse_block_dsl(expr)
        rebuilt = build_cotree(g)
        assert isinstance(rebuilt, Cotree)
        assert rebuilt == tree


@pytest.mark.parametrize(
    "bad,offset",
    [
        ("", 0),
        ("   ", 0),
        ("K", 1),
        ("(K1", 3),
        ("K1)", 2),
        ("K1**K2", 3),
        ("Q3", 0),
        ("K1+", 3),
        ("()", 1),
        ("K2 K3", 3),
    ],
)
def test_syntax_errors_carry_offsets(bad, offset):
    with pytest.raises(ExpressionSyntaxError) as err:
        parse_block_dsl(bad)
    assert err.value.offset == offset


def test_big_disjoint_union():
    g, tree = parse_block_dsl("K2+K2+K2")
    assert g == disjoint_union(complete_graph(2), complete_graph(2), complete_graph(2))
    assert tree.kind == "union"
    assert len(tree.children) == 3


def test_path_is_not_expressible_sanity():
    # every DSL output is a cograph: the recognizer must accept it
    for expr in ["K4", "(K2+K2)*(K1+K3)", "((K1+K1)*K2)+K3"]:
        g, _ = parse_block_dsl(expr)
        assert not isinstance(build_cotree(g), tuple)
    assert isinstance(build_cotree(path_graph(4)), tuple)
    assert isinstance(build_cotree(cycle_graph(5)), tuple)
