"""Homological oracle: lcm-lattice Betti numbers, depth, reg, dimension."""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from corbel.errors import CapError
from corbel.graphs import disjoint_union, from_edge_list, graph_from_name
from corbel.groebner import MonomialIdealSF, initial_ideal
from corbel.betti import (
    BETTI_VAR_CAP,
    betti_table,
    lcm_lattice,
    oracle_depth_reg,
    sr_dimension,
)

DIAMOND = from_edge_list(4, [(1, 2), (1, 3), (1, 4), (2, 3), (3, 4)])


def test_triangle_table():
    tab = betti_table(initial_ideal(graph_from_name("k3")))
    assert dict(tab.entries) == {(0, 0): 1, (1, 2): 3, (2, 3): 2}
    assert tab.pd == 2
    assert tab.depth == 4
    assert tab.reg == 1


def test_two_generator_chain():
    # x1*y2 and x2*y3 intersect in a single variable pair
    ideal = MonomialIdealSF(6, (frozenset({1, 5}), frozenset({2, 6})))
    tab = betti_table(ideal)
    assert dict(tab.entries) == {(0, 0): 1, (1, 2): 2, (2, 4): 1}
    assert (tab.depth, tab.reg) == (4, 2)


def test_k4_linear_resolution():
    tab = betti_table(initial_ideal(graph_from_name("k4")))
    assert dict(tab.entries) == {(0, 0): 1, (1, 2): 6, (2, 3): 8, (3, 4): 3}
    assert (tab.depth, tab.reg) == (5, 1)


def test_diamond_table():
    tab = betti_table(initial_ideal(DIAMOND))
    assert dict(tab.entries) == {
        (0, 0): 1,
        (1, 2): 5,
        (1, 3): 1,
        (2, 3): 5,
        (2, 4): 4,
        (3, 4): 1,
        (3, 5): 4,
        (4, 6): 1,
    }
    assert (tab.depth, tab.reg) == (4, 2)


def test_lattice_members_triangle():
    lat = lcm_lattice(initial_ideal(graph_from_name("k3")))
    assert sorted(sorted(m) for m in lat) == [
        [1, 2, 5, 6],
        [1, 2, 6],
        [1, 5],
        [1, 5, 6],
        [1, 6],
        [2, 6],
    ]


def test_zero_ideal_depth_is_var_count():
    assert oracle_depth_reg(graph_from_name("2k1")) == (4, 0)
    assert oracle_depth_reg(graph_from_name("k1")) == (2, 0)


@pytest.mark.parametrize(
    "name,expected",
    [
        ("p3", (4, 2)),
        ("p4", (5, 3)),
        ("p5", (6, 4)),
        ("k3", (4, 1)),
        ("k4", (5, 1)),
        ("c4", (4, 2)),
        ("c5", (5, 3)),
    ],
)
def test_oracle_named_graphs(name, expected):
    assert oracle_depth_reg(graph_from_name(name)) == expected


def test_path_and_cycle_families():
    for n in range(2, 7):
        assert oracle_depth_reg(graph_from_name(f"p{n}")) == (n + 1, n - 1)
    for n in range(4, 7):
        assert oracle_depth_reg(graph_from_name(f"c{n}")) == (n, n - 2)


def test_disjoint_union_adds():
    g = disjoint_union(graph_from_name("k1"), graph_from_name("k2"))
    assert oracle_depth_reg(g) == (5, 1)
    h = disjoint_union(graph_from_name("k2"), graph_from_name("k2"))
    assert oracle_depth_reg(h) == (6, 2)


def test_sr_dimension():
    assert sr_dimension(initial_ideal(graph_from_name("p4"))) == 5
    assert sr_dimension(initial_ideal(graph_from_name("k5"))) == 6
    assert sr_dimension(MonomialIdealSF(4, ())) == 4


def test_var_cap():
    with pytest.raises(CapError):
        betti_table(MonomialIdealSF(BETTI_VAR_CAP + 1, (frozenset({1, 2}),)))


def _relabel_ideal(ideal, perm):
    gens = [frozenset(perm[v - 1] for v in s) for s in ideal.generators]
    return MonomialIdealSF(ideal.n_vars, tuple(gens))


@settings(max_examples=25, deadline=None)
@given(st.permutations(range(1, 7)))
def test_table_is_label_invariant(perm):
    ideal = MonomialIdealSF(
        6, (frozenset({1, 5}), frozenset({2, 6}), frozenset({3, 4}))
    )
    shuffled = _relabel_ideal(ideal, list(perm))
    a = betti_table(ideal)
    b = betti_table(shuffled)
    assert dict(a.entries) == dict(b.entries)


@settings(max_examples=15, deadline=None)
@given(st.permutations(range(1, 6)))
def test_oracle_is_graph_label_invariant(perm):
    base = graph_from_name("c5")
    relabeled = from_edge_list(
        5, [(perm[u - 1], perm[v - 1]) for u, v in base.edges()]
    )
    assert oracle_depth_reg(relabeled) == oracle_depth_reg(base)
