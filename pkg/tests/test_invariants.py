"""Combinatorial invariants feeding the bound formulas."""

import dataclasses

import pytest
from hypothesis import given, strategies as st

from corbel.errors import InputError
from corbel.graphs import disjoint_union, from_edge_list, graph_from_name
from corbel.groebner import initial_ideal
from corbel.constructions import whisker_matching_labeling
from corbel.invariants import (
    free_vertex_counts,
    hypergraph_induced_matching_bound,
    induced_matching_number,
    invariant_report,
    is_gap_free,
    vertex_connectivity,
)


def test_p4_report():
    rep = invariant_report(graph_from_name("p4"))
    assert dataclasses.asdict(rep) == {
        "n": 4,
        "c": 1,
        "isolated": 0,
        "diam_sum": 3,
        "d": 3,
        "f": 2,
        "iv": 2,
        "im": 1,
        "gap_free": True,
        "kappa": 1,
        "kappa_complete_convention": False,
    }


def test_disconnected_report():
    g = disjoint_union(graph_from_name("p3"), graph_from_name("k1"))
    rep = invariant_report(g)
    assert rep.c == 2
    assert rep.isolated == 1
    assert rep.diam_sum == 2
    assert rep.d == 3
    assert rep.kappa is None


def test_free_vertex_counts():
    f, iv, free, nonfree = free_vertex_counts(graph_from_name("p4"))
    assert (f, iv) == (2, 2)
    assert free == frozenset({1, 4})
    assert nonfree == frozenset({2, 3})
    f, iv, _, _ = free_vertex_counts(graph_from_name("k3"))
    assert (f, iv) == (3, 0)
    f, iv, _, _ = free_vertex_counts(graph_from_name("c4"))
    assert (f, iv) == (0, 4)


def test_induced_matching():
    val, witness = induced_matching_number(graph_from_name("p5"))
    assert val == 2
    assert len(witness) == 2
    assert induced_matching_number(graph_from_name("c5"))[0] == 1
    assert induced_matching_number(graph_from_name("p4"))[0] == 1


def test_gap_free():
    assert is_gap_free(graph_from_name("k3"))
    assert not is_gap_free(graph_from_name("p5"))
    with pytest.raises(InputError):
        is_gap_free(graph_from_name("3k1"))


def test_vertex_connectivity():
    assert vertex_connectivity(graph_from_name("p4")) == (1, False)
    assert vertex_connectivity(graph_from_name("c4")) == (2, False)
    # complete graphs have no disconnecting set; value follows the n-1
    # convention and the flag records that the usual definition ran out
    assert vertex_connectivity(graph_from_name("k4")) == (3, True)


def test_hypergraph_bound_against_reg():
    # generator supports of in(J) for a path: bound meets the oracle reg
    p4 = graph_from_name("p4")
    bound, witness = hypergraph_induced_matching_bound(initial_ideal(p4))
    assert bound == 3
    assert witness


@pytest.mark.parametrize("name,target", [("k2", 3), ("p3", 4), ("k3", 4)])
def test_hypergraph_bound_under_labeling(name, target):
    # the relabeled whisker exposes a witness of size p+1
    lab = whisker_matching_labeling(graph_from_name(name))
    bound, _ = hypergraph_induced_matching_bound(initial_ideal(lab))
    assert bound >= target


@given(
    st.integers(min_value=2, max_value=6).flatmap(
        lambda n: st.tuples(
            st.just(n),
            st.sets(
                st.tuples(st.integers(1, n), st.integers(1, n)).filter(
                    lambda e: e[0] != e[1]
                ),
                min_size=1,
                max_size=8,
            ),
        )
    )
)
def test_gap_free_matches_im(data):
    n, edges = data
    g = from_edge_list(n, edges)
    rep = invariant_report(g)
    assert rep.gap_free == (rep.im == 1)
    assert rep.im >= 1
    assert rep.f + rep.iv == g.n
