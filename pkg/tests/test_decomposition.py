"""Cutsets, minimal primes, dimension, and the Cohen-Macaulay classifier."""

import pytest

from corbel.errors import CapError, InputError
from corbel.graphs import from_edge_list, graph_from_name
from corbel.groebner import initial_ideal
from corbel.betti import oracle_depth_reg, sr_dimension
from corbel.constructions import GenCoronaSpec, whisker
from corbel.decomposition import (
    classify_cm,
    decompose_at_vertex,
    dimension,
    enumerate_cutsets,
    is_unmixed,
    minimal_primes,
)


def cutset_sets(g):
    return sorted(sorted(c.vertices) for c in enumerate_cutsets(g))


def test_cutsets_small_graphs():
    assert cutset_sets(graph_from_name("p3")) == [[], [2]]
    assert cutset_sets(graph_from_name("p4")) == [[], [2], [3]]
    assert cutset_sets(graph_from_name("k3")) == [[]]
    assert cutset_sets(graph_from_name("c4")) == [[], [1, 3], [2, 4]]


def test_cutset_parts():
    cs = {frozenset(c.vertices): c for c in enumerate_cutsets(graph_from_name("p4"))}
    parts = cs[frozenset({2})].parts
    assert sorted(sorted(p) for p in parts) == [[1], [3, 4]]


def test_minimal_primes_p4():
    primes = minimal_primes(graph_from_name("p4"))
    assert [(sorted(p.cutset.vertices), p.dim) for p in primes] == [
        ([], 5),
        ([2], 5),
        ([3], 5),
    ]


def test_unmixedness():
    ok, _ = is_unmixed(graph_from_name("p4"))
    assert ok
    ok, witness = is_unmixed(graph_from_name("c4"))
    assert not ok
    assert sorted(witness.vertices) in ([1, 3], [2, 4])


def test_dimension_values():
    assert dimension(graph_from_name("p4")).value == 5
    # complete graphs: n + m - 1
    assert dimension(graph_from_name("k3"), m=3).value == 5
    assert dimension(graph_from_name("k5"), m=4).value == 8
    _, comp = whisker(graph_from_name("p3"))
    res = dimension(comp)
    assert res.value == 8
    assert sorted(res.witness.vertices) == [2]
    ok, _ = is_unmixed(comp)
    assert not ok


@pytest.mark.parametrize("name", ["p4", "k3", "c4"])
def test_dimension_matches_stanley_reisner(name):
    g = graph_from_name(name)
    assert dimension(g).value == sr_dimension(initial_ideal(g))


def test_dimension_matches_depth_iff_cm():
    # P4 is Cohen-Macaulay, C4 is not
    p4 = graph_from_name("p4")
    assert oracle_depth_reg(p4)[0] == dimension(p4).value
    c4 = graph_from_name("c4")
    assert oracle_depth_reg(c4)[0] == 4
    assert dimension(c4).value == 5


def test_cutset_cap():
    with pytest.raises(CapError) as exc:
        enumerate_cutsets(graph_from_name("p5"), cap=4)
    assert exc.value.size == 5
    assert exc.value.cap == 4


def test_decompose_at_vertex():
    t = decompose_at_vertex(graph_from_name("p3"), 2)
    assert sorted(tuple(sorted(e)) for e in t.completed.edges()) == [
        (1, 2),
        (1, 3),
        (2, 3),
    ]
    assert t.deleted.n == 2
    assert t.deleted_map == {1: 1, 3: 2}
    assert t.completed_deleted.n == 2
    assert t.completed_deleted.num_edges() == 1


def test_classify_cm_whisker_of_path_is_not_cm():
    spec, comp = whisker(graph_from_name("p3"))
    verdict = classify_cm(spec, cm_of_h=(True, True, True))
    assert not verdict.is_cm
    assert "not complete" in verdict.reason
    # oracle agrees: depth 7, dimension 8
    assert oracle_depth_reg(comp)[0] == 7
    assert dimension(comp).value == 8


def test_classify_cm_whisker_of_k2_is_cm():
    spec, comp = whisker(graph_from_name("k2"))
    verdict = classify_cm(spec, cm_of_h=(True, True))
    assert verdict.is_cm
    assert oracle_depth_reg(comp)[0] == dimension(comp).value == 5


def test_classify_cm_uncovered_base_vertex():
    spec = GenCoronaSpec(graph_from_name("k3"), (1,), (graph_from_name("p3"),))
    verdict = classify_cm(spec, cm_of_h=(True,))
    assert verdict.is_cm
    assert "uncovered" in verdict.reason


def test_classify_cm_fully_covered_needs_complete_attachment():
    spec = GenCoronaSpec(
        graph_from_name("k2"), (1, 2),
        (graph_from_name("p3"), graph_from_name("p3")),
    )
    assert not classify_cm(spec, cm_of_h=(True, True)).is_cm
    spec2 = GenCoronaSpec(
        graph_from_name("k2"), (1, 2),
        (graph_from_name("p3"), graph_from_name("k2")),
    )
    assert classify_cm(spec2, cm_of_h=(True, True)).is_cm


def test_classify_cm_cone_routing():
    k1 = graph_from_name("k1")
    two = classify_cm(GenCoronaSpec(k1, (1,), (graph_from_name("2k1"),)), cm_of_h=(True,))
    assert two.is_cm
    three = classify_cm(GenCoronaSpec(k1, (1,), (graph_from_name("3k1"),)), cm_of_h=(True,))
    assert not three.is_cm
    with pytest.raises(InputError):
        classify_cm(GenCoronaSpec(k1, (1,), (graph_from_name("p3"),)), cm_of_h=(True,))


def test_classify_cm_rejects():
    spec, _ = whisker(graph_from_name("k2"))
    with pytest.raises(InputError):
        classify_cm(spec, cm_of_h=(True,))  # wrong arity
    with pytest.raises(InputError):
        classify_cm(spec, m=1, cm_of_h=(True, True))
    disconnected = GenCoronaSpec(graph_from_name("2k1"), (), ())
    with pytest.raises(InputError):
        classify_cm(disconnected, cm_of_h=())


def test_m_greater_than_two_only_complete():
    spec = GenCoronaSpec(graph_from_name("k2"), (1,), (graph_from_name("k1"),))
    verdict = classify_cm(spec, m=3, cm_of_h=(True,))
    assert not verdict.is_cm
    k3_as_corona = GenCoronaSpec(graph_from_name("k3"), (), ())
    assert classify_cm(k3_as_corona, m=3, cm_of_h=()).is_cm
