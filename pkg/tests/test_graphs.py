"""Graph container, graph6 codec, isomorphism, and enumeration."""

import pytest
from hypothesis import given, strategies as st

from corbel.errors import InputError, ParseError
from corbel.graphs import (
    canonical_form,
    connected_components,
    disjoint_union,
    enumerate_connected_graphs,
    from_edge_list,
    from_graph6,
    from_json_dict,
    g_v_operation,
    graph_from_name,
    induced_subgraph,
    is_connected,
    is_cut_vertex,
    is_free_vertex,
    is_isomorphic,
    ncomponents,
    to_graph6,
    to_json_dict,
)


def test_named_graphs():
    p4 = graph_from_name("p4")
    assert p4.n == 4
    assert sorted(tuple(sorted(e)) for e in p4.edges()) == [(1, 2), (2, 3), (3, 4)]
    k3 = graph_from_name("k3")
    assert k3.num_edges() == 3
    c5 = graph_from_name("c5")
    assert c5.num_edges() == 5
    assert graph_from_name("3k1").num_edges() == 0
    assert graph_from_name("3k1").n == 3


@pytest.mark.parametrize("bad", ["q7", "k0", "c2", "", "p"])
def test_named_graph_rejects(bad):
    with pytest.raises(InputError):
        graph_from_name(bad)


@pytest.mark.parametrize(
    "name,code",
    [("p3", "Bg"), ("p4", "Ch"), ("k3", "Bw"), ("k4", "C~"), ("k5", "D~{")],
)
def test_graph6_known_codes(name, code):
    g = graph_from_name(name)
    assert to_graph6(g) == code
    back = from_graph6(code)
    assert back.n == g.n
    assert set(back.edges()) == set(g.edges())


def test_graph6_rejects_malformed():
    with pytest.raises(ParseError):
        from_graph6("")
    # valid 3-vertex header followed by junk
    with pytest.raises(ParseError) as exc:
        from_graph6("Bg!")
    assert exc.value.offset is not None
    with pytest.raises(ParseError):
        from_graph6("\x7f\x7f")


@given(
    st.integers(min_value=1, max_value=8).flatmap(
        lambda n: st.tuples(
            st.just(n),
            st.sets(
                st.tuples(
                    st.integers(1, n), st.integers(1, n)
                ).filter(lambda e: e[0] != e[1]),
                max_size=12,
            ),
        )
    )
)
def test_graph6_round_trip(data):
    n, edges = data
    g = from_edge_list(n, edges)
    back = from_graph6(to_graph6(g))
    assert back.n == g.n
    assert set(back.edges()) == set(g.edges())


def test_json_round_trip():
    g = graph_from_name("c4")
    assert from_json_dict(to_json_dict(g)) == g


def test_components_and_connectivity():
    g = disjoint_union(graph_from_name("p3"), graph_from_name("k2"))
    assert g.n == 5
    comps = connected_components(g)
    assert sorted(sorted(c) for c in comps) == [[1, 2, 3], [4, 5]]
    assert ncomponents(g) == 2
    assert not is_connected(g)
    assert is_connected(graph_from_name("c5"))


def test_cut_vertices():
    p4 = graph_from_name("p4")
    assert not is_cut_vertex(p4, 1)
    assert is_cut_vertex(p4, 2)
    assert not any(is_cut_vertex(graph_from_name("c4"), v) for v in range(1, 5))


def test_free_vertices():
    p3 = graph_from_name("p3")
    assert is_free_vertex(p3, 1)
    assert not is_free_vertex(p3, 2)
    # completing the middle vertex of P3 yields a triangle
    g = g_v_operation(p3, 2)
    assert set(g.edges()) == set(graph_from_name("k3").edges())
    assert is_free_vertex(g, 2)


def test_induced_subgraph_relabels():
    p4 = graph_from_name("p4")
    sub, vmap = induced_subgraph(p4, {2, 3, 4})
    assert sub.n == 3
    assert vmap == {2: 1, 3: 2, 4: 3}
    assert sorted(tuple(sorted(e)) for e in sub.edges()) == [(1, 2), (2, 3)]


def test_canonical_form_is_label_invariant():
    a = from_edge_list(4, [(1, 2), (2, 3), (3, 4)])
    b = from_edge_list(4, [(4, 2), (2, 1), (1, 3)])
    assert canonical_form(a) == canonical_form(b)
    assert is_isomorphic(a, b)
    assert not is_isomorphic(a, graph_from_name("c4"))


def test_connected_enumeration_counts():
    # 1, 1, 2, 6, 21 isomorphism classes of connected graphs on 1..5 vertices
    got = {}
    for g in enumerate_connected_graphs(5):
        got[g.n] = got.get(g.n, 0) + 1
    assert got == {1: 1, 2: 1, 3: 2, 4: 6, 5: 21}
    seen = [canonical_form(g) for g in enumerate_connected_graphs(4)]
    assert len(seen) == len(set(seen))
