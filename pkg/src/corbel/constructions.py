"""Whisker, generalized corona, and cone constructions, plus class membership.

A generalized corona hangs an attachment graph H_i on each vertex v_i of a
chosen base-vertex subset S: the composite keeps the base on labels 1..p and
places each attachment block contiguously after it, joining v_i to every
vertex of its block.  The classes of interest require S to cover every
non-free base vertex.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .errors import InputError
from .graphs import (
    Graph,
    connected_components,
    from_edge_list,
    g_v_operation,
    induced_subgraph,
    is_free_vertex,
)


@dataclass(frozen=True)
class GenCoronaSpec:
    """Base graph, attachment vertices, and one attachment graph per vertex.

    ``attach_set[i]`` receives ``attachments[i]``; the composite labels the
    base 1..p and then each attachment block in list order.
    """

    base: Graph
    attach_set: tuple[int, ...]
    attachments: tuple[Graph, ...]

    def __post_init__(self):
        if len(self.attach_set) != len(self.attachments):
            raise InputError("attach_set and attachments must have equal length")
        if len(set(self.attach_set)) != len(self.attach_set):
            raise InputError("attach_set has repeated vertices")
        for v in self.attach_set:
            self.base._check_vertex(v)
        for h in self.attachments:
            if h.n < 1:
                raise InputError("attachments must be non-empty graphs")

    def total_vertices(self) -> int:
        return self.base.n + sum(h.n for h in self.attachments)

    def block_offset(self, i: int) -> int:
        """Label offset of attachment block i: its vertices are offset+1..offset+|H_i|."""
        return self.base.n + sum(h.n for h in self.attachments[:i])

    def composite(self) -> Graph:
        return _composite_of(self)

    def to_json_dict(self) -> dict:
        from .graphs import to_json_dict

        return {
            "base": to_json_dict(self.base),
            "S": list(self.attach_set),
            "H": [to_json_dict(h) for h in self.attachments],
        }


def spec_from_json_dict(obj) -> GenCoronaSpec:
    from .graphs import from_json_dict

    if not isinstance(obj, dict) or not {"base", "S", "H"} <= set(obj):
        raise InputError("spec JSON must be an object with 'base', 'S', and 'H' keys")
    return GenCoronaSpec(
        from_json_dict(obj["base"]),
        tuple(obj["S"]),
        tuple(from_json_dict(h) for h in obj["H"]),
    )


@functools.lru_cache(maxsize=None)
def _composite_of(spec: GenCoronaSpec) -> Graph:
    edges = list(spec.base.edges())
    for i, h in enumerate(spec.attachments):
        off = spec.block_offset(i)
        v = spec.attach_set[i]
        edges.extend((a + off, b + off) for a, b in h.edges())
        edges.extend((v, w + off) for w in h.vertices())
    return from_edge_list(spec.total_vertices(), edges)


def non_free_vertices(g: Graph) -> frozenset[int]:
    """Vertices whose neighborhood is not a clique."""
    return frozenset(v for v in g.vertices() if not is_free_vertex(g, v))


def whisker(g: Graph) -> tuple[GenCoronaSpec, Graph]:
    """Attach one pendant vertex to every vertex; vertex i gets pendant n+i."""
    if g.n < 1:
        raise InputError("whisker needs a non-empty graph")
    return whisker_on_set(g, g.vertices())


def whisker_on_set(g: Graph, s) -> tuple[GenCoronaSpec, Graph]:
    """Attach one pendant vertex to each vertex of s (sorted for determinism)."""
    s = tuple(sorted(set(s)))
    k1 = from_edge_list(1, [])
    spec = GenCoronaSpec(g, s, tuple(k1 for _ in s))
    return spec, spec.composite()


def generalized_corona(g: Graph, s, attachments) -> Graph:
    """Composite of the corona of g over s with the given attachment graphs."""
    spec = GenCoronaSpec(g, tuple(s), tuple(attachments))
    return spec.composite()


def cone(h: Graph) -> Graph:
    """Join a fresh apex (label 1) to every vertex of h (relabeled 2..n+1)."""
    spec = GenCoronaSpec(from_edge_list(1, []), (1,), (h,))
    return spec.composite()


@dataclass(frozen=True)
class ClassMembership:
    """Membership flags; ``in_gprime`` is None when no attachment depths are given.

    ``witness`` is a non-free base vertex outside the attachment set when the
    covering condition fails, else None.
    """

    in_g1: bool
    in_g2: bool
    in_gprime: bool | None
    witness: int | None

    def to_json_dict(self) -> dict:
        return {
            "in_G1": self.in_g1,
            "in_G2": self.in_g2,
            "in_Gprime": self.in_gprime,
            "witness": self.witness,
        }


def class_membership(spec: GenCoronaSpec, depth_of_h=None, m: int = 2) -> ClassMembership:
    """Decide membership of the composite in the whisker-type classes.

    in_G2: every non-free base vertex carries an attachment.
    in_G1: additionally every attachment is a single vertex.
    in_Gprime: additionally each attachment attains the maximal depth
    m + |V(H_i)| - 1.  With depth_of_h supplied that is checked directly;
    without it, complete attachments are certified (they attain the maximum
    exactly) and anything else yields None, meaning not decidable here.
    """
    if m < 2:
        raise InputError("m must be at least 2")
    uncovered = sorted(non_free_vertices(spec.base) - set(spec.attach_set))
    witness = uncovered[0] if uncovered else None
    in_g2 = witness is None
    in_g1 = in_g2 and all(h.n == 1 and h.num_edges() == 0 for h in spec.attachments)
    in_gprime: bool | None = None
    if depth_of_h is not None:
        depths = tuple(depth_of_h)
        if len(depths) != len(spec.attachments):
            raise InputError("depth_of_h must list one depth per attachment")
        in_gprime = in_g2 and all(
            d == m + h.n - 1 for d, h in zip(depths, spec.attachments)
        )
    elif all(h.is_complete() for h in spec.attachments):
        in_gprime = in_g2
    return ClassMembership(in_g1, in_g2, in_gprime, witness)


@dataclass(frozen=True)
class VertexOpTriple:
    """Specs produced by completing or deleting an attachment vertex v.

    ``detached`` with ``remainder`` describes D - v as a disjoint union;
    ``completed`` describes D_v; ``completed_minus`` describes D_v - v.
    """

    detached: Graph
    remainder: GenCoronaSpec
    completed: GenCoronaSpec
    completed_minus: GenCoronaSpec


def vertex_op_triple(spec: GenCoronaSpec, v: int) -> VertexOpTriple:
    """Close the composite class under the vertex operations at v.

    v must be an attachment vertex and the spec must satisfy the covering
    condition; each returned spec satisfies it as well.
    """
    if v not in spec.attach_set:
        raise InputError(f"vertex {v} is not in the attachment set")
    if not class_membership(spec).in_g2:
        raise InputError("spec does not cover all non-free base vertices")
    i = spec.attach_set.index(v)
    rest_s = tuple(u for u in spec.attach_set if u != v)
    rest_h = spec.attachments[:i] + spec.attachments[i + 1:]

    base_minus, bmap = induced_subgraph(spec.base, set(spec.base.vertices()) - {v})
    remainder = GenCoronaSpec(base_minus, tuple(bmap[u] for u in rest_s), rest_h)

    d = spec.composite()
    dv = g_v_operation(d, v)
    off = spec.block_offset(i)
    block = range(off + 1, off + 1 + spec.attachments[i].n)
    keep = list(spec.base.vertices()) + list(block)
    # base vertices sort first, so they keep their labels in the new base
    base2, _ = induced_subgraph(dv, keep)
    completed = GenCoronaSpec(base2, rest_s, rest_h)

    base3, m3 = induced_subgraph(base2, set(base2.vertices()) - {v})
    completed_minus = GenCoronaSpec(base3, tuple(m3[u] for u in rest_s), rest_h)

    return VertexOpTriple(spec.attachments[i], remainder, completed, completed_minus)


def whisker_matching_labeling(g: Graph) -> Graph:
    """Whisker of g relabeled so one base edge's pendants get the lowest labels.

    The lexicographically least base edge is placed on vertices (3, 4) with
    pendants 1 and 2; remaining base vertices take 5..p+2 with pendants
    p+3..2p.  This ordering exposes a large induced matching among the lex
    initial ideal's generator supports.
    """
    if g.num_edges() == 0:
        raise InputError("needs a graph with at least one edge")
    a, b = g.edges()[0]
    others = [v for v in g.vertices() if v not in (a, b)]
    relabel = {a: 3, b: 4}
    for k, v in enumerate(others):
        relabel[v] = 5 + k
    p = g.n
    edges = [(relabel[u], relabel[v]) for u, v in g.edges()]
    # pendants: base 3 -> 1, base 4 -> 2, base 4+l -> p+2+l
    edges.append((1, 3))
    edges.append((2, 4))
    for l in range(1, p - 1):
        edges.append((4 + l, p + 2 + l))
    return from_edge_list(2 * p, edges)


def attachment_components(h: Graph) -> int:
    return len(connected_components(h))
