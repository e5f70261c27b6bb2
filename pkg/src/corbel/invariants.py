"""Graph invariants feeding the depth, regularity, and dimension formulas.

Everything here is exact and exhaustive; caps keep the searches at desk
scale.  All counts are additive over disjoint unions where that makes sense
(components, isolated vertices, diameters, free vertex counts, induced
matchings).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import NamedTuple

from .errors import CapError, InputError
from .graphs import Graph, connected_components, induced_subgraph, is_free_vertex


def components(g: Graph) -> list[frozenset[int]]:
    """Connected components as vertex sets, ordered by smallest member."""
    return connected_components(g)


def _component_diameter(g: Graph, comp: frozenset[int]) -> int:
    # BFS from every vertex of the component
    best = 0
    for src in comp:
        dist = {src: 0}
        frontier = [src]
        while frontier:
            nxt = []
            for u in frontier:
                for w in g.adj[u]:
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        nxt.append(w)
            frontier = nxt
        best = max(best, max(dist.values()))
    return best


def isolated_count(g: Graph) -> int:
    return sum(1 for v in g.vertices() if not g.adj[v])


def d_invariant(g: Graph) -> int:
    """Number of isolated vertices plus the sum of component diameters."""
    return isolated_count(g) + sum(_component_diameter(g, c) for c in components(g))


def free_vertex_counts(g: Graph) -> tuple[int, int, frozenset[int], frozenset[int]]:
    """(f, iv, free set, non-free set); f + iv = n."""
    free = frozenset(v for v in g.vertices() if is_free_vertex(g, v))
    nonfree = frozenset(g.vertices()) - free
    return len(free), len(nonfree), free, nonfree


def _edge_conflicts(g: Graph, edges: list[tuple[int, int]]) -> list[int]:
    # conflict[i] bitmask: edges sharing a vertex with edge i or joined to it
    m = len(edges)
    conflict = [0] * m
    for i, (a, b) in enumerate(edges):
        near = {a, b} | set(g.adj[a]) | set(g.adj[b])
        for j in range(m):
            if i == j:
                continue
            c, d = edges[j]
            if c in near or d in near:
                conflict[i] |= 1 << j
    return conflict


def induced_matching_number(g: Graph, cap: int = 16) -> tuple[int, tuple[tuple[int, int], ...]]:
    """Largest set of edges pairwise disjoint and mutually non-adjacent.

    Exact search; ties between maximum witnesses break lexicographically.
    """
    if g.n > cap:
        raise CapError("induced matching search capped", size=g.n, cap=cap)
    edges = g.edges()
    m = len(edges)
    if m == 0:
        return 0, ()
    conflict = _edge_conflicts(g, edges)
    best_size = 0
    best: tuple[int, ...] = ()

    def dfs(avail: int, chosen: tuple[int, ...]):
        nonlocal best_size, best
        if len(chosen) > best_size:
            best_size = len(chosen)
            best = chosen
        if not avail:
            return
        if len(chosen) + bin(avail).count("1") <= best_size:
            return
        i = (avail & -avail).bit_length() - 1
        rest = avail & ~(1 << i)
        dfs(rest & ~conflict[i], chosen + (i,))
        dfs(rest, chosen)

    dfs((1 << m) - 1, ())
    return best_size, tuple(edges[i] for i in best)


def is_gap_free(g: Graph) -> bool:
    """True when the induced matching number is exactly one."""
    if g.num_edges() == 0:
        raise InputError("gap-freeness is undefined for edgeless graphs")
    return induced_matching_number(g)[0] == 1


class KappaResult(NamedTuple):
    value: int
    complete_convention: bool


def vertex_connectivity(g: Graph) -> KappaResult:
    """Minimum vertex cut size; complete graphs report n-1 with a flag."""
    if g.n == 0:
        raise InputError("vertex connectivity needs a non-empty graph")
    if len(connected_components(g)) != 1:
        raise InputError("vertex connectivity is defined here for connected graphs only")
    if g.is_complete():
        return KappaResult(g.n - 1, True)
    verts = list(g.vertices())
    for k in range(1, g.n - 1):
        for cut in itertools.combinations(verts, k):
            sub, _ = induced_subgraph(g, set(verts) - set(cut))
            if len(connected_components(sub)) > 1:
                return KappaResult(k, False)
    raise RuntimeError("unreachable: non-complete connected graph has a cut")


@dataclass(frozen=True)
class InvariantReport:
    """Bundle of the invariants the closed-form bounds consume."""

    n: int
    c: int
    isolated: int
    diam_sum: int
    d: int
    f: int
    iv: int
    im: int
    gap_free: bool
    kappa: int | None
    kappa_complete_convention: bool

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "c": self.c,
            "isolated": self.isolated,
            "diam_sum": self.diam_sum,
            "d": self.d,
            "f": self.f,
            "iv": self.iv,
            "im": self.im,
            "gap_free": self.gap_free,
            "kappa": self.kappa,
            "kappa_complete_convention": self.kappa_complete_convention,
        }


def invariant_report(g: Graph) -> InvariantReport:
    comps = components(g)
    iso = isolated_count(g)
    diam_sum = sum(_component_diameter(g, c) for c in comps)
    f, iv, _, _ = free_vertex_counts(g)
    im, _ = induced_matching_number(g)
    gap_free = g.num_edges() > 0 and im == 1
    if g.n > 0 and len(comps) == 1:
        kappa = vertex_connectivity(g)
        kval, kflag = kappa.value, kappa.complete_convention
    else:
        kval, kflag = None, False
    return InvariantReport(
        n=g.n,
        c=len(comps),
        isolated=iso,
        diam_sum=diam_sum,
        d=iso + diam_sum,
        f=f,
        iv=iv,
        im=im,
        gap_free=gap_free,
        kappa=kval,
        kappa_complete_convention=kflag,
    )


def hypergraph_induced_matching_bound(ideal) -> tuple[int, tuple[frozenset[int], ...]]:
    """Best value of sum(|e_i| - 1) over induced matchings of generator supports.

    An induced matching here is a pairwise disjoint set of supports such that
    no other generator support lies inside its union.  Requires the generator
    set to be minimal under inclusion.
    """
    gens = list(ideal.generators)
    for a, b in itertools.combinations(gens, 2):
        if a <= b or b <= a:
            raise InputError("generator supports must be inclusion-minimal")
    if not gens:
        return 0, ()
    order = sorted(range(len(gens)), key=lambda i: sorted(gens[i]))
    gens = [gens[i] for i in order]
    weights = [len(e) - 1 for e in gens]
    m = len(gens)
    best_val = 0
    best: tuple[int, ...] = ()

    def valid_add(union: frozenset[int], chosen: set[int], k: int) -> bool:
        u = union | gens[k]
        for j in range(m):
            if j != k and j not in chosen and gens[j] <= u:
                return False
        return True

    def dfs(start: int, union: frozenset[int], chosen: tuple[int, ...], val: int):
        nonlocal best_val, best
        if val > best_val:
            best_val = val
            best = chosen
        remaining = sum(weights[k] for k in range(start, m) if not (gens[k] & union))
        if val + remaining <= best_val:
            return
        for k in range(start, m):
            if gens[k] & union:
                continue
            if valid_add(union, set(chosen), k):
                dfs(k + 1, union | gens[k], chosen + (k,), val + weights[k])

    dfs(0, frozenset(), (), 0)
    return best_val, tuple(gens[i] for i in best)
