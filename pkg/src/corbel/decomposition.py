"""Cutsets, minimal primes, dimension, unmixedness, and the CM classification.

A vertex set T is a cutset when every one of its members v is a cut vertex
of the graph left after deleting the other members; the empty set always
qualifies.  Each cutset T names a minimal prime whose dimension is
(n - |T|) + (m - 1) * c(T): every component left after deleting T
contributes its vertex count plus m - 1, the deleted block contributes
nothing.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import NamedTuple

from .constructions import GenCoronaSpec, class_membership
from .errors import CapError, InputError
from .graphs import (
    Graph,
    connected_components,
    g_v_operation,
    induced_subgraph,
    is_connected,
    is_free_vertex,
)

CUTSET_CAP = 12


@dataclass(frozen=True)
class Cutset:
    """A cutset with the components it leaves behind."""

    vertices: frozenset[int]
    parts: tuple[frozenset[int], ...]

    @property
    def c(self) -> int:
        return len(self.parts)

    def to_json_dict(self) -> dict:
        return {
            "T": sorted(self.vertices),
            "components": [sorted(p) for p in self.parts],
        }


def _components_within(g: Graph, vs) -> list[frozenset[int]]:
    vs = set(vs)
    seen: set[int] = set()
    parts = []
    for s in sorted(vs):
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if w in vs and w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        parts.append(frozenset(comp))
    return parts


def enumerate_cutsets(g: Graph, cap: int = CUTSET_CAP) -> list[Cutset]:
    """All cutsets, sorted by size then lexicographically."""
    if g.n > cap:
        raise CapError("cutset enumeration capped", size=g.n, cap=cap)
    allv = set(g.vertices())
    out = []
    for size in range(g.n + 1):
        for t in itertools.combinations(sorted(allv), size):
            tset = set(t)
            parts = _components_within(g, allv - tset)
            ok = True
            for v in t:
                if len(parts) <= len(_components_within(g, allv - (tset - {v}))):
                    ok = False
                    break
            if ok:
                out.append(Cutset(frozenset(t), tuple(parts)))
    return out


@dataclass(frozen=True)
class MinimalPrime:
    """Minimal prime attached to a cutset, with its dimension."""

    cutset: Cutset
    m: int
    dim: int

    def to_json_dict(self) -> dict:
        d = self.cutset.to_json_dict()
        d["dim"] = self.dim
        return d


def minimal_primes(g: Graph, m: int = 2, cap: int = CUTSET_CAP) -> list[MinimalPrime]:
    if m < 2:
        raise InputError("m must be at least 2")
    return [
        MinimalPrime(cs, m, (g.n - len(cs.vertices)) + (m - 1) * cs.c)
        for cs in enumerate_cutsets(g, cap=cap)
    ]


class DimensionResult(NamedTuple):
    value: int
    witness: Cutset


def dimension(g: Graph, m: int = 2, cap: int = CUTSET_CAP) -> DimensionResult:
    """Krull dimension of the quotient: the largest minimal-prime dimension.

    The witness is the first maximizing cutset in (size, lex) order.
    """
    primes = minimal_primes(g, m, cap=cap)
    best = max(p.dim for p in primes)
    for p in primes:
        if p.dim == best:
            return DimensionResult(best, p.cutset)
    raise RuntimeError("unreachable")


def is_unmixed(g: Graph, m: int = 2, cap: int = CUTSET_CAP) -> tuple[bool, Cutset | None]:
    """Whether all minimal primes share one dimension; witness on failure.

    At m = 2 this uses the component-count criterion c(T) = |T| + 1 directly;
    for larger m it compares prime dimensions.
    """
    if not is_connected(g) or g.n == 0:
        raise InputError("unmixedness check needs a connected graph")
    if m < 2:
        raise InputError("m must be at least 2")
    cutsets = enumerate_cutsets(g, cap=cap)
    if m == 2:
        for cs in cutsets:
            if cs.c != len(cs.vertices) + 1:
                return False, cs
        return True, None
    dims = [(g.n - len(cs.vertices)) + (m - 1) * cs.c for cs in cutsets]
    for cs, d in zip(cutsets, dims):
        if d != dims[0]:
            return False, cs
    return True, None


@dataclass(frozen=True)
class DecompositionTriple:
    """The three graphs behind the vertex decomposition at v.

    ``completed`` keeps all labels; the two deletions are relabeled onto
    1..n-1 and carry their old-to-new maps.
    """

    completed: Graph
    deleted: Graph
    deleted_map: dict[int, int]
    completed_deleted: Graph
    completed_deleted_map: dict[int, int]


def decompose_at_vertex(g: Graph, v: int) -> DecompositionTriple:
    """(G_v, G - v, G_v - v) for a non-free vertex v."""
    if is_free_vertex(g, v):
        raise InputError(f"vertex {v} is free; the decomposition needs a non-free vertex")
    gv = g_v_operation(g, v)
    rest = set(g.vertices()) - {v}
    minus, mmap = induced_subgraph(g, rest)
    gv_minus, gvmap = induced_subgraph(gv, rest)
    return DecompositionTriple(gv, minus, mmap, gv_minus, gvmap)


class CmVerdict(NamedTuple):
    is_cm: bool
    reason: str


def classify_cm(spec: GenCoronaSpec, m: int = 2, cm_of_h=()) -> CmVerdict:
    """Cohen-Macaulay classification of a covered corona composite.

    ``cm_of_h`` supplies one boolean per attachment: whether that
    attachment's own edge binomial quotient is Cohen-Macaulay.  The verdict
    reason names the first violated clause.  The base-is-a-single-vertex case
    is routed through the cone results; a cone over a connected non-complete
    graph is outside the classification and raises.
    """
    if m < 2:
        raise InputError("m must be at least 2")
    cm_flags = tuple(bool(x) for x in cm_of_h)
    if len(cm_flags) != len(spec.attachments):
        raise InputError("cm_of_h must list one verdict per attachment")
    d = spec.composite()
    if not is_connected(d) or d.n == 0:
        raise InputError("classification needs a connected composite")
    if not class_membership(spec).in_g2:
        raise InputError("attachment set does not cover all non-free base vertices")
    if d.is_complete():
        return CmVerdict(True, "complete composite")
    if m > 2:
        return CmVerdict(False, "for m > 2 only complete composites qualify")

    base = spec.base
    if base.num_edges() > 0:
        if not base.is_complete():
            return CmVerdict(False, "base graph is not complete")
        for idx, h in enumerate(spec.attachments):
            if not is_connected(h):
                return CmVerdict(False, f"attachment {idx + 1} is disconnected")
        for idx, flag in enumerate(cm_flags):
            if not flag:
                return CmVerdict(False, f"attachment {idx + 1} is not Cohen-Macaulay")
        if len(spec.attach_set) < base.n:
            return CmVerdict(True, "complete base, good attachments, uncovered base vertex")
        if any(h.is_complete() for h in spec.attachments):
            return CmVerdict(True, "complete base, good attachments, complete attachment")
        return CmVerdict(False, "every base vertex is covered and no attachment is complete")

    # edgeless base: only the single-apex cone is classified
    if base.n == 1 and len(spec.attachments) == 1:
        ncomp = len(connected_components(spec.attachments[0]))
        if ncomp == 2:
            return CmVerdict(cm_flags[0], "cone over two components follows the attachment")
        if ncomp >= 3:
            return CmVerdict(False, "cone over three or more components is not unmixed")
        raise InputError(
            "cone over a connected non-complete graph is outside the implemented classification"
        )
    raise InputError("classification needs a base with at least one edge")
