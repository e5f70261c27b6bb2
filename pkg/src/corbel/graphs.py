"""Labeled simple graphs on vertices 1..n: construction, queries, enumeration.

Vertices are contiguous 1-based labels throughout.  Operations that delete
vertices relabel the result back onto 1..k and return the old-to-new label
map, so variable orders built on top of the labels stay well defined.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import CapError, InputError, ParseError

# Connected graphs up to isomorphism on 1..7 vertices.
CONNECTED_GRAPH_COUNTS = (1, 1, 2, 6, 21, 112, 853)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``adj[v]`` is the neighbor set of v (slot 0 unused)."""

    n: int
    adj: tuple[frozenset[int], ...]

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return v in self.adj[u]

    def edges(self) -> list[tuple[int, int]]:
        """Edge list as (u, v) pairs with u < v, sorted."""
        return [(u, v) for u in self.vertices() for v in sorted(self.adj[u]) if u < v]

    def num_edges(self) -> int:
        return sum(len(nbrs) for nbrs in self.adj[1:]) // 2

    def is_complete(self) -> bool:
        return self.num_edges() == self.n * (self.n - 1) // 2

    def _check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 1 <= v <= self.n):
            raise InputError(f"vertex {v!r} is not in 1..{self.n}")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def from_edge_list(n: int, edges) -> Graph:
    """Build a graph on 1..n from an iterable of (i, j) pairs."""
    if not (isinstance(n, int) and n >= 0):
        raise InputError(f"vertex count must be a nonnegative integer, got {n!r}")
    nbrs: list[set[int]] = [set() for _ in range(n + 1)]
    for e in edges:
        try:
            i, j = e
        except (TypeError, ValueError):
            raise InputError(f"edge {e!r} is not a pair") from None
        if not (isinstance(i, int) and isinstance(j, int)):
            raise InputError(f"edge {e!r} has non-integer endpoints")
        if not (1 <= i <= n and 1 <= j <= n):
            raise InputError(f"edge {e!r} leaves the vertex range 1..{n}")
        if i == j:
            raise InputError(f"loop at vertex {i} is not allowed")
        nbrs[i].add(j)
        nbrs[j].add(i)
    return Graph(n, tuple(frozenset(s) for s in nbrs))


def to_json_dict(g: Graph) -> dict:
    return {"n": g.n, "edges": [[u, v] for u, v in g.edges()]}


def from_json_dict(obj) -> Graph:
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise InputError("graph JSON must be an object with 'n' and 'edges' keys")
    return from_edge_list(obj["n"], obj["edges"])


# ---------------------------------------------------------------------------
# graph6 format

def from_graph6(text: str) -> Graph:
    """Decode a graph6 string (single trailing newline tolerated)."""
    data = text
    if data.endswith("\n"):
        data = data[:-1]
    if data.endswith("\r"):
        data = data[:-1]
    if not data:
        raise ParseError("empty graph6 input", offset=0)
    vals = []
    for pos, ch in enumerate(data):
        code = ord(ch) - 63
        if not 0 <= code <= 63:
            raise ParseError(f"character {ch!r} outside graph6 range", offset=pos)
        vals.append(code)
    if vals[0] < 63:
        n = vals[0]
        idx = 1
    elif len(vals) >= 2 and vals[1] < 63:
        if len(vals) < 4:
            raise ParseError("truncated graph6 size field", offset=len(data))
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        idx = 4
    else:
        if len(vals) < 8:
            raise ParseError("truncated graph6 size field", offset=len(data))
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        idx = 8
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(vals) - idx < nbytes:
        raise ParseError("truncated graph6 adjacency data", offset=len(data))
    if len(vals) - idx > nbytes:
        raise ParseError("trailing data after adjacency bits", offset=idx + nbytes)
    edges = []
    t = 0
    # column-major upper triangle, big-endian bits inside each 6-bit group
    for j in range(2, n + 1):
        for i in range(1, j):
            bit = (vals[idx + t // 6] >> (5 - t % 6)) & 1
            if bit:
                edges.append((i, j))
            t += 1
    # padding bits must be zero
    while t < 6 * nbytes:
        if (vals[idx + t // 6] >> (5 - t % 6)) & 1:
            raise ParseError("nonzero padding bit", offset=idx + t // 6)
        t += 1
    return from_edge_list(n, edges)


def to_graph6(g: Graph) -> str:
    """Encode as a graph6 string (n up to 258047)."""
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    elif n <= 258047:
        head = "~" + chr((n >> 12) + 63) + chr(((n >> 6) & 63) + 63) + chr((n & 63) + 63)
    else:
        raise CapError("graph6 writer supports at most 258047 vertices", size=n, cap=258047)
    bits = []
    for j in range(2, n + 1):
        for i in range(1, j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        body.append(chr(val + 63))
    return head + "".join(body)


# ---------------------------------------------------------------------------
# elementary operations

def induced_subgraph(g: Graph, keep) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on ``keep``, relabeled 1..|keep| order-preservingly.

    Returns the new graph and the old-to-new label map.
    """
    keep = sorted(set(keep))
    for v in keep:
        g._check_vertex(v)
    label = {old: new for new, old in enumerate(keep, start=1)}
    edges = [(label[u], label[v]) for u, v in g.edges() if u in label and v in label]
    return from_edge_list(len(keep), edges), label


def g_v_operation(g: Graph, v: int) -> Graph:
    """Complete the neighborhood of v, keeping all labels."""
    g._check_vertex(v)
    nbrs = sorted(g.neighbors(v))
    extra = [(a, b) for a, b in itertools.combinations(nbrs, 2)]
    return from_edge_list(g.n, g.edges() + extra)


def is_free_vertex(g: Graph, v: int) -> bool:
    """True when the neighborhood of v induces a clique."""
    g._check_vertex(v)
    nbrs = sorted(g.neighbors(v))
    return all(g.has_edge(a, b) for a, b in itertools.combinations(nbrs, 2))


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Vertex sets of the connected components, ordered by smallest member."""
    seen: set[int] = set()
    parts = []
    for start in g.vertices():
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        parts.append(frozenset(comp))
    return parts


def ncomponents(g: Graph) -> int:
    return len(connected_components(g))


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or ncomponents(g) == 1


def is_cut_vertex(g: Graph, v: int) -> bool:
    """True when deleting v increases the number of components."""
    g._check_vertex(v)
    sub, _ = induced_subgraph(g, set(g.vertices()) - {v})
    return ncomponents(sub) > ncomponents(g)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Disjoint union with h's labels shifted above g's."""
    edges = g.edges() + [(u + g.n, v + g.n) for u, v in h.edges()]
    return from_edge_list(g.n + h.n, edges)


# ---------------------------------------------------------------------------
# isomorphism and enumeration

def _edge_bit(a: int, b: int) -> int:
    # 1 <= a < b; column-major position of the pair
    return (b - 1) * (b - 2) // 2 + (a - 1)


def canonical_form(g: Graph) -> tuple[int, int]:
    """Isomorphism-invariant key: (n, minimal edge bitmask over relabelings).

    Relabelings are restricted to those listing vertices by descending degree,
    which is exhaustive within each degree class and sound because any
    isomorphism preserves degrees.  Intended for desk-scale graphs.
    """
    n = g.n
    if n == 0:
        return (0, 0)
    by_degree: dict[int, list[int]] = {}
    for v in g.vertices():
        by_degree.setdefault(g.degree(v), []).append(v)
    classes = [tuple(by_degree[d]) for d in sorted(by_degree, reverse=True)]
    edges = g.edges()
    best = None
    for parts in itertools.product(*(itertools.permutations(c) for c in classes)):
        label = {}
        nxt = 1
        for part in parts:
            for v in part:
                label[v] = nxt
                nxt += 1
        mask = 0
        for u, v in edges:
            a, b = label[u], label[v]
            if a > b:
                a, b = b, a
            mask |= 1 << _edge_bit(a, b)
        if best is None or mask < best:
            best = mask
    return (n, best)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges() != h.num_edges():
        return False
    return canonical_form(g) == canonical_form(h)


def enumerate_connected_graphs(max_n: int):
    """Yield one representative per isomorphism class of connected graphs.

    Covers all orders 1..max_n, smaller orders first; within an order the
    output follows the canonical-form sort, so the stream is deterministic.
    """
    if not (isinstance(max_n, int) and 1 <= max_n <= 7):
        raise InputError("supported range is 1 <= max_n <= 7")
    reps = [from_edge_list(1, [])]
    yield reps[0]
    for n in range(2, max_n + 1):
        seen: dict[tuple[int, int], Graph] = {}
        for base in reps:
            base_edges = base.edges()
            # every connected graph arises from a connected one by adding a
            # vertex with a nonempty neighborhood (delete a non-cut vertex)
            for mask in range(1, 1 << (n - 1)):
                edges = list(base_edges)
                for v in range(1, n):
                    if (mask >> (v - 1)) & 1:
                        edges.append((v, n))
                cand = from_edge_list(n, edges)
                key = canonical_form(cand)
                if key not in seen:
                    seen[key] = cand
        reps = [seen[k] for k in sorted(seen)]
        yield from reps


def graph_from_name(name: str) -> Graph:
    """Small named graphs: k<n>, p<n>, c<n>, and <m>k1 for m isolated vertices."""
    s = name.strip().lower()
    try:
        if s.endswith("k1") and len(s) > 2 and s[:-2].isdigit():
            return from_edge_list(int(s[:-2]), [])
        kind, num = s[0], s[1:]
        n = int(num)
        if n < 1:
            raise ValueError
    except (ValueError, IndexError):
        raise InputError(f"unknown graph name {name!r}") from None
    if kind == "k":
        return from_edge_list(n, itertools.combinations(range(1, n + 1), 2))
    if kind == "p":
        return from_edge_list(n, [(i, i + 1) for i in range(1, n)])
    if kind == "c":
        if n < 3:
            raise InputError(f"cycle needs at least 3 vertices, got {name!r}")
        return from_edge_list(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])
    raise InputError(f"unknown graph name {name!r}")
