"""Exact Betti tables of squarefree monomial ideals, and the homological oracle.

Graded Betti numbers of R/I come from reduced simplicial homology of
restrictions of the Stanley-Reisner complex, summed over the lcm lattice
(restrictions outside the lattice are cones and contribute nothing).  All
homology is computed over the rationals by exact integer elimination; no
floating point anywhere.  Characteristic zero is baked in.

Depth is read off as number-of-variables minus projective dimension.  For a
graph the oracle works on the lex initial ideal of its edge binomial ideal:
the initial ideal is squarefree, so depth and regularity of the two quotients
agree.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from math import gcd

from .errors import CapError
from .graphs import Graph
from .groebner import GROEBNER_CAP, MonomialIdealSF, initial_ideal

BETTI_VAR_CAP = 20
LATTICE_CAP = 50000


def lcm_lattice(ideal: MonomialIdealSF, cap: int = LATTICE_CAP) -> list[frozenset[int]]:
    """All joins of nonempty generator subsets, deduplicated and sorted."""
    lattice: set[frozenset[int]] = set()
    for g in ideal.generators:
        fresh = {g | u for u in lattice}
        fresh.add(g)
        lattice |= fresh
        if len(lattice) > cap:
            raise CapError("lcm lattice too large", size=len(lattice), cap=cap)
    return sorted(lattice, key=lambda s: (len(s), sorted(s)))


# ---------------------------------------------------------------------------
# reduced homology of a restricted Stanley-Reisner complex
#
# A restriction is described by its vertex count s and the local generator
# bitmasks; faces are the subsets containing no generator mask.  The e-vector
# e[k] = rank of reduced homology in degree k-1 multiplies under joins, and a
# restriction splits as a join over connected clusters of generators, so each
# cluster is computed once and cached.

_cluster_cache: dict[tuple[int, frozenset[int]], tuple[int, ...]] = {}


def _matrix_rank(columns: list[dict[int, int]]) -> int:
    """Rank over the rationals via integer column elimination."""
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for col in columns:
        col = dict(col)
        while col:
            low = max(col)
            piv = pivots.get(low)
            if piv is None:
                g = 0
                for x in col.values():
                    g = gcd(g, x)
                if g > 1:
                    col = {r: x // g for r, x in col.items()}
                pivots[low] = col
                rank += 1
                break
            a, b = piv[low], col[low]
            new = {r: a * x for r, x in col.items()}
            for r, x in piv.items():
                y = new.get(r, 0) - b * x
                if y:
                    new[r] = y
                else:
                    new.pop(r, None)
            col = new
    return rank


def _faces_by_level(s: int, gen_masks: tuple[int, ...]) -> list[list[int]]:
    gens_by_v = [[] for _ in range(s)]
    for gm in gen_masks:
        for v in range(s):
            if gm >> v & 1:
                gens_by_v[v].append(gm)
    levels = [[0]]
    while True:
        prev = levels[-1]
        nxt = []
        for fmask in prev:
            top = fmask.bit_length()
            for v in range(top, s):
                cand = fmask | (1 << v)
                ok = True
                for gm in gens_by_v[v]:
                    if gm & cand == gm:
                        ok = False
                        break
                if ok:
                    nxt.append(cand)
        if not nxt:
            return levels
        levels.append(nxt)


def _collapse(face_masks: set[int], s: int) -> set[int]:
    """Remove free face pairs until none remain; homotopy type is preserved.

    A face is free when exactly one face properly contains it (then the
    containing face is one vertex bigger and maximal).  Each removal deletes
    the pair, so homology of the survivors matches the original.
    """
    alive = set(face_masks)
    count = dict.fromkeys(alive, 0)
    for f in alive:
        # each face contributes one coface to every one-smaller subface,
        # and subfaces are guaranteed present by closure
        m = f
        while m:
            bit = m & -m
            m ^= bit
            count[f ^ bit] += 1
    queue = deque(sorted(f for f, c in count.items() if c == 1))
    while queue:
        f = queue.popleft()
        if f not in alive or count[f] != 1:
            continue
        g = None
        for v in range(s):
            bit = 1 << v
            if not f & bit and (f | bit) in alive:
                g = f | bit
                break
        alive.discard(f)
        alive.discard(g)
        for parent in (f, g):
            m = parent
            while m:
                bit = m & -m
                m ^= bit
                sub = parent ^ bit
                if sub in alive:
                    count[sub] -= 1
                    if count[sub] == 1:
                        queue.append(sub)
    return alive


def _cluster_e_vector(s: int, gen_masks: frozenset[int]) -> tuple[int, ...]:
    """e[k] = dim of reduced homology in degree k-1 for one generator cluster."""
    key = (s, gen_masks)
    hit = _cluster_cache.get(key)
    if hit is not None:
        return hit
    full_levels = _faces_by_level(s, tuple(gen_masks))
    elen = len(full_levels)
    core = _collapse({m for lv in full_levels for m in lv}, s)
    levels: list[list[int]] = []
    for k in range(elen):
        members = sorted(m for m in full_levels[k] if m in core)
        if not members:
            break
        levels.append(members)
    index_of = [{m: i for i, m in enumerate(lv)} for lv in levels]
    ranks = [0] * (len(levels) + 1)
    for k in range(1, len(levels)):
        rows = index_of[k - 1]
        cols = []
        for fmask in levels[k]:
            col = {}
            sign = 1
            for v in range(s):
                if fmask >> v & 1:
                    col[rows[fmask & ~(1 << v)]] = sign
                    sign = -sign
            cols.append(col)
        ranks[k] = _matrix_rank(cols)
    e = tuple(
        len(levels[k]) - ranks[k] - ranks[k + 1] if k < len(levels) else 0
        for k in range(elen)
    )
    _cluster_cache[key] = e
    return e


def _convolve(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return tuple(out)


def _restricted_e_vector(svars: tuple[int, ...], gens: list[frozenset[int]]) -> tuple[int, ...]:
    """Reduced homology ranks of the restriction to svars, as an e-vector."""
    vset = set(svars)
    covered = set()
    for g in gens:
        covered |= g
    if vset - covered:
        # an uncovered vertex is a cone apex (or the complex is a full simplex)
        return (0,)
    # split generators into clusters sharing no variables; the complex is
    # their join, and e-vectors multiply under join
    remaining = list(gens)
    e = (1,)
    while remaining:
        cluster = [remaining.pop()]
        verts = set(cluster[0])
        changed = True
        while changed:
            changed = False
            rest = []
            for g in remaining:
                if g & verts:
                    cluster.append(g)
                    verts |= g
                    changed = True
                else:
                    rest.append(g)
            remaining = rest
        order = sorted(verts)
        pos = {v: i for i, v in enumerate(order)}
        masks = frozenset(
            sum(1 << pos[v] for v in g) for g in cluster
        )
        ce = _cluster_e_vector(len(order), masks)
        if not any(ce):
            return (0,)
        e = _convolve(e, ce)
    return e


@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers of R/I, quotient convention (entry (0,0) is 1)."""

    n_vars: int
    entries: tuple[tuple[tuple[int, int], int], ...]
    pd: int
    depth: int
    reg: int

    def entry(self, i: int, j: int) -> int:
        for (a, b), val in self.entries:
            if (a, b) == (i, j):
                return val
        return 0

    def to_json_dict(self) -> dict:
        return {
            "entries": [[i, j, val] for (i, j), val in self.entries],
            "pd": self.pd,
            "depth": self.depth,
            "reg": self.reg,
            "vars": self.n_vars,
        }


def betti_table(ideal: MonomialIdealSF, lattice_cap: int = LATTICE_CAP) -> BettiTable:
    """Betti table of R/I over the lcm lattice; exact, characteristic zero."""
    if ideal.n_vars > BETTI_VAR_CAP:
        raise CapError("betti table capped", size=ideal.n_vars, cap=BETTI_VAR_CAP)
    entries: dict[tuple[int, int], int] = {(0, 0): 1}
    for sigma in lcm_lattice(ideal, cap=lattice_cap):
        inside = [g for g in ideal.generators if g <= sigma]
        e = _restricted_e_vector(tuple(sorted(sigma)), inside)
        j = len(sigma)
        for k, rank in enumerate(e):
            if rank:
                i = j - k
                if i < 1:
                    raise RuntimeError("internal consistency error: homological index")
                entries[(i, j)] = entries.get((i, j), 0) + rank
    pd = max(i for i, _ in entries)
    reg = max(j - i for i, j in entries)
    ordered = tuple(sorted(entries.items()))
    return BettiTable(ideal.n_vars, ordered, pd, ideal.n_vars - pd, reg)


def sr_dimension(ideal: MonomialIdealSF) -> int:
    """Krull dimension of R/I: the largest face of the Stanley-Reisner complex."""
    gens = sorted(ideal.generators, key=len)
    nv = ideal.n_vars
    best = 0

    def dfs(v: int, chosen: frozenset[int], size: int):
        nonlocal best
        if size > best:
            best = size
        if v > nv or size + (nv - v + 1) <= best:
            return
        cand = chosen | {v}
        if not any(g <= cand for g in gens):
            dfs(v + 1, cand, size + 1)
        dfs(v + 1, chosen, size)

    dfs(1, frozenset(), 0)
    return best


_oracle_cache: dict[tuple[int, frozenset[tuple[int, int]]], tuple[int, int]] = {}


def oracle_depth_reg(g: Graph, cap: int = GROEBNER_CAP) -> tuple[int, int]:
    """(depth, regularity) of the edge binomial quotient of g, via Hochster.

    Computed on the lex initial ideal in the 2n-variable ring; both values
    transfer to the binomial ideal itself because the initial ideal is
    squarefree.  Results are cached per labeled graph.
    """
    key = (g.n, frozenset(g.edges()))
    hit = _oracle_cache.get(key)
    if hit is not None:
        return hit
    table = betti_table(initial_ideal(g, cap=cap))
    result = (table.depth, table.reg)
    _oracle_cache[key] = result
    return result
