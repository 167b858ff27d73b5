"""Annular ring decomposition of a flawless, triangle-free graph around a
short odd hole of length >= 7.

The constructor is a small constraint search rather than a transcription of
the monotone-representation surgery: hole vertex i seeds block D_i, any
vertex with two hole neighbours is forced into the block between them, a
vertex with one hole neighbour picks one of the two adjacent blocks, and
every edge must join blocks at circular distance exactly one (which also
makes blocks independent sets).  All consistent assignments are enumerated
(ambiguous vertices take the lower block first) and the first one whose
blocks validate, chain-graph conditions included, is returned.  Absence
therefore means no valid ring exists for this anchor, which is exactly the
reject condition of the long-hole branch.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graphs import (
    CycleWitness,
    Graph,
    GraphInputError,
    bipartition_from_left,
    closed_neighbourhood,
    induced_subgraph,
)
from .holes import verify_hole
from .monotone import is_chain_graph, recognize_monotone
from .graphs import Bipartition


@dataclass(frozen=True)
class RingDecomposition:
    """Circular blocks D_0..D_{k-1}; block i contains anchor hole vertex i;
    k is odd and equals the anchor length."""

    blocks: tuple[frozenset[int], ...]
    anchor_hole: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.blocks)


def build_ring(g: Graph, anchor: CycleWitness) -> Optional[RingDecomposition]:
    """A validated ring decomposition anchored on the given short odd hole,
    or None when no consistent assignment passes validation.  The caller
    guarantees g is connected, triangle-free and flawless."""
    hole = anchor.vertices
    k = len(hole)
    if k < 7 or k % 2 == 0 or not verify_hole(g, anchor):
        raise GraphInputError("ring anchor must be an odd hole of length >= 7")
    pos = {v: i for i, v in enumerate(hole)}
    n = g.n
    block = [-1] * n
    for v, i in pos.items():
        block[v] = i
    options: dict[int, list[int]] = {}
    for v in range(n):
        if v in pos:
            continue
        allowed = None
        for w in g.adj[v]:
            if w in pos:
                p = pos[w]
                cand = {(p - 1) % k, (p + 1) % k}
                allowed = cand if allowed is None else allowed & cand
        if allowed is None or not allowed:
            # not dominated by the hole, or conflicting hole neighbours:
            # no ring can place v
            return None
        options[v] = sorted(allowed)

    off_edges = [
        (u, v) for u, v in g.edges if u not in pos and v not in pos
    ]

    def consistent(u: int, v: int) -> bool:
        d = abs(block[u] - block[v])
        return min(d, k - d) == 1

    ambiguous = []
    for v in sorted(options):
        if len(options[v]) == 1:
            block[v] = options[v][0]
        else:
            ambiguous.append(v)

    for u, v in off_edges:
        if block[u] >= 0 and block[v] >= 0 and not consistent(u, v):
            return None

    adj_off = {v: [] for v in ambiguous}
    for u, v in off_edges:
        if u in adj_off:
            adj_off[u].append(v)
        if v in adj_off:
            adj_off[v].append(u)

    def assign(idx: int) -> Optional[RingDecomposition]:
        if idx == len(ambiguous):
            blocks = [set() for _ in range(k)]
            for v in range(n):
                blocks[block[v]].add(v)
            rd = RingDecomposition(
                blocks=tuple(frozenset(b) for b in blocks),
                anchor_hole=hole,
            )
            return rd if validate_ring(g, rd) else None
        v = ambiguous[idx]
        for b in options[v]:
            block[v] = b
            if all(block[w] < 0 or consistent(v, w) for w in adj_off[v]):
                result = assign(idx + 1)
                if result is not None:
                    return result
            block[v] = -1
        return None

    return assign(0)


def validate_ring(g: Graph, rd: RingDecomposition) -> bool:
    """Direct check of the ring invariants: blocks partition V into
    independent sets seeded by the anchor hole, every edge runs between
    circularly consecutive blocks, and each consecutive pair induces a
    chain graph."""
    k = rd.k
    hole = rd.anchor_hole
    if k != len(hole) or k % 2 == 0:
        return False
    if not verify_hole(g, CycleWitness(vertices=hole, kind="hole")):
        return False
    seen: set[int] = set()
    for b in rd.blocks:
        if b & seen:
            return False
        seen |= b
    if seen != set(range(g.n)):
        return False
    which = {}
    for i, b in enumerate(rd.blocks):
        for v in b:
            which[v] = i
    for i, v in enumerate(hole):
        if which[v] != i:
            return False
    for u, v in g.edges:
        d = abs(which[u] - which[v])
        if min(d, k - d) != 1:
            return False
    for i in range(k):
        a = rd.blocks[i]
        b = rd.blocks[(i + 1) % k]
        sub, index = induced_subgraph(g, a | b)
        parts = Bipartition(
            L=frozenset(index[v] for v in a),
            R=frozenset(index[v] for v in b),
        )
        if not is_chain_graph(sub, parts):
            return False
    return True


def check_gv_gw_monotone(g: Graph, anchor: CycleWitness):
    """Algorithm gate for the long-hole branch: with v the first anchor
    vertex and w the one at cyclic distance 3 (so dist(v, w) >= 3 by
    shortness), both G - N[v] and G - N[w] must be monotone.

    Returns (both_monotone, v, w, failed_role) with failed_role in
    {None, 'v', 'w'}.
    """
    hole = anchor.vertices
    if len(hole) < 7:
        raise GraphInputError("v/w choice needs a hole of length >= 7")
    v, w = hole[0], hole[3]
    everything = set(range(g.n))
    for vertex, role in ((v, "v"), (w, "w")):
        keep = everything - set(closed_neighbourhood(g, vertex))
        sub, _ = induced_subgraph(g, keep)
        if recognize_monotone(sub) is None:
            return False, v, w, role
    return True, v, w, None
