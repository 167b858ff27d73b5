"""Prehole machinery: the explicit verifier, bounded small-prehole search,
flow-based vertex-disjoint paths, the ring crossover scan, and the
triangle-pair scan used on the hole-free branch.

Soundness posture: every scan re-verifies its assembled cycle with
``verify_prehole`` before returning it.  A cycle that was assembled from
found paths but fails verification signals a violated structural
assumption, so the scans raise InternalConsistencyError instead of
continuing silently; the acceptance suite asserts this never fires.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .graphs import (
    Bipartition,
    CycleWitness,
    Graph,
    GraphInputError,
    VertexPath,
    canonical_cycle,
    enumerate_triangles,
    induced_subgraph,
    is_cycle,
    make_graph,
    mask_of,
)
from .splitting import RingDecomposition, validate_ring


class InternalConsistencyError(RuntimeError):
    """An assembled cycle failed prehole verification."""


@dataclass(frozen=True)
class CrossoverQuad:
    """A 4-cycle (a, c, b, d) across one ring gap: a, b in D_{i+1} and
    c, d in D_i with all four cross edges present."""

    ring_index: int
    a: int
    b: int
    c: int
    d: int


@dataclass(frozen=True)
class TrianglePairContext:
    """The U-sets of one triangle-pair probe: U3 = U1 cap U2 and
    U4 = T1 cup T2 cup U3."""

    t1: tuple[int, int, int]
    t2: tuple[int, int, int]
    u1: frozenset[int]
    u2: frozenset[int]
    u3: frozenset[int]
    u4: frozenset[int]


def verify_prehole(g: Graph, cycle: Sequence[int]) -> Optional[CycleWitness]:
    """The witness for an even cycle of length >= 6 with no odd chord, or
    None.  The witness carries the alternating bipartition of the cycle."""
    vs = tuple(cycle)
    if not is_cycle(g, vs):
        raise GraphInputError("input is not a cycle of the graph")
    k = len(vs)
    if k < 6 or k % 2 == 1:
        return None
    pos = {v: i for i, v in enumerate(vs)}
    for i, v in enumerate(vs):
        for w in g.adj[v]:
            j = pos.get(w)
            if j is None:
                continue
            d = abs(i - j)
            d = min(d, k - d)
            if d != 1 and d % 2 == 1:
                return None
    canon = canonical_cycle(vs)
    return CycleWitness(
        vertices=canon,
        kind="prehole",
        bipartition=Bipartition(
            L=frozenset(canon[0::2]),
            R=frozenset(canon[1::2]),
        ),
    )


def find_small_prehole(g: Graph, max_len: int = 12) -> Optional[CycleWitness]:
    """Depth-first enumeration of cycles of even length 6..max_len in
    canonical form (minimum vertex first, neighbours ascending), returning
    the first cycle that verifies as a prehole.

    Paths carrying a chord of odd path-distance are pruned: in any even
    completion such a chord keeps odd cyclic distance, so no prehole can
    extend the path.  Absence therefore proves there is no prehole of
    length <= max_len.
    """
    if max_len < 6 or max_len % 2 == 1:
        raise GraphInputError("max_len must be an even integer >= 6")
    bits = g.bits
    for root in range(g.n):
        # all other cycle vertices exceed the root
        above = ~((1 << (root + 1)) - 1)
        stack = [(root, 1 << root, (root,))]
        while stack:
            u, used, path = stack.pop()
            t = len(path)
            for w in sorted(_bits_above(bits[u] & above & ~used)):
                # odd-path-distance chords kill every even completion
                pruned = False
                for i in range(1, t - 1):
                    if bits[w] >> path[i] & 1 and (t - i) % 2 == 1:
                        pruned = True
                        break
                if pruned:
                    continue
                new_path = path + (w,)
                if (
                    t + 1 >= 6
                    and (t + 1) % 2 == 0
                    and bits[w] >> root & 1
                    and new_path[1] < new_path[-1]
                ):
                    witness = verify_prehole(g, new_path)
                    if witness is not None:
                        return witness
                if t + 1 < max_len:
                    stack.append((w, used | 1 << w, new_path))
    return None


def _bits_above(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


# ---------------------------------------------------------------------------
# Vertex-disjoint paths by unit-capacity max flow with node splitting
# ---------------------------------------------------------------------------


def two_disjoint_paths(
    g: Graph,
    sources: Sequence[int],
    sinks: Sequence[int],
    forbidden: frozenset[int] | set[int] = frozenset(),
) -> Optional[tuple[VertexPath, VertexPath]]:
    """Two vertex-disjoint paths from {s1, s2} to {t1, t2} avoiding the
    forbidden vertices, or None when the max flow is below two.  The
    pairing is whatever the flow realizes (Menger).  Shortest augmenting
    paths with ascending neighbour order keep the result deterministic."""
    src = sorted(set(sources))
    snk = sorted(set(sinks))
    forb = set(forbidden)
    if len(src) != 2 or len(snk) != 2:
        raise GraphInputError("need exactly two sources and two sinks")
    if (set(src) & set(snk)) or (set(src) & forb) or (set(snk) & forb):
        raise GraphInputError("sources, sinks and forbidden must be disjoint")
    n = g.n
    S, T = 2 * n, 2 * n + 1

    def v_in(v):
        return 2 * v

    def v_out(v):
        return 2 * v + 1

    capacity: dict[tuple[int, int], int] = {}
    orig: dict[tuple[int, int], int] = {}
    succ: dict[int, list[int]] = {i: [] for i in range(2 * n + 2)}

    def add(a, b):
        if (a, b) not in capacity:
            capacity[(a, b)] = 0
            succ[a].append(b)
        if (b, a) not in capacity:
            capacity[(b, a)] = 0
            succ[b].append(a)
        capacity[(a, b)] += 1
        orig[(a, b)] = capacity[(a, b)]

    for v in range(n):
        if v in forb:
            continue
        add(v_in(v), v_out(v))
    for u, v in g.edges:
        if u in forb or v in forb:
            continue
        add(v_out(u), v_in(v))
        add(v_out(v), v_in(u))
    for s in src:
        add(S, v_in(s))
    for t in snk:
        add(v_out(t), T)

    flow = 0
    for _ in range(2):
        parent = {S: -1}
        frontier = [S]
        while frontier and T not in parent:
            nxt = []
            for x in frontier:
                for y in succ[x]:
                    if y not in parent and capacity.get((x, y), 0) > 0:
                        parent[y] = x
                        nxt.append(y)
            frontier = nxt
        if T not in parent:
            break
        node = T
        while node != S:
            p = parent[node]
            capacity[(p, node)] -= 1
            capacity[(node, p)] += 1
            node = p
        flow += 1
    if flow < 2:
        return None

    def used(a, b):
        return orig.get((a, b), 0) == 1 and capacity[(a, b)] == 0

    paths = []
    for s in src:
        path = [s]
        cur = s
        for _ in range(n + 1):
            if used(v_out(cur), T):
                break
            step = None
            for y in succ[v_out(cur)]:
                if y != T and y % 2 == 0 and used(v_out(cur), y):
                    step = y // 2
                    break
            if step is None:
                raise AssertionError("flow decomposition lost its trail")
            path.append(step)
            cur = step
        paths.append(VertexPath(tuple(path)))
    if not all(p.vertices[-1] in snk for p in paths):
        raise AssertionError("flow decomposition did not reach the sinks")
    return paths[0], paths[1]


# ---------------------------------------------------------------------------
# Scans
# ---------------------------------------------------------------------------


def crossover_quads(g: Graph, rd: RingDecomposition):
    """All crossover quadruples, lexicographically by (i, a, b, c, d)."""
    k = rd.k
    out = []
    for i in range(k):
        below = sorted(rd.blocks[i])
        above = sorted(rd.blocks[(i + 1) % k])
        for ai in range(len(above)):
            a = above[ai]
            for bi in range(ai + 1, len(above)):
                b = above[bi]
                for ci in range(len(below)):
                    c = below[ci]
                    if not (g.has_edge(a, c) and g.has_edge(b, c)):
                        continue
                    for di in range(ci + 1, len(below)):
                        d = below[di]
                        if g.has_edge(a, d) and g.has_edge(b, d):
                            out.append(CrossoverQuad(i, a, b, c, d))
    return out


def crossover_scan(g: Graph, rd: RingDecomposition) -> Optional[CycleWitness]:
    """Scan every ring gap for a crossover quadruple joined by two disjoint
    paths through the rest of the annulus; any hit assembles a winding
    cycle which must verify as a prehole."""
    if not validate_ring(g, rd):
        raise GraphInputError("ring decomposition does not validate")
    k = rd.k
    barred: dict[int, Graph] = {}
    for quad in crossover_quads(g, rd):
        i = quad.ring_index
        if i not in barred:
            gap_a = rd.blocks[i]
            gap_b = rd.blocks[(i + 1) % k]
            kept = [
                (u, v) for u, v in g.edges
                if not ((u in gap_a and v in gap_b) or (u in gap_b and v in gap_a))
            ]
            barred[i] = make_graph(g.n, kept)
        found = two_disjoint_paths(
            barred[i], (quad.a, quad.b), (quad.c, quad.d))
        if found is None:
            continue
        p1, p2 = found
        if p1.vertices[0] != quad.a:
            p1, p2 = p2, p1
        cycle = p1.vertices + p2.vertices
        witness = verify_prehole(g, cycle)
        if witness is None:
            raise InternalConsistencyError(
                f"crossover assembly failed verification: {cycle}")
        return witness
    return None


def triangle_pair_contexts(g: Graph):
    """Vertex-disjoint triangle pairs with their U-sets, lexicographically."""
    triangles = enumerate_triangles(g)
    out = []
    for x in range(len(triangles)):
        t1 = triangles[x]
        for y in range(x + 1, len(triangles)):
            t2 = triangles[y]
            if set(t1) & set(t2):
                continue
            u1 = _component_containing(g, set(t2), t1[0])
            u2 = _component_containing(g, set(t1), t2[0])
            if u1 is None or u2 is None:
                continue
            u3 = u1 & u2
            u4 = frozenset(t1) | frozenset(t2) | u3
            out.append(TrianglePairContext(
                t1=t1, t2=t2, u1=u1, u2=u2, u3=frozenset(u3), u4=u4))
    return out


def _component_containing(g: Graph, removed: set[int], anchor: int):
    seen = {anchor}
    stack = [anchor]
    while stack:
        u = stack.pop()
        for w in g.adj[u]:
            if w not in removed and w not in seen:
                seen.add(w)
                stack.append(w)
    return frozenset(seen)


def triangle_pair_scan(g: Graph, min_u4: int = 12) -> Optional[CycleWitness]:
    """The hole-free branch: for every vertex-disjoint triangle pair whose
    component intersection U3 induces a bipartite graph and whose U4
    exceeds the small-prehole bound, try every apex choice and look for two
    disjoint base-to-base paths inside G[U4] avoiding the apexes.  Any hit
    assembles a cycle through both triangles which must verify."""
    from .graphs import is_bipartite  # local import avoids a cycle at import time

    for ctx in triangle_pair_contexts(g):
        sub_u3, _ = induced_subgraph(g, ctx.u3)
        if is_bipartite(sub_u3) is None:
            continue
        if len(ctx.u4) <= min_u4:
            continue
        sub, index = induced_subgraph(g, ctx.u4)
        back = sorted(ctx.u4)
        for v1 in ctx.t1:
            base1 = [index[x] for x in ctx.t1 if x != v1]
            for v2 in ctx.t2:
                base2 = [index[x] for x in ctx.t2 if x != v2]
                found = two_disjoint_paths(
                    sub, base1, base2,
                    forbidden={index[v1], index[v2]})
                if found is None:
                    continue
                p1, p2 = found
                if p1.vertices[0] != base1[0]:
                    p1, p2 = p2, p1
                local = (index[v1],) + p1.vertices + (index[v2],) \
                    + tuple(reversed(p2.vertices))
                cycle = tuple(back[i] for i in local)
                witness = verify_prehole(g, cycle)
                if witness is None:
                    raise InternalConsistencyError(
                        f"triangle-pair assembly failed verification: {cycle}")
                return witness
    return None
