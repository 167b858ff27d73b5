"""Hole detection, odd-cycle-to-hole extraction, and the short-hole
reduction loop.

``find_hole`` returns a *shortest* hole, found by depth-first enumeration
of induced cycles: paths grow only while they stay induced (the new vertex
sees nothing of the path except its tip, with an edge back to the root
allowed as closure), every prefix of a hole has that shape, and a length
bound from the best cycle so far prunes the search.  Returning the shortest
hole matters downstream: the splitting stage is only sound when anchored on
a hole of minimum length.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .graphs import (
    CycleWitness,
    Graph,
    GraphInputError,
    bfs_distances,
    canonical_cycle,
    chord_list,
    cyclic_distance,
    has_triangle,
    is_cycle,
    mask_of,
    shortest_path,
)


def find_hole(g: Graph) -> Optional[CycleWitness]:
    """A shortest chordless cycle of length >= 5, or None if hole-free.
    Ties break lexicographically on the canonical cycle."""
    best = _hole_search(g.n, g.bits, g.adj, shortest=True)
    if best is None:
        return None
    return CycleWitness(vertices=best, kind="hole")


def has_hole(g: Graph) -> bool:
    return _hole_search(g.n, g.bits, g.adj, shortest=False) is not None


def _hole_search(n, bits, adj, shortest: bool):
    """DFS over induced paths rooted at each minimum vertex.  A neighbour of
    the tip may only join the path if it sees no interior path vertex; an
    edge back to the root closes an induced cycle.  With ``shortest`` the
    search keeps the (length, canonical form) minimum and prunes paths too
    long to tie it; otherwise the first closure of length >= 5 wins."""
    best: Optional[tuple[int, tuple[int, ...]]] = None
    for root in range(n):
        stack = [(root, 1 << root, (root,))]
        while stack:
            u, used, path = stack.pop()
            t = len(path)
            for w in adj[u]:
                if w <= root or used >> w & 1:
                    continue
                if t == 1:  # first step out of the root: no chords possible
                    stack.append((w, used | 1 << w, (root, w)))
                    continue
                conn = bits[w] & used
                closes = conn >> root & 1
                if conn & ~(1 << root) & ~(1 << u):
                    continue  # chord into the path interior
                if closes:
                    if t + 1 >= 5:
                        cand = canonical_cycle(path + (w,))
                        if not shortest:
                            return cand
                        key = (t + 1, cand)
                        if best is None or key < best:
                            best = key
                    continue  # the root edge would become a chord
                if best is not None and t + 2 > best[0]:
                    continue
                stack.append((w, used | 1 << w, path + (w,)))
    return None if best is None else best[1]


def verify_hole(g: Graph, w: CycleWitness) -> bool:
    vs = w.vertices
    return (
        len(vs) >= 5
        and is_cycle(g, vs)
        and not chord_list(g, vs)
    )


def odd_cycle_to_hole(g: Graph, cycle: Sequence[int]) -> CycleWitness:
    """Repeated chord-splitting into the smaller odd part until the cycle is
    a triangle or an odd hole.  Input must be an odd cycle of g."""
    vs = list(cycle)
    if len(vs) % 2 == 0 or not is_cycle(g, vs):
        raise GraphInputError("input is not an odd cycle of the graph")
    while True:
        chords = chord_list(g, vs)
        if not chords:
            if len(vs) == 3:
                return CycleWitness(vertices=canonical_cycle(vs), kind="triangle")
            return CycleWitness(vertices=canonical_cycle(vs), kind="hole")
        u, v = chords[0]
        pos = {x: i for i, x in enumerate(vs)}
        i, j = sorted((pos[u], pos[v]))
        arc1 = vs[i:j + 1]               # cycle of length j-i+1
        arc2 = vs[j:] + vs[:i + 1]       # the complementary cycle
        vs = arc1 if len(arc1) % 2 == 1 else arc2


def is_short_hole(g: Graph, w: CycleWitness) -> bool:
    """True iff graph distances between hole vertices all equal the cyclic
    distances along the hole."""
    vs = w.vertices
    if not verify_hole(g, w):
        raise GraphInputError("witness is not a hole of the graph")
    for i, v in enumerate(vs):
        dv = bfs_distances(g, v)
        for u in vs[i + 1:]:
            if dv[u] != cyclic_distance(vs, v, u):
                return False
    return True


def shorten_to_short_hole(g: Graph, w: CycleWitness) -> CycleWitness:
    """Reduce an odd hole of a triangle-free graph to a short odd hole.

    Loop: find a distance-violating pair (lexicographic first usable), take
    a shortest connecting path with no internal hole vertex, keep the odd
    one of the two resulting cycles, extract a hole from it, repeat.  The
    hole length strictly decreases, so this terminates.
    """
    if has_triangle(g):
        raise GraphInputError("short-hole reduction requires a triangle-free graph")
    vs = list(w.vertices)
    if len(vs) % 2 == 0 or not verify_hole(g, CycleWitness(tuple(vs), "hole")):
        raise GraphInputError("input is not an odd hole")
    full = (1 << g.n) - 1
    while True:
        pos = {x: i for i, x in enumerate(vs)}
        k = len(vs)
        improved = False
        for i in range(k):
            v = vs[i]
            dv = bfs_distances(g, v)
            for j in range(i + 1, k):
                u = vs[j]
                dc = min(j - i, k - (j - i))
                d = dv[u]
                if d is None or d >= dc:
                    continue
                allowed = (full & ~mask_of(vs)) | 1 << v | 1 << u
                path = shortest_path(g, v, u, allowed)
                if path is None or len(path) - 1 >= dc:
                    # every short connection runs through the hole; the
                    # violation re-appears at a sub-pair, so move on
                    continue
                dpath = len(path) - 1
                gap = j - i
                between = vs[i + 1:j]           # interior of the forward arc
                outside = vs[j + 1:] + vs[:i]   # interior of the backward arc
                cyc1 = path + between[::-1]     # length dpath + gap
                cyc2 = path + outside           # length dpath + (k - gap)
                odd = cyc1 if (dpath + gap) % 2 == 1 else cyc2
                hole = odd_cycle_to_hole(g, odd)
                if hole.kind != "hole":
                    raise AssertionError(
                        "triangle extracted from a triangle-free graph")
                vs = list(hole.vertices)
                improved = True
                break
            if improved:
                break
        if not improved:
            result = CycleWitness(vertices=canonical_cycle(vs), kind="hole")
            if not is_short_hole(g, result):
                raise AssertionError("shortening loop stalled on a non-short hole")
            return result
