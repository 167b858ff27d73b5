"""Exponential, definition-level ground truth.

``oracle_quasi`` sweeps every bipartition (vertex 0 pinned to L, since a cut
and its complement coincide) and applies a bipartite-class predicate to the
cut graph.  ``oracle_odd_chordal`` enumerates even cycles directly.  The
prehole decision runs a propagation-driven backtracking search over vertex
sides.  These carry the spec's burden of being *independent* of the
polynomial recognizer: none of them calls into it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .graphs import (
    Bipartition,
    Graph,
    SizeError,
    _bit_indices,
    bipartition_from_left,
)
from .monotone import is_monotone_bits

INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class BipartiteClassPredicate:
    """A named, total, deterministic predicate on bipartite graphs.

    ``decide_bits(n, bits)`` receives the cut graph as adjacency bitmasks.
    The hereditary / union-closed flags are metadata consumed by the tests
    of the quasi-class closure lemma.
    """

    name: str
    decide_bits: Callable[[int, Sequence[int]], bool]
    hereditary: bool
    union_closed: bool

    def decide(self, g: Graph) -> bool:
        return self.decide_bits(g.n, g.bits)


def _components_bits(n, bits):
    seen = 0
    for s in range(n):
        if seen >> s & 1:
            continue
        comp_mask = 1 << s
        frontier = [s]
        while frontier:
            nxt = 0
            for u in frontier:
                nxt |= bits[u]
            nxt &= ~comp_mask
            if not nxt:
                break
            comp_mask |= nxt
            frontier = _bit_indices(nxt)
        seen |= comp_mask
        yield comp_mask


def _complete_bipartite_components(n, bits):
    # Within each component both sides must see the full other side; a
    # component is complete bipartite iff every vertex's neighbourhood
    # equals the opposite side of its component.
    for comp_mask in _components_bits(n, bits):
        verts = _bit_indices(comp_mask)
        if len(verts) == 1:
            continue
        root = verts[0]
        side = {root: 0}
        stack = [root]
        while stack:
            u = stack.pop()
            for w in _bit_indices(bits[u]):
                if w not in side:
                    side[w] = side[u] ^ 1
                    stack.append(w)
        mask0 = sum(1 << v for v, s in side.items() if s == 0)
        mask1 = comp_mask & ~mask0
        for v in verts:
            if bits[v] != (mask1 if side[v] == 0 else mask0):
                return False
    return True


def _max_degree_at_most(d):
    def decide(n, bits):
        return all(b.bit_count() <= d for b in bits)
    return decide


def _linear_forest(n, bits):
    # Disjoint union of paths: max degree <= 2 and no component is a cycle.
    if any(b.bit_count() > 2 for b in bits):
        return False
    for comp_mask in _components_bits(n, bits):
        verts = _bit_indices(comp_mask)
        edges2 = sum(bits[v].bit_count() for v in verts)
        if edges2 >= 2 * len(verts):
            return False
    return True


def _chain_components(n, bits):
    for comp_mask in _components_bits(n, bits):
        verts = _bit_indices(comp_mask)
        if len(verts) == 1:
            continue
        root = verts[0]
        side = {root: 0}
        stack = [root]
        while stack:
            u = stack.pop()
            for w in _bit_indices(bits[u]):
                if w not in side:
                    side[w] = side[u] ^ 1
                    stack.append(w)
        for s in (0, 1):
            hoods = sorted((bits[v] for v in verts if side[v] == s),
                           key=lambda m: m.bit_count())
            for a, b in zip(hoods, hoods[1:]):
                if a & ~b:
                    return False
    return True


def _chordal_bipartite(n, bits):
    # Every cycle of length >= 6 has a chord.  In a bipartite graph a
    # chordless cycle of length >= 5 is automatically even, so hole-freeness
    # is the whole condition.
    from .holes import _hole_search

    adj = [_bit_indices(b) for b in bits]
    return _hole_search(n, bits, adj, shortest=False) is None


def predicate_library() -> dict[str, BipartiteClassPredicate]:
    lib = [
        BipartiteClassPredicate(
            "monotone", is_monotone_bits, hereditary=True, union_closed=True),
        BipartiteClassPredicate(
            "complete-bipartite-components", _complete_bipartite_components,
            hereditary=True, union_closed=True),
        BipartiteClassPredicate(
            "degree-le-2", _max_degree_at_most(2), hereditary=True,
            union_closed=True),
        BipartiteClassPredicate(
            "degree-le-3", _max_degree_at_most(3), hereditary=True,
            union_closed=True),
        BipartiteClassPredicate(
            "linear-forests", _linear_forest, hereditary=True,
            union_closed=True),
        BipartiteClassPredicate(
            "chain-components", _chain_components, hereditary=True,
            union_closed=True),
        BipartiteClassPredicate(
            "chordal-bipartite", _chordal_bipartite, hereditary=True,
            union_closed=True),
    ]
    return {p.name: p for p in lib}


_MONOTONE_PREDICATE = BipartiteClassPredicate(
    "monotone", is_monotone_bits, hereditary=True, union_closed=True)


def oracle_quasi(g: Graph, predicate: BipartiteClassPredicate,
                 cap: int = 18) -> bool:
    """True iff the predicate holds on the cut of every bipartition."""
    if g.n > cap:
        raise SizeError(f"bipartition sweep capped at n={cap}")
    n = g.n
    if n == 0:
        return True
    full = (1 << n) - 1
    bits = g.bits
    for mask in range(1 << (n - 1)):
        lmask = (mask << 1) | 1
        rmask = full & ~lmask
        cut = [
            bits[v] & (rmask if lmask >> v & 1 else lmask)
            for v in range(n)
        ]
        if not predicate.decide_bits(n, cut):
            return False
    return True


def oracle_quasimonotone(g: Graph, cap: int = 18) -> bool:
    return oracle_quasi(g, _MONOTONE_PREDICATE, cap=cap)


def oracle_odd_chordal(g: Graph, cap: int = 18) -> bool:
    """Exhaustive check that every even cycle of length >= 6 has an odd
    chord.  Cycles are enumerated by root-canonical DFS (root = minimum
    vertex, second < last to kill the reversed duplicate)."""
    if g.n > cap:
        raise SizeError(f"cycle enumeration capped at n={cap}")
    bits = g.bits
    n = g.n
    for root in range(n):
        above = ~((1 << (root + 1)) - 1)
        stack = [(root, 1 << root, [root])]
        while stack:
            u, used, path = stack.pop()
            for w in _bit_indices(bits[u] & above & ~used):
                new_path = path + [w]
                if (
                    len(new_path) >= 6
                    and len(new_path) % 2 == 0
                    and bits[w] >> root & 1
                    and new_path[1] < new_path[-1]
                ):
                    if not _has_odd_chord(bits, new_path):
                        return False
                stack.append((w, used | 1 << w, new_path))
    return True


def _has_odd_chord(bits, cycle) -> bool:
    k = len(cycle)
    for i in range(k):
        for j in range(i + 2, k):
            if i == 0 and j == k - 1:
                continue
            if bits[cycle[i]] >> cycle[j] & 1 and (j - i) % 2 == 1:
                return True
    return False


@dataclass(frozen=True)
class PreholeDecision:
    """Outcome of the 'is this graph a prehole?' search.  status is one of
    'prehole', 'not-prehole', 'inconclusive'; a certifying bipartition is
    attached on success."""

    status: str
    bipartition: Optional[Bipartition] = None


def oracle_is_prehole(g: Graph, budget: int = 10_000_000) -> PreholeDecision:
    """Search for a certifying bipartition: one whose cut graph is a
    Hamilton cycle (spanning + 2-regular + connected).

    Backtracking over vertex sides with propagation on the necessary local
    constraint 'every vertex has exactly two neighbours on the other side',
    most-constrained vertex first.  Exceeding the propagation budget yields
    'inconclusive', which is distinct from a definite no.
    """
    n = g.n
    if n < 6 or n % 2 == 1 or any(len(a) < 2 for a in g.adj):
        return PreholeDecision("not-prehole")
    found, exhausted = _side_search(g, seeds={0: 0}, budget=budget,
                                    require_hamilton=True)
    if found is not None:
        return PreholeDecision("prehole", found)
    return PreholeDecision("not-prehole" if exhausted else INCONCLUSIVE)


def complete_sides(g: Graph, seeds: dict[int, int],
                   budget: int = 10_000_000) -> Optional[Bipartition]:
    """First total side assignment consistent with the local two-cross
    constraint, extending the given seeds.  No connectivity requirement;
    used to realize the reduction's bipartition recipe."""
    found, _ = _side_search(g, seeds=seeds, budget=budget,
                            require_hamilton=False)
    return found


def _side_search(g: Graph, seeds, budget, require_hamilton):
    """Shared engine.  Returns (bipartition or None, search_exhausted)."""
    n = g.n
    bits = g.bits
    side: list[Optional[int]] = [None] * n
    steps = 0

    def propagate(assignments) -> Optional[list[int]]:
        nonlocal steps
        trail = []
        queue = list(assignments)
        while queue:
            v, s = queue.pop()
            if side[v] is not None:
                if side[v] != s:
                    for t in trail:
                        side[t] = None
                    return None
                continue
            side[v] = s
            trail.append(v)
            steps += 1
            # each neighbour u of v re-examines its cross count
            for u in _bit_indices(bits[v] | (1 << v)):
                cross = undecided = 0
                und_list = []
                for w in _bit_indices(bits[u]):
                    if side[w] is None:
                        undecided += 1
                        und_list.append(w)
                    elif side[w] != (side[u] if side[u] is not None else -2):
                        cross += 1
                if side[u] is None:
                    continue
                if cross > 2 or cross + undecided < 2:
                    for t in trail:
                        side[t] = None
                    return None
                if cross == 2:
                    for w in und_list:
                        queue.append((w, side[u]))
                elif cross + undecided == 2:
                    for w in und_list:
                        queue.append((w, side[u] ^ 1))
        return trail

    def undo(trail):
        for t in trail:
            side[t] = None

    def check_hamilton() -> Optional[Bipartition]:
        cut = [0] * n
        for v in range(n):
            for w in _bit_indices(bits[v]):
                if side[w] != side[v]:
                    cut[v] |= 1 << w
            if cut[v].bit_count() != 2:
                return None
        seen = 1 << 0
        frontier = [0]
        while frontier:
            nxt = 0
            for u in frontier:
                nxt |= cut[u]
            nxt &= ~seen
            seen |= nxt
            frontier = _bit_indices(nxt)
        if seen != (1 << n) - 1:
            return None
        return bipartition_from_left(n, [v for v in range(n) if side[v] == 0])

    def search() -> tuple[Optional[Bipartition], bool]:
        nonlocal steps
        if steps > budget:
            return None, False
        pick = -1
        best_und = 10 ** 9
        for v in range(n):
            if side[v] is not None:
                continue
            und = sum(1 for w in _bit_indices(bits[v]) if side[w] is None)
            if und < best_und:
                best_und = und
                pick = v
        if pick == -1:
            if require_hamilton:
                return check_hamilton(), True
            return bipartition_from_left(
                n, [v for v in range(n) if side[v] == 0]), True
        exhausted = True
        for s in (0, 1):
            trail = propagate([(pick, s)])
            if trail is None:
                continue
            result, done = search()
            if result is not None:
                return result, True
            exhausted = exhausted and done
            undo(trail)
            if steps > budget:
                return None, False
        return None, exhausted

    trail = propagate(list(seeds.items()))
    if trail is None:
        return None, True
    return search()
