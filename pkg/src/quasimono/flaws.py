"""The flaw catalog (tripod, stirrer, armchair), the generic pre-H test, and
the seven-vertex flaw scan that gates recognition.

Catalog numbering is fixed so witnesses are reproducible:

* tripod: centre 0, arms (1,2), (3,4), (5,6);
* stirrer: quadrangles (0,1,2,3) and (2,4,5,3) sharing the edge 2-3, pendant
  6 on the shared-edge endpoint 2;
* armchair: quadrangle (0,1,2,3), pendants 4 on 0, 5 on 1, 6 on 2.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .graphs import (
    Bipartition,
    Graph,
    GraphInputError,
    bipartition_from_left,
    make_graph,
)

TRIPOD = "tripod"
STIRRER = "stirrer"
ARMCHAIR = "armchair"
FLAW_KINDS = (TRIPOD, STIRRER, ARMCHAIR)

_CATALOG_EDGES = {
    TRIPOD: ((0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)),
    STIRRER: ((0, 1), (1, 2), (2, 3), (0, 3), (2, 4), (4, 5), (3, 5), (2, 6)),
    ARMCHAIR: ((0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (1, 5), (2, 6)),
}

_CATALOG_LEFT = {
    TRIPOD: (0, 2, 4, 6),
    STIRRER: (0, 2, 5),
    ARMCHAIR: (0, 2, 5),
}


@dataclass(frozen=True)
class FlawWitness:
    """Seven offending vertices of the host graph together with a
    bipartition whose cut graph is isomorphic to the catalog graph.

    ``iso`` maps catalog vertex -> host vertex and makes the witness fully
    machine-checkable: cut_graph(induced_subgraph(g, vertices), bipartition)
    must equal the catalog graph under iso.
    """

    vertices: tuple[int, ...]
    kind: str
    bipartition: Bipartition
    iso: tuple[int, ...]


def catalog(kind: str) -> Graph:
    if kind not in _CATALOG_EDGES:
        raise GraphInputError(f"unknown flaw kind {kind!r}")
    return make_graph(7, _CATALOG_EDGES[kind])


def catalog_bipartition(kind: str) -> Bipartition:
    return bipartition_from_left(7, _CATALOG_LEFT[kind])


# Degree multisets identify candidate targets cheaply before the
# permutation-level isomorphism check.
_CATALOG_DEGSEQ = {}
for _kind in FLAW_KINDS:
    _g = catalog(_kind)
    _CATALOG_DEGSEQ.setdefault(
        tuple(sorted(len(a) for a in _g.adj)), []
    ).append(_kind)

_FLAW_EDGE_COUNTS = {len(_CATALOG_EDGES[k]) for k in FLAW_KINDS}


def _iso_map(bits_a: list[int], g_b: Graph) -> Optional[tuple[int, ...]]:
    """Isomorphism from g_b onto the equal-sized graph given by bits_a, as a
    tuple perm with perm[g_b vertex] = local vertex.  Exhaustive search
    restricted to degree classes; adequate at catalog size."""
    n = g_b.n
    deg_a = [b.bit_count() for b in bits_a]
    classes: dict[int, list[int]] = {}
    for v, d in enumerate(deg_a):
        classes.setdefault(d, []).append(v)
    slots = []
    for v in range(n):
        d = len(g_b.adj[v])
        if d not in classes:
            return None
        slots.append(classes[d])
    perm = [-1] * n
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        for cand in slots[i]:
            if used[cand]:
                continue
            ok = True
            for w in g_b.adj[i]:
                if w < i and not (bits_a[cand] >> perm[w]) & 1:
                    ok = False
                    break
            if ok:
                used[cand] = True
                perm[i] = cand
                if extend(i + 1):
                    return True
                used[cand] = False
                perm[i] = -1
        return False

    return tuple(perm) if extend(0) else None


def is_pre(target: Graph, candidate: Graph) -> Optional[tuple[Bipartition, tuple[int, ...]]]:
    """Some bipartition of candidate whose cut graph is isomorphic to the
    bipartite target, plus the iso (target vertex -> candidate vertex).
    None if no bipartition works.  Sizes must match (pre-H is spanning)."""
    if candidate.n != target.n:
        raise GraphInputError("pre-H test needs |candidate| = |target|")
    n = candidate.n
    if n == 0:
        return bipartition_from_left(0, []), ()
    target_deg = tuple(sorted(len(a) for a in target.adj))
    for mask in range(1 << (n - 1)):
        lmask = (mask << 1) | 1  # vertex 0 fixed in L; complements give equal cuts
        cut_bits = [
            candidate.bits[v] & (~lmask if lmask >> v & 1 else lmask)
            for v in range(n)
        ]
        if tuple(sorted(b.bit_count() for b in cut_bits)) != target_deg:
            continue
        perm = _iso_map(cut_bits, target)
        if perm is not None:
            left = [v for v in range(n) if lmask >> v & 1]
            return bipartition_from_left(n, left), perm
    return None


def find_flaw(g: Graph) -> Optional[FlawWitness]:
    """Scan all 7-vertex induced subgraphs in lexicographic order for a
    pre-tripod / pre-stirrer / pre-armchair; first witness wins.  Absence
    proves the graph flawless."""
    if g.n < 7:
        return None
    for subset in itertools.combinations(range(g.n), 7):
        witness = _scan_subset(g, subset)
        if witness is not None:
            return witness
    return None


def _scan_subset(g: Graph, subset: tuple[int, ...]) -> Optional[FlawWitness]:
    smask = 0
    for v in subset:
        smask |= 1 << v
    local = []
    for v in subset:
        row = 0
        nb = g.bits[v] & smask
        for j, w in enumerate(subset):
            if nb >> w & 1:
                row |= 1 << j
        local.append(row)
    # A flaw cut needs at least 6 edges, so sparse subsets are skipped
    # without touching any bipartition.
    if sum(r.bit_count() for r in local) < 2 * min(_FLAW_EDGE_COUNTS):
        return None
    for mask in range(64):
        lmask = (mask << 1) | 1
        cut = [
            local[i] & (~lmask if lmask >> i & 1 else lmask)
            for i in range(7)
        ]
        degs = tuple(sorted(b.bit_count() for b in cut))
        for kind in _CATALOG_DEGSEQ.get(degs, ()):
            perm = _iso_map(cut, catalog(kind))
            if perm is None:
                continue
            left = [subset[i] for i in range(7) if lmask >> i & 1]
            return FlawWitness(
                vertices=subset,
                kind=kind,
                bipartition=Bipartition(
                    L=frozenset(left),
                    R=frozenset(subset) - frozenset(left),
                ),
                iso=tuple(subset[perm[i]] for i in range(7)),
            )
    return None


def verify_flaw_witness(g: Graph, w: FlawWitness) -> bool:
    """Re-check the witness invariant from scratch."""
    if len(w.vertices) != 7 or len(set(w.vertices)) != 7:
        return False
    if w.bipartition.L | w.bipartition.R != frozenset(w.vertices):
        return False
    cat = catalog(w.kind)
    pos = {v: i for i, v in enumerate(w.vertices)}
    if sorted(w.iso) != sorted(w.vertices):
        return False
    for a in range(7):
        for b in range(a + 1, 7):
            ia, ib = w.iso[a], w.iso[b]
            crosses = (ia in w.bipartition.L) != (ib in w.bipartition.L)
            cut_edge = g.has_edge(ia, ib) and crosses
            if cut_edge != cat.has_edge(a, b):
                return False
    return True
