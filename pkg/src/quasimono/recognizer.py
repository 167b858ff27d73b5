"""The top-level decision procedure with witness-carrying verdicts.

Per connected component: flaw scan, small-prehole scan, hole/triangle
gates, then either the long-hole branch (monotone remainders, ring
decomposition, crossover scan) or the triangle-pair scan.  A disconnected
graph is accepted iff every component is: all forbidden configurations are
connected, so the class is closed under disjoint union.

One deliberate deviation from a literal reading of the pseudocode: the
"reject when a hole and a triangle coexist" gate applies only when the hole
has length >= 7.  Triangles may legally coexist with 5-holes (quasimonotone
examples exist), and since the hole found here is a *shortest* one, a
length-5 hit proves there is no hole of length >= 7 at all.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .flaws import FlawWitness, find_flaw
from .graphs import (
    Bipartition,
    CycleWitness,
    Graph,
    chord_list,
    connected_components,
    first_triangle,
    induced_subgraph,
)
from .holes import find_hole, shorten_to_short_hole
from .prehole_search import crossover_scan, find_small_prehole, triangle_pair_scan
from .splitting import RingDecomposition, build_ring, check_gv_gw_monotone

ACCEPT_NO_STRUCTURE = "no-structure"
ACCEPT_TRIANGLE_SCAN = "triangle-scan-clean"
ACCEPT_RING = "ring"
REJECT_FLAW = "flaw"
REJECT_SMALL_PREHOLE = "small-prehole"
REJECT_EVEN_HOLE = "even-hole"
REJECT_TRIANGLE_LONG_HOLE = "triangle-with-long-hole"
REJECT_NOT_MONOTONE = "not-monotone-remainder"
REJECT_RING_FAILURE = "ring-construction-failure"
REJECT_PREHOLE = "prehole"


@dataclass(frozen=True)
class TriangleWithLongHole:
    triangle: tuple[int, int, int]
    hole: CycleWitness


@dataclass(frozen=True)
class NotMonotoneRemainder:
    removed_vertex: int
    role: str  # 'v' or 'w'


@dataclass(frozen=True)
class RingConstructionFailure:
    anchor_hole: tuple[int, ...]


@dataclass(frozen=True)
class ComponentVerdict:
    vertices: tuple[int, ...]
    accepted: bool
    reason: str
    witness: Optional[object] = None
    ring: Optional[RingDecomposition] = None


@dataclass(frozen=True)
class Verdict:
    accepted: bool
    reason: str
    witness: Optional[object]
    ring: Optional[RingDecomposition]
    components: tuple[ComponentVerdict, ...]


def recognize(g: Graph, max_small_prehole: int = 12) -> Verdict:
    if max_small_prehole < 12 or max_small_prehole % 2:
        # the |U4| > 12 gate of the triangle-pair scan assumes every prehole
        # up to 12 was already swept, so the knob may only be raised
        raise ValueError("max_small_prehole must be an even integer >= 12")
    comps = connected_components(g)
    results = []
    for comp in comps:
        sub, _ = induced_subgraph(g, comp)
        local = _recognize_component(sub, max_small_prehole)
        results.append(_remap_component(local, comp))
    rejecting = [r for r in results if not r.accepted]
    if rejecting:
        first = rejecting[0]
        return Verdict(False, first.reason, first.witness, None, tuple(results))
    ring = next((r.ring for r in results if r.ring is not None), None)
    reason = results[0].reason if len(results) == 1 else ACCEPT_NO_STRUCTURE
    if len(results) == 1 and results[0].ring is not None:
        reason = ACCEPT_RING
    if not results:
        reason = ACCEPT_NO_STRUCTURE
    return Verdict(True, reason, None, ring, tuple(results))


def _recognize_component(g: Graph, max_small_prehole: int) -> ComponentVerdict:
    verts = tuple(range(g.n))
    if g.n <= 4:
        # flaws need 7 vertices, preholes 6, holes 5, triangle pairs 6:
        # every scan is vacuous
        return ComponentVerdict(verts, True, ACCEPT_NO_STRUCTURE)

    flaw = find_flaw(g)
    if flaw is not None:
        return ComponentVerdict(verts, False, REJECT_FLAW, witness=flaw)
    small = find_small_prehole(g, max_small_prehole)
    if small is not None:
        # a chordless prehole is an even hole; surface it as the more
        # specific rejection
        if not chord_list(g, small.vertices):
            even = CycleWitness(vertices=small.vertices, kind="even-hole")
            return ComponentVerdict(verts, False, REJECT_EVEN_HOLE, witness=even)
        return ComponentVerdict(verts, False, REJECT_SMALL_PREHOLE, witness=small)

    short = None
    hole = find_hole(g)
    if hole is not None:
        if len(hole) % 2 == 0:
            even = CycleWitness(vertices=hole.vertices, kind="even-hole")
            return ComponentVerdict(verts, False, REJECT_EVEN_HOLE, witness=even)
        if len(hole) >= 7:
            tri = first_triangle(g)
            if tri is not None:
                return ComponentVerdict(
                    verts, False, REJECT_TRIANGLE_LONG_HOLE,
                    witness=TriangleWithLongHole(triangle=tri, hole=hole))
            short = shorten_to_short_hole(g, hole)
            if len(short) % 2 == 0:  # parity is preserved; kept for fidelity
                even = CycleWitness(vertices=short.vertices, kind="even-hole")
                return ComponentVerdict(verts, False, REJECT_EVEN_HOLE, witness=even)
        else:
            short = hole  # a shortest 5-hole is already short

    if short is not None and len(short) >= 7:
        ok, v, w, failed = check_gv_gw_monotone(g, short)
        if not ok:
            bad = v if failed == "v" else w
            return ComponentVerdict(
                verts, False, REJECT_NOT_MONOTONE,
                witness=NotMonotoneRemainder(removed_vertex=bad, role=failed))
        ring = build_ring(g, short)
        if ring is None:
            return ComponentVerdict(
                verts, False, REJECT_RING_FAILURE,
                witness=RingConstructionFailure(anchor_hole=short.vertices))
        wound = crossover_scan(g, ring)
        if wound is not None:
            return ComponentVerdict(verts, False, REJECT_PREHOLE, witness=wound)
        return ComponentVerdict(verts, True, ACCEPT_RING, ring=ring)

    big = triangle_pair_scan(g, min_u4=12)
    if big is not None:
        return ComponentVerdict(verts, False, REJECT_PREHOLE, witness=big)
    return ComponentVerdict(verts, True, ACCEPT_TRIANGLE_SCAN)


# ---------------------------------------------------------------------------
# Witness remapping from component-local to host indices
# ---------------------------------------------------------------------------


def _remap_component(cv: ComponentVerdict, comp: list[int]) -> ComponentVerdict:
    back = comp  # local index i corresponds to comp[i] (sorted order)

    def mv(v):
        return back[v]

    def mtuple(t):
        return tuple(back[v] for v in t)

    def mbip(b: Bipartition) -> Bipartition:
        return Bipartition(
            L=frozenset(back[v] for v in b.L),
            R=frozenset(back[v] for v in b.R),
        )

    witness = cv.witness
    if isinstance(witness, FlawWitness):
        witness = FlawWitness(
            vertices=mtuple(witness.vertices), kind=witness.kind,
            bipartition=mbip(witness.bipartition), iso=mtuple(witness.iso))
    elif isinstance(witness, CycleWitness):
        witness = _remap_cycle(witness, back)
    elif isinstance(witness, TriangleWithLongHole):
        witness = TriangleWithLongHole(
            triangle=mtuple(witness.triangle),
            hole=_remap_cycle(witness.hole, back))
    elif isinstance(witness, NotMonotoneRemainder):
        witness = NotMonotoneRemainder(
            removed_vertex=mv(witness.removed_vertex), role=witness.role)
    elif isinstance(witness, RingConstructionFailure):
        witness = RingConstructionFailure(anchor_hole=mtuple(witness.anchor_hole))

    ring = cv.ring
    if ring is not None:
        ring = RingDecomposition(
            blocks=tuple(frozenset(back[v] for v in b) for b in ring.blocks),
            anchor_hole=mtuple(ring.anchor_hole))

    return ComponentVerdict(
        vertices=tuple(comp), accepted=cv.accepted, reason=cv.reason,
        witness=witness, ring=ring)


def _remap_cycle(w: CycleWitness, back) -> CycleWitness:
    bip = w.bipartition
    if bip is not None:
        bip = Bipartition(
            L=frozenset(back[v] for v in bip.L),
            R=frozenset(back[v] for v in bip.R))
    return CycleWitness(
        vertices=tuple(back[v] for v in w.vertices), kind=w.kind,
        bipartition=bip)
