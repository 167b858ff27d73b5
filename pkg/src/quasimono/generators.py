"""Parametric graph families, hard-coded figure fixtures, seeded random
graphs, and the NAE3SAT-to-prehole reduction with a brute-force solver.

Every constructor documents its vertex numbering; golden files and witness
tests depend on these numbers staying put.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .graphs import Bipartition, Graph, GraphInputError, SizeError, make_graph
from .flaws import ARMCHAIR, STIRRER, TRIPOD, catalog
from .oracle import complete_sides


class GeneratorParameterError(GraphInputError):
    pass


# ---------------------------------------------------------------------------
# Parametric families
# ---------------------------------------------------------------------------


def cycle(n: int) -> Graph:
    if n < 3:
        raise GeneratorParameterError("cycle needs n >= 3")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise GeneratorParameterError("path needs n >= 1")
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    if n < 0:
        raise GeneratorParameterError("complete needs n >= 0")
    return make_graph(n, itertools.combinations(range(n), 2))


def complete_bipartite(p: int, q: int) -> Graph:
    if p < 0 or q < 0:
        raise GeneratorParameterError("complete_bipartite needs p, q >= 0")
    return make_graph(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def prism(n: int) -> Graph:
    """Two n-cycles 0..n-1 (inner) and n..2n-1 (outer) joined by spokes."""
    if n < 3:
        raise GeneratorParameterError("prism needs n >= 3")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(n + i, n + (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    return make_graph(2 * n, edges)


def moebius_ladder(m: int) -> Graph:
    """Cycle 0..m-1 plus the m/2 diagonals i -- i+m/2."""
    if m < 6 or m % 2:
        raise GeneratorParameterError("moebius ladder needs even m >= 6")
    edges = [(i, (i + 1) % m) for i in range(m)]
    edges += [(i, i + m // 2) for i in range(m // 2)]
    return make_graph(m, edges)


def fan_prehole(k: int) -> Graph:
    """The unbounded prehole family F(k): vertices a=0, x_i=i (1..k),
    b=k+1, y_i=k+1+i (1..k); edges a-x1, a-y1, x_k-b, y_k-b, the two paths,
    and the rungs x_i-y_i."""
    if k < 1:
        raise GeneratorParameterError("fan needs k >= 1")
    a, b = 0, k + 1

    def x(i):
        return i

    def y(i):
        return k + 1 + i

    edges = [(a, x(1)), (a, y(1)), (x(k), b), (y(k), b)]
    edges += [(x(i), x(i + 1)) for i in range(1, k)]
    edges += [(y(i), y(i + 1)) for i in range(1, k)]
    edges += [(x(i), y(i)) for i in range(1, k + 1)]
    return make_graph(2 * k + 2, edges)


def crossover_prehole(n: int) -> Graph:
    """Two n-cycles (inner 0..n-1, outer n..2n-1) joined by the double
    diagonals i -- outer(i+1) and outer(i) -- i+1; for odd n this is the
    flawless crossover-prehole pattern."""
    if n < 3:
        raise GeneratorParameterError("crossover prehole needs n >= 3")
    o = lambda i: n + i % n
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(o(i), o(i + 1)) for i in range(n)]
    edges += [(i, o(i + 1)) for i in range(n)]
    edges += [(o(i), (i + 1) % n) for i in range(n)]
    return make_graph(2 * n, edges)


# ---------------------------------------------------------------------------
# Figure fixtures
# ---------------------------------------------------------------------------


def tripod() -> Graph:
    return catalog(TRIPOD)


def stirrer() -> Graph:
    return catalog(STIRRER)


def armchair() -> Graph:
    return catalog(ARMCHAIR)


def twoholes() -> Graph:
    """19-edge?  No: the 11-vertex quasimonotone fixture with a short 5-hole
    and a short 7-hole.  Outer 7-cycle 0..6, inner path 7-8-9-10, connectors
    as drawn."""
    edges = [(i, (i + 1) % 7) for i in range(7)]
    edges += [(7, 8), (8, 9), (9, 10)]
    edges += [(4, 10), (4, 7), (6, 7), (0, 8), (1, 9), (2, 10)]
    return make_graph(11, edges)


def prism7() -> Graph:
    """The 7-prism worked example (inner 0..6, outer 7..13)."""
    return prism(7)


def degree2_prehole() -> Graph:
    """Six-vertex prehole with three degree-2 vertices and an interior
    triangle.  Hamilton cycle (0,1,3,5,4,2); triangle {0,3,4}."""
    return make_graph(6, [(2, 4), (0, 2), (0, 1), (1, 3), (3, 5), (4, 5),
                          (0, 3), (0, 4), (3, 4)])


def degree5_prehole() -> Graph:
    """Sixteen-vertex prehole whose vertex x4 has five neighbours inside it
    (tightness of the prehole degree bound): F(7) plus the two even chords
    y2-x4 and x4-y6."""
    g = fan_prehole(7)
    edges = list(g.edges) + [(4, 10), (4, 14)]
    return make_graph(16, edges)


def quasiexample_a() -> Graph:
    """First of the two large quasimonotone showcase graphs: 20 vertices in
    five radial quadruples {4k..4k+3}; quadruple 4-cycles, spokes
    i -- i+4 (mod 20), and skip chords i -- i+6 (mod 20) for i = 0,1 mod 4."""
    edges = []
    for k in range(5):
        b = 4 * k
        edges += [(b, b + 1), (b + 1, b + 2), (b + 2, b + 3), (b, b + 3)]
    edges += [(i, (i + 4) % 20) for i in range(20)]
    edges += [(i, (i + 6) % 20) for i in range(20) if i % 4 in (0, 1)]
    return make_graph(20, edges)


def quasiexample_b() -> Graph:
    """Second showcase graph: 19 vertices; middle path row 0..6, top row
    7..12, bottom row 13..18, zig-zag diagonals plus six extra edges."""
    edges = []
    for i in range(6):
        edges += [(i, 7 + i), (i + 1, 7 + i)]        # middle-top zig-zag
        edges += [(i, 13 + i), (i + 1, 13 + i)]      # middle-bottom zig-zag
    edges += [(7, 13), (10, 16), (11, 17), (1, 2), (2, 3), (5, 6)]
    return make_graph(19, edges)


_FIXTURES = {
    "tripod": tripod,
    "stirrer": stirrer,
    "armchair": armchair,
    "twoholes": twoholes,
    "prism7": prism7,
    "degree2-prehole": degree2_prehole,
    "degree5-prehole": degree5_prehole,
    "quasiexample-a": quasiexample_a,
    "quasiexample-b": quasiexample_b,
}


def fixture(name: str) -> Graph:
    if name not in _FIXTURES:
        raise GeneratorParameterError(f"unknown fixture {name!r}")
    return _FIXTURES[name]()


def fixture_names() -> tuple[str, ...]:
    return tuple(sorted(_FIXTURES))


# ---------------------------------------------------------------------------
# Seeded random graphs (SplitMix64; never the platform default RNG)
# ---------------------------------------------------------------------------

_MASK64 = (1 << 64) - 1


def splitmix64(seed: int) -> Iterator[int]:
    """SplitMix64 stream; pure 64-bit integer arithmetic, so identical on
    every platform."""
    x = seed & _MASK64
    while True:
        x = (x + 0x9E3779B97F4A7C15) & _MASK64
        z = x
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        yield z ^ (z >> 31)


def random_graph(n: int, p: float, seed: int) -> Graph:
    """G(n, p) with one SplitMix64 draw per vertex pair in lexicographic
    order: the edge is present iff (draw >> 11) * 2^-53 < p."""
    if not 0 <= p <= 1:
        raise GeneratorParameterError("edge probability must be in [0, 1]")
    if n < 0:
        raise GeneratorParameterError("n must be non-negative")
    stream = splitmix64(seed)
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if (next(stream) >> 11) * (2.0 ** -53) < p
    ]
    return make_graph(n, edges)


# ---------------------------------------------------------------------------
# NAE3SAT
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Cnf:
    """3-CNF with DIMACS-style signed literals (1-based variables).
    Repeated variables inside a clause are permitted."""

    num_vars: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        for cl in self.clauses:
            if len(cl) != 3:
                raise GraphInputError("clauses must have exactly 3 literals")
            for lit in cl:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise GraphInputError(f"literal {lit} out of range")


def parse_dimacs(text: str) -> Cnf:
    """Standard DIMACS CNF: 'p cnf n m' header, clause lines terminated by
    0, 'c' comment lines.  Clauses with a literal count other than 3 are
    rejected."""
    num_vars = None
    expected = None
    clauses: list[tuple[int, int, int]] = []
    pending: list[int] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise GraphInputError(f"bad DIMACS header: {line!r}")
            num_vars, expected = int(parts[2]), int(parts[3])
            continue
        if num_vars is None:
            raise GraphInputError("clause line before DIMACS header")
        for tok in line.split():
            lit = int(tok)
            if lit == 0:
                if len(pending) != 3:
                    raise GraphInputError(
                        f"clause {tuple(pending)} does not have 3 literals")
                clauses.append((pending[0], pending[1], pending[2]))
                pending = []
            else:
                pending.append(lit)
    if pending:
        raise GraphInputError("unterminated clause at end of file")
    if num_vars is None:
        raise GraphInputError("missing DIMACS header")
    if expected is not None and len(clauses) != expected:
        raise GraphInputError(
            f"header promises {expected} clauses, found {len(clauses)}")
    return Cnf(num_vars=num_vars, clauses=tuple(clauses))


def nae_satisfies(f: Cnf, assignment: Sequence[int]) -> bool:
    """True iff under the assignment every clause sees both truth values."""
    for cl in f.clauses:
        vals = {assignment[abs(l) - 1] ^ (1 if l < 0 else 0) for l in cl}
        if len(vals) != 2:
            return False
    return True


def nae3sat_solve(f: Cnf) -> Optional[tuple[int, ...]]:
    """Lexicographically first NAE-satisfying assignment, or None."""
    if f.num_vars > 24:
        raise SizeError("NAE3SAT brute force capped at 24 variables")
    for a in itertools.product((0, 1), repeat=f.num_vars):
        if nae_satisfies(f, a):
            return a
    return None


# ---------------------------------------------------------------------------
# The reduction graph
# ---------------------------------------------------------------------------

# Truth assignment component, 8 vertices per variable.  Local indices:
_TAC_ROLES = ("endL", "conL", "minus", "m2", "m3", "plus", "conR", "endR")
_TAC_EDGES = (
    ("endL", "conL"), ("conL", "plus"), ("conL", "minus"),
    ("minus", "m2"), ("m2", "m3"), ("m3", "plus"),
    ("plus", "conR"), ("minus", "conR"), ("conR", "endR"),
)

# Satisfaction test component, 30 vertices per clause.  Grid names follow
# the figure ('16' = column 1, row 6); local index of grid (x, y) is
# (6-y)*4 + (x-1), then b1 b2 b3 = 24..26 and d1 d2 d3 = 27..29.  The stc
# equals the closed 30-vertex prehole with the edge 21-31 cut open; the
# ring linkage re-enters at 21 and leaves at 31.
_STC_NAMES = tuple(
    f"{x}{y}" for y in range(6, 0, -1) for x in range(1, 5)
) + ("b1", "b2", "b3", "d1", "d2", "d3")

_STC_EDGES = (
    ("b1", "15"), ("15", "25"), ("25", "34"), ("34", "44"), ("44", "d1"),
    ("d1", "45"), ("45", "35"), ("35", "24"), ("24", "14"), ("14", "b1"),
    ("16", "26"), ("26", "36"), ("36", "46"),
    ("41", "31"), ("21", "11"),
    ("b3", "13"), ("13", "23"), ("23", "32"), ("32", "42"), ("42", "d3"),
    ("d3", "43"), ("43", "33"), ("33", "22"), ("22", "12"), ("12", "b3"),
    ("b1", "b2"), ("b2", "b3"), ("b3", "b1"),
    ("22", "23"), ("24", "25"),
    ("11", "12"), ("13", "14"), ("15", "16"),
    ("41", "42"), ("43", "44"), ("45", "46"),
    ("d1", "d2"), ("d2", "d3"), ("d3", "d1"),
    ("32", "33"), ("34", "35"),
    ("16", "b2"), ("b2", "11"), ("46", "d2"), ("d2", "41"),
)

_STC_INDEX = {name: i for i, name in enumerate(_STC_NAMES)}
_TAC_INDEX = {role: i for i, role in enumerate(_TAC_ROLES)}

# Side seeds realizing the certifying recipe (0 = L, 1 = R).  x+ goes to R
# exactly when the variable is assigned 1; the connector sides are fixed.
_TAC_SIDES = {
    1: {"endL": 1, "conL": 0, "minus": 0, "m2": 1, "m3": 0,
        "plus": 1, "conR": 1, "endR": 0},
    0: {"endL": 1, "conL": 0, "minus": 1, "m2": 0, "m3": 1,
        "plus": 0, "conR": 1, "endR": 0},
}


def figrec_graph() -> Graph:
    """The closed 30-vertex gadget (stc plus the edge 21-31): a prehole with
    several certifying bipartitions."""
    edges = [(_STC_INDEX[a], _STC_INDEX[b]) for a, b in _STC_EDGES]
    edges.append((_STC_INDEX["21"], _STC_INDEX["31"]))
    return make_graph(30, edges)


def stc_graph() -> Graph:
    """The open satisfaction test component on 30 vertices (no linkage)."""
    return make_graph(30, [(_STC_INDEX[a], _STC_INDEX[b]) for a, b in _STC_EDGES])


@dataclass(frozen=True)
class ReductionLayout:
    """Vertex role maps of a reduction graph: one dict per variable (role ->
    vertex) and one per clause (grid/triangle name -> vertex), plus the ring
    linkage edges and the literal edge set F."""

    num_vars: int
    num_clauses: int
    tac: tuple[dict, ...]
    stc: tuple[dict, ...]
    linkage: tuple[tuple[int, int], ...]
    f_edges: tuple[tuple[int, int], ...]


def reduce_nae3sat(f: Cnf) -> tuple[Graph, ReductionLayout]:
    """Build the reduction graph: one tac per variable, one stc per clause,
    circular linkage, and the F edges tying literal occurrences to their
    variable's poles.  |V| = 8n + 30m."""
    if not f.clauses:
        raise GraphInputError("reduction needs at least one clause")
    n, m = f.num_vars, len(f.clauses)
    tac_maps = tuple(
        {role: 8 * i + _TAC_INDEX[role] for role in _TAC_ROLES}
        for i in range(n)
    )
    stc_maps = tuple(
        {name: 8 * n + 30 * j + _STC_INDEX[name] for name in _STC_NAMES}
        for j in range(m)
    )
    edges: list[tuple[int, int]] = []
    for t in tac_maps:
        edges += [(t[a], t[b]) for a, b in _TAC_EDGES]
    for s in stc_maps:
        edges += [(s[a], s[b]) for a, b in _STC_EDGES]
    linkage = []
    for i in range(n - 1):
        linkage.append((tac_maps[i]["endR"], tac_maps[i + 1]["endL"]))
    for j in range(m - 1):
        linkage.append((stc_maps[j]["31"], stc_maps[j + 1]["21"]))
    linkage.append((tac_maps[0]["endL"], stc_maps[0]["21"]))
    linkage.append((tac_maps[n - 1]["endR"], stc_maps[m - 1]["31"]))
    f_edges = []
    for j, cl in enumerate(f.clauses):
        for k, lit in enumerate(cl):
            i = abs(lit) - 1
            b = stc_maps[j][f"b{k + 1}"]
            d = stc_maps[j][f"d{k + 1}"]
            if lit > 0:
                f_edges += [(tac_maps[i]["plus"], b), (tac_maps[i]["minus"], d)]
            else:
                f_edges += [(tac_maps[i]["plus"], d), (tac_maps[i]["minus"], b)]
    graph = make_graph(8 * n + 30 * m, edges + linkage + f_edges)
    layout = ReductionLayout(
        num_vars=n, num_clauses=m, tac=tac_maps, stc=stc_maps,
        linkage=tuple(linkage), f_edges=tuple(f_edges),
    )
    return graph, layout


def assignment_to_bipartition(f: Cnf, layout: ReductionLayout,
                              assignment: Sequence[int]) -> Bipartition:
    """Sides per the construction recipe: tac poles follow the assignment,
    b/d vertices keep F edges same-side, and the stc interiors are the
    unique local-constraint extension of those seeds."""
    if len(assignment) != f.num_vars:
        raise GraphInputError("assignment must cover every variable")
    graph, _ = reduce_nae3sat(f)
    seeds: dict[int, int] = {}
    for i in range(f.num_vars):
        for role, s in _TAC_SIDES[assignment[i] & 1].items():
            seeds[layout.tac[i][role]] = s
    for j, cl in enumerate(f.clauses):
        for k, lit in enumerate(cl):
            value = assignment[abs(lit) - 1] ^ (1 if lit < 0 else 0)
            seeds[layout.stc[j][f"b{k + 1}"]] = 1 if value else 0
            seeds[layout.stc[j][f"d{k + 1}"]] = 0 if value else 1
    result = complete_sides(graph, seeds)
    if result is None:
        raise AssertionError("seeded side completion failed on a reduction graph")
    return result
