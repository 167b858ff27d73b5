"""Immutable undirected simple graphs and the traversal primitives shared by
the whole toolkit.

Vertices are dense 0-based indices.  All enumeration orders are lexicographic
by vertex index; that is the global tie-breaking rule everywhere in this
package.  Graph values are immutable after construction and every operation
here is a pure function, so concurrent use is safe.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence


class GraphInputError(ValueError):
    """Raised when an operation receives structurally invalid input."""


class SizeError(ValueError):
    """Raised when an exponential routine is asked to exceed its size cap."""


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices 0..n-1.

    ``edges`` is a sorted tuple of pairs (u, v) with u < v; ``adj`` holds the
    sorted neighbour tuple of each vertex and ``bits`` the same adjacency as
    integer bitmasks (bit v of ``bits[u]`` set iff uv is an edge).
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[tuple[int, ...], ...]
    bits: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.bits[u] >> v & 1)

    def degree(self, v: int) -> int:
        return len(self.adj[v])


def make_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a Graph from an edge collection, normalising orientation.

    Self-loops and out-of-range endpoints raise GraphInputError.  Duplicate
    pairs collapse (set semantics); callers that must *detect* duplicates,
    such as the edge-list file parser, check before calling.
    """
    if n < 0:
        raise GraphInputError("vertex count must be non-negative")
    bits = [0] * n
    for u, v in edges:
        if u == v:
            raise GraphInputError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphInputError(f"edge ({u},{v}) out of range for n={n}")
        bits[u] |= 1 << v
        bits[v] |= 1 << u
    adj = tuple(tuple(_bit_indices(b)) for b in bits)
    norm = tuple(
        (u, v) for u in range(n) for v in adj[u] if u < v
    )
    return Graph(n=n, edges=norm, adj=adj, bits=tuple(bits))


def _bit_indices(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Bipartition:
    """An (L, R) split of a vertex set; the central certificate object."""

    L: frozenset[int]
    R: frozenset[int]

    def side_of(self, v: int) -> str:
        if v in self.L:
            return "L"
        if v in self.R:
            return "R"
        raise GraphInputError(f"vertex {v} not covered by bipartition")


def bipartition_from_left(n: int, left: Iterable[int]) -> Bipartition:
    lset = frozenset(left)
    return Bipartition(L=lset, R=frozenset(range(n)) - lset)


@dataclass(frozen=True)
class VertexPath:
    """Ordered sequence of distinct vertices, consecutive ones adjacent."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1


def check_path(g: Graph, p: VertexPath) -> bool:
    vs = p.vertices
    if len(set(vs)) != len(vs):
        return False
    return all(g.has_edge(a, b) for a, b in zip(vs, vs[1:]))


@dataclass(frozen=True)
class CycleWitness:
    """A cyclically ordered vertex cycle annotated with what it certifies.

    kind is one of 'triangle', 'quadrangle', 'hole', 'even-hole',
    'odd-cycle', 'prehole'.  For kind='prehole' the alternating bipartition
    of the cycle is attached.
    """

    vertices: tuple[int, ...]
    kind: str
    bipartition: Optional[Bipartition] = None

    def __len__(self) -> int:
        return len(self.vertices)


def is_cycle(g: Graph, vs: Sequence[int]) -> bool:
    if len(vs) < 3 or len(set(vs)) != len(vs):
        return False
    k = len(vs)
    return all(g.has_edge(vs[i], vs[(i + 1) % k]) for i in range(k))


def canonical_cycle(vs: Sequence[int]) -> tuple[int, ...]:
    """Rotate/reflect so the smallest vertex comes first, followed by the
    smaller of its two cycle neighbours.  Determinism anchor for witnesses."""
    k = len(vs)
    i = min(range(k), key=lambda j: vs[j])
    fwd = tuple(vs[(i + j) % k] for j in range(k))
    bwd = tuple(vs[(i - j) % k] for j in range(k))
    return fwd if fwd[1] <= bwd[1] else bwd


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on s plus the order-preserving index map old->new."""
    verts = sorted(set(s))
    for v in verts:
        if not (0 <= v < g.n):
            raise GraphInputError(f"vertex {v} out of range")
    index = {v: i for i, v in enumerate(verts)}
    edges = [
        (index[u], index[v])
        for u, v in g.edges
        if u in index and v in index
    ]
    return make_graph(len(verts), edges), index


def bfs_distances(g: Graph, source: int) -> list[Optional[int]]:
    """Single-source BFS; unreachable vertices get None (the explicit
    'unreachable' variant; no magic numbers)."""
    if not (0 <= source < g.n):
        raise GraphInputError(f"vertex {source} out of range")
    dist: list[Optional[int]] = [None] * g.n
    dist[source] = 0
    frontier = [source]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            for w in g.adj[u]:
                if dist[w] is None:
                    dist[w] = d
                    nxt.append(w)
        frontier = nxt
    return dist


def dist(g: Graph, u: int, v: int) -> Optional[int]:
    """Shortest-path edge count between u and v, or None if disconnected."""
    if not (0 <= v < g.n):
        raise GraphInputError(f"vertex {v} out of range")
    return bfs_distances(g, u)[v]


def shortest_path(g: Graph, u: int, v: int,
                  allowed: Optional[int] = None) -> Optional[list[int]]:
    """Deterministic BFS shortest path from u to v, restricted to the
    vertices of the ``allowed`` bitmask when given.  Parents are assigned in
    ascending neighbour order, so the returned path is reproducible."""
    full = (1 << g.n) - 1 if allowed is None else allowed
    if not (full >> u & 1 and full >> v & 1):
        return None
    parent = {u: -1}
    frontier = [u]
    while frontier and v not in parent:
        nxt = []
        for x in frontier:
            for w in g.adj[x]:
                if full >> w & 1 and w not in parent:
                    parent[w] = x
                    nxt.append(w)
        frontier = nxt
    if v not in parent:
        return None
    path = [v]
    while path[-1] != u:
        path.append(parent[path[-1]])
    path.reverse()
    return path


def cut_graph(g: Graph, b: Bipartition) -> Graph:
    """Same vertex set, exactly the crossing edges retained: G[L:R]."""
    if b.L & b.R or (b.L | b.R) != frozenset(range(g.n)):
        raise GraphInputError("bipartition does not partition the vertex set")
    lmask = mask_of(b.L)
    return cut_graph_mask(g, lmask)


def cut_graph_mask(g: Graph, lmask: int) -> Graph:
    full = (1 << g.n) - 1
    rmask = full & ~lmask
    bits = [
        (g.bits[v] & rmask) if lmask >> v & 1 else (g.bits[v] & lmask)
        for v in range(g.n)
    ]
    adj = tuple(tuple(_bit_indices(x)) for x in bits)
    edges = tuple((u, v) for u in range(g.n) for v in adj[u] if u < v)
    return Graph(n=g.n, edges=edges, adj=adj, bits=tuple(bits))


def enumerate_triangles(g: Graph) -> list[tuple[int, int, int]]:
    """All pairwise-adjacent triples, each once, lexicographically sorted."""
    out = []
    for u in range(g.n):
        au = g.bits[u]
        for v in g.adj[u]:
            if v <= u:
                continue
            common = au & g.bits[v]
            common >>= v + 1
            w = v + 1
            while common:
                if common & 1:
                    out.append((u, v, w))
                common >>= 1
                w += 1
    return out


def has_triangle(g: Graph) -> bool:
    for u, v in g.edges:
        if g.bits[u] & g.bits[v]:
            return True
    return False


def first_triangle(g: Graph) -> Optional[tuple[int, int, int]]:
    for u in range(g.n):
        au = g.bits[u]
        for v in g.adj[u]:
            if v <= u:
                continue
            common = (au & g.bits[v]) >> (v + 1)
            if common:
                w = v + 1 + (common & -common).bit_length() - 1
                return (u, v, w)
    return None


def is_bipartite(g: Graph) -> Optional[Bipartition]:
    """Deterministic 2-colouring: component roots are the lowest unvisited
    index and go to L; isolated vertices therefore land in L."""
    colour: list[Optional[int]] = [None] * g.n
    for root in range(g.n):
        if colour[root] is not None:
            continue
        colour[root] = 0
        frontier = [root]
        while frontier:
            nxt = []
            for u in frontier:
                for w in g.adj[u]:
                    if colour[w] is None:
                        colour[w] = colour[u] ^ 1
                        nxt.append(w)
                    elif colour[w] == colour[u]:
                        return None
            frontier = nxt
    left = [v for v in range(g.n) if colour[v] == 0]
    return bipartition_from_left(g.n, left)


def find_odd_cycle(g: Graph) -> Optional[list[int]]:
    """Some odd cycle if g is non-bipartite, else None.

    BFS forest 2-colouring; the first same-colour edge (u, w) closes an odd
    cycle through the tree paths to their lowest common ancestor.
    """
    colour: list[Optional[int]] = [None] * g.n
    parent = [-1] * g.n
    depth = [0] * g.n
    for root in range(g.n):
        if colour[root] is not None:
            continue
        colour[root] = 0
        frontier = [root]
        while frontier:
            nxt = []
            for u in frontier:
                for w in g.adj[u]:
                    if colour[w] is None:
                        colour[w] = colour[u] ^ 1
                        parent[w] = u
                        depth[w] = depth[u] + 1
                        nxt.append(w)
                    elif colour[w] == colour[u]:
                        pu, pw = u, w
                        left, right = [pu], [pw]
                        while depth[pu] > depth[pw]:
                            pu = parent[pu]
                            left.append(pu)
                        while depth[pw] > depth[pu]:
                            pw = parent[pw]
                            right.append(pw)
                        while pu != pw:
                            pu, pw = parent[pu], parent[pw]
                            left.append(pu)
                            right.append(pw)
                        cycle = left + right[-2::-1]
                        return cycle
            frontier = nxt
    return None


def connected_components(g: Graph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by smallest member."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def neighbours(g: Graph, v: int) -> tuple[int, ...]:
    if not (0 <= v < g.n):
        raise GraphInputError(f"vertex {v} out of range")
    return g.adj[v]


def closed_neighbourhood(g: Graph, v: int) -> tuple[int, ...]:
    return tuple(sorted(g.adj[v] + (v,)))


def cyclic_distance(cycle: Sequence[int], u: int, v: int) -> int:
    """Distance between u and v measured along the cycle order."""
    pos = {x: i for i, x in enumerate(cycle)}
    if u not in pos or v not in pos:
        raise GraphInputError("vertex not on cycle")
    k = len(cycle)
    d = abs(pos[u] - pos[v])
    return min(d, k - d)


def chord_list(g: Graph, cycle: Sequence[int]) -> list[tuple[int, int]]:
    """Edges of g between non-consecutive cycle vertices, sorted."""
    k = len(cycle)
    pos = {x: i for i, x in enumerate(cycle)}
    if len(pos) != k:
        raise GraphInputError("cycle vertices not distinct")
    chords = []
    for a, b in itertools.combinations(sorted(pos), 2):
        gap = abs(pos[a] - pos[b])
        if gap != 1 and gap != k - 1 and g.has_edge(a, b):
            chords.append((a, b))
    return chords
