"""The Engel graph and exact graph metrics.

All metrics are exact: diameter by BFS from every vertex, clique number by
branch and bound with a greedy-coloring bound, isomorphism by backtracking
over degree-refined classes.  Planarity is delegated to networkx's
linear-time test, which also extracts a Kuratowski subgraph on failure;
every witness handed out is re-verified here as a subdivision of K5 or
K_{3,3} that lies inside the host graph.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Hashable, Iterable, Iterator, Sequence

import networkx as nx

from .engel import engel_depths, left_engel_set
from .errors import EmptyGraphError, EngelGroupError, SameVertex, UnknownVertex
from .groups import Group


class SimpleGraph:
    """Undirected simple graph on vertices 0..n-1 with optional labels.

    Adjacency is kept both as sorted neighbor tuples (deterministic
    iteration) and frozensets (O(1) membership).  Loops are rejected.
    """

    __slots__ = ("labels", "adjacency", "_sets")

    def __init__(
        self,
        vertex_count: int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence[Hashable] | None = None,
    ):
        if vertex_count < 0:
            raise ValueError("vertex count must be non-negative")
        if labels is None:
            labels = tuple(range(vertex_count))
        else:
            labels = tuple(labels)
            if len(labels) != vertex_count:
                raise ValueError(
                    f"{len(labels)} labels for {vertex_count} vertices"
                )
        nbrs: list[set[int]] = [set() for _ in range(vertex_count)]
        for u, v in edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise UnknownVertex(f"edge ({u}, {v}) leaves 0..{vertex_count - 1}")
            if u == v:
                raise SameVertex(f"loop at vertex {u} is not allowed in a simple graph")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.labels = labels
        self.adjacency: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(s)) for s in nbrs
        )
        self._sets = tuple(frozenset(s) for s in nbrs)

    @property
    def vertex_count(self) -> int:
        return len(self.adjacency)

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def adjacent(self, u: int, v: int) -> bool:
        return v in self._sets[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Each edge once, as (u, v) with u < v, in sorted order."""
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield (u, v)

    def __repr__(self) -> str:
        return f"SimpleGraph(vertices={self.vertex_count}, edges={self.edge_count})"


@dataclass(frozen=True)
class GraphMetrics:
    vertex_count: int
    edge_count: int
    component_count: int
    diameter: float  # non-negative int, or math.inf when disconnected
    clique_number: int
    planar: bool
    isolated_count: int


def build_engel_graph(G: Group) -> SimpleGraph:
    """Engel graph of a non-Engel group: vertices are the elements outside
    the left Engel set (labels carry their element indices, in canonical
    order); two vertices are joined when neither Engel sequence between
    them reaches the identity.

    Raises EngelGroupError when every element is left Engel.
    """
    L = set(left_engel_set(G))
    if len(L) == G.order:
        raise EngelGroupError(
            f"{G.name!r} is an Engel group, so its Engel graph is undefined"
        )
    verts = [x for x in range(G.order) if x not in L]
    depth_of = {v: engel_depths(G, v) for v in verts}
    edges = []
    for i, x in enumerate(verts):
        for j in range(i + 1, len(verts)):
            y = verts[j]
            if depth_of[y][x] < 0 and depth_of[x][y] < 0:
                edges.append((i, j))
    return SimpleGraph(len(verts), edges, labels=tuple(verts))


def connected_components(g: SimpleGraph) -> list[tuple[int, ...]]:
    """Maximal connected vertex sets by BFS, ordered by least vertex."""
    seen: set[int] = set()
    out: list[tuple[int, ...]] = []
    for start in range(g.vertex_count):
        if start in seen:
            continue
        comp = {start}
        queue = [start]
        while queue:
            nxt = []
            for u in queue:
                for v in g.neighbors(u):
                    if v not in comp:
                        comp.add(v)
                        nxt.append(v)
            queue = nxt
        seen |= comp
        out.append(tuple(sorted(comp)))
    return out


def _eccentricity(g: SimpleGraph, start: int) -> tuple[int, int]:
    # (farthest distance from start, number of vertices reached)
    dist = {start: 0}
    queue = [start]
    ecc = 0
    while queue:
        nxt = []
        for u in queue:
            for v in g.neighbors(u):
                if v not in dist:
                    dist[v] = dist[u] + 1
                    ecc = dist[v]
                    nxt.append(v)
        queue = nxt
    return ecc, len(dist)


def diameter(g: SimpleGraph) -> float:
    """Largest shortest-path distance; math.inf when disconnected, 0 for a
    single vertex.  Raises EmptyGraphError for zero vertices."""
    n = g.vertex_count
    if n == 0:
        raise EmptyGraphError("the diameter of the empty graph is undefined")
    best = 0
    for v in range(n):
        ecc, reached = _eccentricity(g, v)
        if reached < n:
            return math.inf
        best = max(best, ecc)
    return best


def isolated_vertices(g: SimpleGraph) -> tuple[int, ...]:
    return tuple(v for v in range(g.vertex_count) if not g.adjacency[v])


def induced_subgraph(g: SimpleGraph, vertices: Iterable[int]) -> SimpleGraph:
    """Subgraph on the given vertices (labels carried over), with every edge
    of g joining two of them."""
    vs = sorted(set(vertices))
    for v in vs:
        if not 0 <= v < g.vertex_count:
            raise UnknownVertex(f"vertex {v} is not in the graph")
    renumber = {v: i for i, v in enumerate(vs)}
    edges = [
        (renumber[u], renumber[v])
        for u, v in g.edges()
        if u in renumber and v in renumber
    ]
    return SimpleGraph(len(vs), edges, labels=tuple(g.labels[v] for v in vs))


def clique_number(g: SimpleGraph) -> int:
    """Exact maximum clique size; 0 for the empty graph.

    Branch and bound over bitmask candidate sets: candidates are greedily
    colored and a branch is cut when the current clique plus the color of
    the pivot vertex cannot beat the incumbent.
    """
    n = g.vertex_count
    if n == 0:
        return 0
    nbr = [0] * n
    for u, v in g.edges():
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u
    best = 0

    def expand(size: int, candidates: int) -> None:
        nonlocal best
        if size > best:
            best = size
        if not candidates:
            return
        # greedy coloring: vertices in the same class are pairwise
        # non-adjacent, so any clique meets each class at most once
        colored: list[tuple[int, int]] = []  # (vertex, color)
        rest = candidates
        color = 0
        while rest:
            color += 1
            available = rest
            while available:
                v = (available & -available).bit_length() - 1
                bit = 1 << v
                available &= ~(bit | nbr[v])
                rest &= ~bit
                colored.append((v, color))
        prefix = 0
        prefixes = []
        for v, _ in colored:
            prefixes.append(prefix)
            prefix |= 1 << v
        for i in range(len(colored) - 1, -1, -1):
            v, c = colored[i]
            if size + c <= best:
                return
            expand(size + 1, prefixes[i] & nbr[v])

    expand(0, (1 << n) - 1)
    return best


def _to_networkx(g: SimpleGraph) -> nx.Graph:
    gx = nx.Graph()
    gx.add_nodes_from(range(g.vertex_count))
    gx.add_edges_from(g.edges())
    return gx


def is_planar(g: SimpleGraph) -> bool:
    return nx.check_planarity(_to_networkx(g), counterexample=False)[0]


def kuratowski_witness(g: SimpleGraph) -> SimpleGraph | None:
    """For a non-planar graph, a verified witness subgraph that is a
    subdivision of K5 or K_{3,3}; None when g is planar."""
    planar, certificate = nx.check_planarity(_to_networkx(g), counterexample=True)
    if planar:
        return None
    witness = SimpleGraph(
        g.vertex_count, sorted(tuple(sorted(e)) for e in certificate.edges()), g.labels
    )
    verify_kuratowski_witness(witness, g)
    return witness


def verify_kuratowski_witness(witness: SimpleGraph, host: SimpleGraph) -> str:
    """Check that ``witness`` is a subgraph of ``host`` and a subdivision of
    K5 or K_{3,3}; returns "K5" or "K33" accordingly, raises ValueError
    otherwise."""
    if witness.vertex_count != host.vertex_count:
        raise ValueError("witness must live on the host's vertex set")
    host_edges = set(host.edges())
    for e in witness.edges():
        if e not in host_edges:
            raise ValueError(f"witness edge {e} is not an edge of the host graph")

    degrees = [witness.degree(v) for v in range(witness.vertex_count)]
    branch = [v for v, d in enumerate(degrees) if d >= 3]
    if any(d == 1 for d in degrees):
        raise ValueError("witness has a degree-1 vertex, so it is not a subdivision")
    if len(branch) == 5:
        kind, want_degree = "K5", 4
    elif len(branch) == 6:
        kind, want_degree = "K33", 3
    else:
        raise ValueError(f"witness has {len(branch)} branch vertices, need 5 or 6")
    if any(degrees[v] != want_degree for v in branch):
        raise ValueError(f"{kind} subdivision needs all branch degrees = {want_degree}")

    # contract the degree-2 chains between branch vertices
    branch_set = set(branch)
    visited: set[frozenset[int]] = set()
    reduced: set[frozenset[int]] = set()
    for b in branch:
        for u in witness.neighbors(b):
            if frozenset((b, u)) in visited:
                continue
            prev, cur = b, u
            visited.add(frozenset((b, u)))
            while cur not in branch_set:
                nxts = [w for w in witness.neighbors(cur) if w != prev]
                if len(nxts) != 1:
                    raise ValueError("witness path through a non-degree-2 vertex")
                prev, cur = cur, nxts[0]
                visited.add(frozenset((prev, cur)))
            if cur == b:
                raise ValueError("witness contains a path from a branch vertex to itself")
            pair = frozenset((b, cur))
            if pair in reduced:
                raise ValueError("two parallel paths between the same branch vertices")
            reduced.add(pair)
    if len(visited) != witness.edge_count:
        raise ValueError("witness has edges not on any branch-to-branch path")

    if kind == "K5":
        if len(reduced) != 10:
            raise ValueError(f"reduced graph has {len(reduced)} edges, K5 needs 10")
        return kind
    if len(reduced) != 9:
        raise ValueError(f"reduced graph has {len(reduced)} edges, K33 needs 9")
    v0 = branch[0]
    side = {v0} | {
        v for v in branch if v != v0 and frozenset((v0, v)) not in reduced
    }
    other = [v for v in branch if v not in side]
    if len(side) != 3 or len(other) != 3:
        raise ValueError("reduced graph is not bipartite with parts of size 3")
    expected = {frozenset((a, b)) for a in side for b in other}
    if reduced != expected:
        raise ValueError("reduced graph is not complete bipartite K33")
    return kind


def _refine_colors(g1: SimpleGraph, g2: SimpleGraph) -> tuple[list[int], list[int]]:
    # shared iterated degree refinement so colors are comparable across graphs
    c1 = [0] * g1.vertex_count
    c2 = [0] * g2.vertex_count
    for _ in range(g1.vertex_count + 1):
        sig1 = [(c1[v], tuple(sorted(c1[u] for u in g1.neighbors(v)))) for v in range(g1.vertex_count)]
        sig2 = [(c2[v], tuple(sorted(c2[u] for u in g2.neighbors(v)))) for v in range(g2.vertex_count)]
        palette = {s: i for i, s in enumerate(sorted(set(sig1) | set(sig2)))}
        n1 = [palette[s] for s in sig1]
        n2 = [palette[s] for s in sig2]
        if len(set(n1)) == len(set(c1)) and len(set(n2)) == len(set(c2)):
            return n1, n2
        c1, c2 = n1, n2
    return c1, c2


def find_isomorphism(g1: SimpleGraph, g2: SimpleGraph) -> dict[int, int] | None:
    """An edge-preserving vertex bijection from g1 to g2, or None.

    Backtracking search over color classes from iterated degree refinement;
    a discovered bijection is replayed edge by edge before being returned.
    """
    n = g1.vertex_count
    if n != g2.vertex_count or g1.edge_count != g2.edge_count:
        return None
    c1, c2 = _refine_colors(g1, g2)
    if sorted(c1) != sorted(c2):
        return None
    class_size = {c: c1.count(c) for c in set(c1)}
    order = sorted(range(n), key=lambda v: (class_size[c1[v]], -g1.degree(v), v))
    candidates = {v: [w for w in range(n) if c2[w] == c1[v]] for v in range(n)}
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def backtrack(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for w in candidates[v]:
            if w in used:
                continue
            ok = True
            for u, x in mapping.items():
                if g1.adjacent(u, v) != g2.adjacent(x, w):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used.add(w)
                if backtrack(i + 1):
                    return True
                del mapping[v]
                used.discard(w)
        return False

    if not backtrack(0):
        return None
    # replay: same edge count plus edges-to-edges makes it an isomorphism
    for u, v in g1.edges():
        if not g2.adjacent(mapping[u], mapping[v]):
            raise AssertionError("backtracking produced a non-isomorphism")
    return dict(mapping)


def graphs_isomorphic(g1: SimpleGraph, g2: SimpleGraph) -> bool:
    return find_isomorphism(g1, g2) is not None


def compute_metrics(g: SimpleGraph) -> GraphMetrics:
    """All exact metrics for a graph with at least one vertex."""
    comps = connected_components(g)
    return GraphMetrics(
        vertex_count=g.vertex_count,
        edge_count=g.edge_count,
        component_count=len(comps),
        diameter=diameter(g),
        clique_number=clique_number(g),
        planar=is_planar(g),
        isolated_count=len(isolated_vertices(g)),
    )
