"""Exact graph invariants: connectivity, distance, girth, clique number,
chromatic number, partite structure, completeness, planarity.

All functions accept any graph object exposing ``vertices`` (a sequence)
and ``adj`` (a mapping vertex -> set of neighbours); both ``RingGraph``
and the plain ``SimpleGraph`` container here qualify.  Conventions for
degenerate graphs: the empty graph is connected, has diameter 0, girth
infinity, clique and chromatic number 0, and is planar and bipartite.

Clique, chromatic number and planarity are exact and guarded by a size
cap (default 64 vertices); exceeding the cap raises, it never degrades
to an approximation.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property, total_ordering

import networkx as nx

from .errors import CapExceededError

DEFAULT_EXACT_CAP = 64


# ---------------------------------------------------------------------------
# Extended naturals (values that may be infinite)
# ---------------------------------------------------------------------------

@total_ordering
class ExtendedNat:
    """A nonnegative integer or infinity, totally ordered with ints."""

    __slots__ = ("_value",)

    def __init__(self, value: int | None):
        if value is not None and value < 0:
            raise ValueError("ExtendedNat must be nonnegative")
        self._value = value

    @property
    def is_infinite(self) -> bool:
        return self._value is None

    @property
    def value(self) -> int:
        if self._value is None:
            raise ValueError("infinite value has no integer form")
        return self._value

    def _coerce(self, other) -> "ExtendedNat | None":
        if isinstance(other, ExtendedNat):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return ExtendedNat(other)
        return None

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        return NotImplemented if o is None else self._value == o._value

    def __lt__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self._value is None:
            return False
        if o._value is None:
            return True
        return self._value < o._value

    def __hash__(self) -> int:
        return hash(self._value)

    def __repr__(self) -> str:
        return "inf" if self._value is None else str(self._value)

    def to_json(self):
        return "inf" if self._value is None else self._value


INF = ExtendedNat(None)


@dataclass(frozen=True)
class SimpleGraph:
    """A bare vertex/edge container for the metric functions."""

    vertices: tuple[int, ...]
    edges: frozenset[tuple[int, int]]

    @classmethod
    def build(cls, vertices, edges) -> "SimpleGraph":
        vs = tuple(sorted(set(vertices)))
        es = frozenset((min(a, b), max(a, b)) for a, b in edges if a != b)
        return cls(vs, es)

    @cached_property
    def adj(self) -> dict[int, frozenset[int]]:
        nbrs: dict[int, set[int]] = {v: set() for v in self.vertices}
        for a, b in self.edges:
            nbrs[a].add(b)
            nbrs[b].add(a)
        return {v: frozenset(nbrs[v]) for v in self.vertices}


# ---------------------------------------------------------------------------
# Connectivity and distances
# ---------------------------------------------------------------------------

def _bfs_distances(graph, source) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in graph.adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def components(graph) -> list[list[int]]:
    """Connected components, each sorted, ordered by smallest vertex."""
    seen: set[int] = set()
    out = []
    for v in graph.vertices:
        if v in seen:
            continue
        comp = sorted(_bfs_distances(graph, v))
        seen.update(comp)
        out.append(comp)
    return out


def is_connected(graph) -> bool:
    """Empty and single-vertex graphs count as connected."""
    if len(graph.vertices) <= 1:
        return True
    return len(_bfs_distances(graph, graph.vertices[0])) == len(graph.vertices)


def distance(graph, a: int, b: int) -> ExtendedNat:
    if a not in graph.adj or b not in graph.adj:
        raise ValueError("distance arguments must be vertices of the graph")
    if a == b:
        return ExtendedNat(0)
    dist = _bfs_distances(graph, a)
    return ExtendedNat(dist[b]) if b in dist else INF


def diameter(graph) -> ExtendedNat:
    """Max distance over distinct vertex pairs; 0 if fewer than 2 vertices."""
    n = len(graph.vertices)
    if n < 2:
        return ExtendedNat(0)
    worst = 0
    for v in graph.vertices:
        dist = _bfs_distances(graph, v)
        if len(dist) != n:
            return INF
        worst = max(worst, max(dist.values()))
    return ExtendedNat(worst)


def girth(graph) -> ExtendedNat:
    """Length of the shortest cycle; infinite for forests.

    BFS from every vertex; a non-tree edge (u, w) seen at depths d(u),
    d(w) witnesses a cycle of length d(u)+d(w)+1 through the root, and
    the minimum over all roots is exact.
    """
    best: int | None = None
    for root in graph.vertices:
        dist = {root: 0}
        parent = {root: root}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and dist[u] * 2 >= best:
                continue
            for w in graph.adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    cand = dist[u] + dist[w] + 1
                    if best is None or cand < best:
                        best = cand
    return INF if best is None else ExtendedNat(best)


# ---------------------------------------------------------------------------
# Clique and chromatic number (exact, branch and bound)
# ---------------------------------------------------------------------------

def _check_cap(graph, cap: int, what: str) -> None:
    if len(graph.vertices) > cap:
        raise CapExceededError(
            f"{what} is exact only up to {cap} vertices; graph has {len(graph.vertices)}"
        )


def clique_number(graph, cap: int = DEFAULT_EXACT_CAP) -> int:
    """Maximum clique size via branch and bound with a greedy-colour bound."""
    _check_cap(graph, cap, "clique_number")
    verts = list(graph.vertices)
    n = len(verts)
    if n == 0:
        return 0
    pos = {v: i for i, v in enumerate(verts)}
    adjmask = [0] * n
    for i, v in enumerate(verts):
        for w in graph.adj[v]:
            adjmask[i] |= 1 << pos[w]
    best = 0

    def expand(cand: int, size: int) -> None:
        nonlocal best
        if cand == 0:
            if size > best:
                best = size
            return
        order: list[int] = []
        colors: list[int] = []
        m = cand
        c = 0
        while m:
            c += 1
            cls = m
            while cls:
                low = cls & -cls
                v = low.bit_length() - 1
                order.append(v)
                colors.append(c)
                cls &= ~adjmask[v]
                cls &= ~low
                m &= ~low
        for i in range(len(order) - 1, -1, -1):
            if size + colors[i] <= best:
                return
            v = order[i]
            expand(cand & adjmask[v], size + 1)
            cand &= ~(1 << v)

    expand((1 << n) - 1, 0)
    return best


def _greedy_coloring(graph) -> int:
    order = sorted(graph.vertices, key=lambda v: (-len(graph.adj[v]), v))
    color: dict[int, int] = {}
    used = 0
    for v in order:
        taken = {color[w] for w in graph.adj[v] if w in color}
        c = 0
        while c in taken:
            c += 1
        color[v] = c
        used = max(used, c + 1)
    return used


def _k_colorable(graph, k: int) -> bool:
    verts = sorted(graph.vertices, key=lambda v: (-len(graph.adj[v]), v))
    color: dict[int, int] = {}

    def assign(i: int, used: int) -> bool:
        if i == len(verts):
            return True
        v = verts[i]
        taken = {color[w] for w in graph.adj[v] if w in color}
        for c in range(min(k, used + 1)):
            if c in taken:
                continue
            color[v] = c
            if assign(i + 1, max(used, c + 1)):
                return True
            del color[v]
        return False

    return assign(0, 0)


def chromatic_number(graph, cap: int = DEFAULT_EXACT_CAP) -> int:
    """Exact chromatic number, iterative deepening between the clique
    lower bound and a greedy upper bound."""
    _check_cap(graph, cap, "chromatic_number")
    if not graph.vertices:
        return 0
    if not any(graph.adj[v] for v in graph.vertices):
        return 1
    low = clique_number(graph, cap)
    high = _greedy_coloring(graph)
    for k in range(low, high):
        if _k_colorable(graph, k):
            return k
    return high


def r_partite(graph, r: int, cap: int = DEFAULT_EXACT_CAP) -> bool:
    """A graph is r-partite exactly when it is r-colorable."""
    return chromatic_number(graph, cap) <= r


# ---------------------------------------------------------------------------
# Partite structure, completeness, planarity
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PartiteStructure:
    bipartite: bool
    parts: tuple[tuple[int, ...], tuple[int, ...]] | None
    complete_bipartite: tuple[int, int] | None
    complete: bool


def partite_structure(graph) -> PartiteStructure:
    """Two-coloring per component; isolated vertices join the smaller part.

    The complete-bipartite flag demands a connected bipartite graph with
    both parts nonempty and every cross pair adjacent, which makes it
    independent of the coloring choices.
    """
    n = len(graph.vertices)
    complete = all(
        len(graph.adj[v]) == n - 1 for v in graph.vertices
    )
    color: dict[int, int] = {}
    bipartite = True
    isolated = [v for v in graph.vertices if not graph.adj[v]]
    for comp in components(graph):
        if len(comp) == 1:
            continue
        root = comp[0]
        color[root] = 0
        queue = deque([root])
        while queue and bipartite:
            u = queue.popleft()
            for w in graph.adj[u]:
                if w not in color:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    bipartite = False
                    break
        if not bipartite:
            break
    if not bipartite:
        return PartiteStructure(False, None, None, complete)
    part0 = [v for v in graph.vertices if color.get(v) == 0]
    part1 = [v for v in graph.vertices if color.get(v) == 1]
    for v in isolated:
        (part0 if len(part0) <= len(part1) else part1).append(v)
    a, b = sorted((tuple(sorted(part0)), tuple(sorted(part1))), key=lambda p: (len(p), p))
    cb = None
    if a and b and not isolated and is_connected(graph) and len(graph.edges) == len(a) * len(b):
        cb = (len(a), len(b))
    return PartiteStructure(True, (a, b), cb, complete)


def is_planar(graph, cap: int = DEFAULT_EXACT_CAP) -> bool:
    """Exact planarity decision (left-right algorithm via networkx)."""
    _check_cap(graph, cap, "is_planar")
    g = nx.Graph()
    g.add_nodes_from(graph.vertices)
    g.add_edges_from(graph.edges)
    return bool(nx.check_planarity(g)[0])


# ---------------------------------------------------------------------------
# Combined report
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MetricsReport:
    connected: bool
    diameter: ExtendedNat
    girth: ExtendedNat
    clique_number: int
    chromatic_number: int
    bipartite: bool
    complete_bipartite: tuple[int, int] | None
    complete: bool
    planar: bool

    def to_json(self) -> dict:
        return {
            "connected": self.connected,
            "diameter": self.diameter.to_json(),
            "girth": self.girth.to_json(),
            "clique_number": self.clique_number,
            "chromatic_number": self.chromatic_number,
            "bipartite": self.bipartite,
            "complete_bipartite": list(self.complete_bipartite) if self.complete_bipartite else None,
            "complete": self.complete,
            "planar": self.planar,
        }


def metrics_report(graph, cap: int = DEFAULT_EXACT_CAP) -> MetricsReport:
    parts = partite_structure(graph)
    return MetricsReport(
        connected=is_connected(graph),
        diameter=diameter(graph),
        girth=girth(graph),
        clique_number=clique_number(graph, cap),
        chromatic_number=chromatic_number(graph, cap),
        bipartite=parts.bipartite,
        complete_bipartite=parts.complete_bipartite,
        complete=parts.complete,
        planar=is_planar(graph, cap),
    )
