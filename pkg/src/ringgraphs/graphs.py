"""The four ring-derived graphs and their deterministic serialization.

Vertex membership and adjacency come straight from the definitions:

* zero-divisor graph: vertices are the nonzero zero-divisors, x adjacent
  to y iff xy = 0;
* ideal zero-divisor graph (I proper): vertices are the x outside I with
  xy in I for some y outside I, adjacency xy in I;
* cozero-divisor graph: vertices are the nonzero non-units, x adjacent to
  y iff x is not in yR and y is not in xR;
* ideal cozero-divisor graph (any I): vertices are the x outside Ann(I)
  with xI != I, adjacency x not in yI and y not in xI.

Graphs are immutable; DOT and JSON output are byte-deterministic.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .ideals import IdealSet, annihilator, scale_members
from .rings import FiniteRing

KIND_ZERO = "zero_div"
KIND_ZERO_IDEAL = "zero_div_ideal"
KIND_COZERO = "cozero"
KIND_COZERO_IDEAL = "cozero_ideal"


@dataclass(frozen=True)
class RingGraph:
    """An undirected simple graph over ring element indices."""

    kind: str
    ring: FiniteRing = field(repr=False)
    ideal: IdealSet | None
    vertices: tuple[int, ...]
    edges: frozenset[tuple[int, int]]       # pairs (a, b) with a < b
    removed: tuple[int, ...] = ()           # vertices deleted from the original

    @cached_property
    def adj(self) -> dict[int, frozenset[int]]:
        nbrs: dict[int, set[int]] = {v: set() for v in self.vertices}
        for a, b in self.edges:
            nbrs[a].add(b)
            nbrs[b].add(a)
        return {v: frozenset(nbrs[v]) for v in self.vertices}

    def has_edge(self, a: int, b: int) -> bool:
        return (a, b) in self.edges if a < b else (b, a) in self.edges

    @property
    def name(self) -> str:
        parts = [self.kind, self.ring.spec]
        if self.ideal is not None:
            if self.ideal.generators:
                parts.append("gen_" + "_".join(str(g) for g in self.ideal.generators))
            else:
                parts.append("elems_" + "_".join(str(m) for m in self.ideal.sorted_members()))
        if self.removed:
            parts.append("minus_" + "_".join(str(v) for v in self.removed))
        return re.sub(r"[^0-9A-Za-z_]", "_", "_".join(parts))


def _edges_from_predicate(vertices, adjacent) -> frozenset[tuple[int, int]]:
    out = set()
    for i, a in enumerate(vertices):
        for b in vertices[i + 1:]:
            if adjacent(a, b):
                out.add((a, b))
    return frozenset(out)


def zero_divisor_graph(ring: FiniteRing) -> RingGraph:
    """Vertices Z*(R); adjacency xy = 0."""
    vertices = tuple(sorted(ring.zero_divisors() - {ring.zero}))
    edges = _edges_from_predicate(vertices, lambda a, b: ring.mul(a, b) == ring.zero)
    return RingGraph(KIND_ZERO, ring, None, vertices, edges)


def ideal_zero_divisor_graph(ring: FiniteRing, ideal: IdealSet) -> RingGraph:
    """Vertices {x outside I : xy in I for some y outside I}; adjacency xy in I."""
    if not ideal.is_proper:
        raise ValueError("the ideal zero-divisor graph needs a proper ideal")
    members = ideal.members
    outside = [x for x in range(ring.order) if x not in members]
    outside_arr = np.array(outside, dtype=np.int16)
    member_list = sorted(members)
    vertices = tuple(
        x for x in outside
        if bool(np.isin(ring.mul_table[x, outside_arr], member_list).any())
    )
    edges = _edges_from_predicate(vertices, lambda a, b: ring.mul(a, b) in members)
    return RingGraph(KIND_ZERO_IDEAL, ring, ideal, vertices, edges)


def cozero_divisor_graph(ring: FiniteRing) -> RingGraph:
    """Vertices W*(R); adjacency x not in yR and y not in xR."""
    vertices = tuple(sorted(ring.nonzero_nonunits()))
    principal = {x: frozenset(int(v) for v in ring.mul_table[x]) for x in vertices}
    edges = _edges_from_predicate(
        vertices, lambda a, b: a not in principal[b] and b not in principal[a]
    )
    return RingGraph(KIND_COZERO, ring, None, vertices, edges)


def ideal_cozero_divisor_graph(ring: FiniteRing, ideal: IdealSet) -> RingGraph:
    """Vertices {x outside Ann(I) : xI != I}; adjacency x not in yI and y not in xI.

    I may be anything: I = R reproduces the cozero-divisor graph, and
    I = 0 gives the empty graph (the annihilator swallows every element).
    """
    ann = annihilator(ring, ideal).members
    scaled = {
        x: scale_members(ring, x, ideal.members)
        for x in range(ring.order) if x not in ann
    }
    vertices = tuple(sorted(x for x, s in scaled.items() if s != ideal.members))
    edges = _edges_from_predicate(
        vertices, lambda a, b: a not in scaled[b] and b not in scaled[a]
    )
    return RingGraph(KIND_COZERO_IDEAL, ring, ideal, vertices, edges)


def remove_vertices(graph: RingGraph, drop) -> RingGraph:
    """Induced subgraph on V(G) minus drop; the deletion is recorded."""
    dropped = set(int(d) for d in drop) & set(graph.vertices)
    vertices = tuple(v for v in graph.vertices if v not in dropped)
    keep = set(vertices)
    edges = frozenset(e for e in graph.edges if e[0] in keep and e[1] in keep)
    return RingGraph(
        graph.kind, graph.ring, graph.ideal, vertices, edges,
        removed=tuple(sorted(set(graph.removed) | dropped)),
    )


def emit_graph(graph: RingGraph, fmt: str) -> str:
    """Serialize to DOT or JSON; output is byte-deterministic."""
    if fmt == "dot":
        return _emit_dot(graph)
    if fmt == "json":
        return _emit_json(graph)
    raise ValueError(f"unknown graph format {fmt!r}")


def _emit_dot(graph: RingGraph) -> str:
    lines = [f"graph {graph.name} {{"]
    label = graph.ring.label
    for v in graph.vertices:
        lines.append(f'  "{label(v)}";')
    for a, b in sorted(graph.edges):
        lines.append(f'  "{label(a)}" -- "{label(b)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _emit_json(graph: RingGraph) -> str:
    payload = {
        "kind": graph.kind,
        "ring": graph.ring.spec,
        "ideal": list(graph.ideal.sorted_members()) if graph.ideal is not None else None,
        "vertices": list(graph.vertices),
        "edges": [list(e) for e in sorted(graph.edges)],
    }
    return json.dumps(payload, indent=2) + "\n"
