"""Graph constructions, identities, and deterministic emission."""

from __future__ import annotations

import itertools
import json
from pathlib import Path

import pytest

from ringgraphs import (
    all_ideals,
    build_ring,
    cozero_divisor_graph,
    emit_graph,
    ideal_cozero_divisor_graph,
    ideal_generated,
    ideal_zero_divisor_graph,
    is_second,
    jacobson_radical,
    principal_ideal,
    remove_vertices,
    zero_divisor_graph,
    IdealSet,
)
from oracles import (
    oracle_cozero_divisor_graph,
    oracle_ideal_cozero_divisor_graph,
    oracle_ideal_zero_divisor_graph,
    oracle_zero_divisor_graph,
)

GOLDEN = Path(__file__).parent / "golden"

Z12 = build_ring("Zn:12")
I3 = ideal_generated(Z12, (3,))

ORACLES = {
    "zero_div": oracle_zero_divisor_graph,
    "zero_div_ideal": oracle_ideal_zero_divisor_graph,
    "cozero": oracle_cozero_divisor_graph,
    "cozero_ideal": oracle_ideal_cozero_divisor_graph,
}


def test_z12_zero_divisor_graph_edges():
    g = zero_divisor_graph(Z12)
    assert g.vertices == (2, 3, 4, 6, 8, 9, 10)
    assert sorted(g.edges) == [
        (2, 6), (3, 4), (3, 8), (4, 6), (4, 9), (6, 8), (6, 10), (8, 9),
    ]


def test_z12_cozero_divisor_graph_edges():
    g = cozero_divisor_graph(Z12)
    assert g.vertices == (2, 3, 4, 6, 8, 9, 10)
    assert sorted(g.edges) == [
        (2, 3), (2, 9), (3, 4), (3, 8), (3, 10), (4, 6), (4, 9),
        (6, 8), (8, 9), (9, 10),
    ]


def test_z12_ideal_cozero_graph_single_edge():
    g = ideal_cozero_divisor_graph(Z12, I3)
    assert g.vertices == (2, 6, 10)
    assert g.edges == frozenset({(2, 10)})


def test_z12_ideal_zero_divisor_graph_empty():
    g = ideal_zero_divisor_graph(Z12, I3)
    assert g.vertices == ()
    assert g.edges == frozenset()


def test_field_graphs_empty():
    for spec in ("Zn:7", "gf:2^2"):
        ring = build_ring(spec)
        assert zero_divisor_graph(ring).vertices == ()
        assert cozero_divisor_graph(ring).vertices == ()


def test_z4_zero_divisor_graph_single_vertex():
    g = zero_divisor_graph(build_ring("Zn:4"))
    assert g.vertices == (2,)
    assert g.edges == frozenset()


def test_z6_cozero_path():
    g = cozero_divisor_graph(build_ring("Zn:6"))
    assert g.vertices == (2, 3, 4)
    assert sorted(g.edges) == [(2, 3), (3, 4)]


def test_z8_examples():
    z8 = build_ring("Zn:8")
    gz = ideal_zero_divisor_graph(z8, IdealSet(z8, frozenset((0, 4))))
    assert gz.vertices == (2, 6) and gz.edges == frozenset({(2, 6)})
    gco = ideal_cozero_divisor_graph(z8, principal_ideal(z8, 2))
    assert gco.vertices == (2, 6) and gco.edges == frozenset({(2, 6)})


def test_ideal_zero_graph_rejects_full_ideal():
    with pytest.raises(ValueError):
        ideal_zero_divisor_graph(Z12, ideal_generated(Z12, (1,)))


def test_ideal_cozero_accepts_zero_and_full():
    zero = IdealSet(Z12, frozenset((0,)))
    assert ideal_cozero_divisor_graph(Z12, zero).vertices == ()
    full = ideal_generated(Z12, (1,))
    base = cozero_divisor_graph(Z12)
    at_full = ideal_cozero_divisor_graph(Z12, full)
    assert at_full.vertices == base.vertices and at_full.edges == base.edges


@pytest.mark.parametrize("spec", ["Zn:4", "Zn:6", "Zn:8", "Zn:9", "Zn:10", "Zn:12",
                                  "Zn:2xZn:2", "Zn:2xZn:4", "gf:2^2", "gf:3^2"])
def test_graph_identities(spec):
    ring = build_ring(spec)
    zero = IdealSet(ring, frozenset((ring.zero,)))
    full = ideal_generated(ring, (ring.one,))
    g0 = ideal_zero_divisor_graph(ring, zero)
    gz = zero_divisor_graph(ring)
    assert g0.vertices == gz.vertices and g0.edges == gz.edges
    gr = ideal_cozero_divisor_graph(ring, full)
    gc = cozero_divisor_graph(ring)
    assert gr.vertices == gc.vertices and gr.edges == gc.edges


@pytest.mark.parametrize("spec", ["Zn:4", "Zn:6", "Zn:8", "Zn:9", "Zn:12",
                                  "Zn:2xZn:2", "Zn:2xZn:4", "Zn:2xZn:2xZn:2", "gf:2^3"])
def test_builders_match_definitional_oracles(spec):
    ring = build_ring(spec)
    assert (zero_divisor_graph(ring).vertices, zero_divisor_graph(ring).edges) == \
        oracle_zero_divisor_graph(ring)
    assert (cozero_divisor_graph(ring).vertices, cozero_divisor_graph(ring).edges) == \
        oracle_cozero_divisor_graph(ring)
    for ideal in all_ideals(ring):
        gco = ideal_cozero_divisor_graph(ring, ideal)
        assert (gco.vertices, gco.edges) == oracle_ideal_cozero_divisor_graph(ring, ideal.members)
        if ideal.is_proper:
            gz = ideal_zero_divisor_graph(ring, ideal)
            assert (gz.vertices, gz.edges) == oracle_ideal_zero_divisor_graph(ring, ideal.members)


@pytest.mark.parametrize("spec", ["Zn:4", "Zn:6", "Zn:8", "Zn:9", "Zn:12", "Zn:16",
                                  "Zn:2xZn:2", "Zn:2xZn:4", "gf:2^3"])
def test_empty_ideal_cozero_graph_iff_second(spec):
    ring = build_ring(spec)
    for ideal in all_ideals(ring):
        if ideal.is_zero:
            continue
        empty = not ideal_cozero_divisor_graph(ring, ideal).vertices
        assert empty == is_second(ring, ideal)


def test_adjacency_symmetric_irreflexive():
    g = cozero_divisor_graph(Z12)
    for a, b in g.edges:
        assert a < b
        assert g.has_edge(a, b) and g.has_edge(b, a)
    for v in g.vertices:
        assert not g.has_edge(v, v)
        assert v not in g.adj[v]


def test_remove_vertices_examples():
    g = ideal_cozero_divisor_graph(Z12, I3)
    trimmed = remove_vertices(g, jacobson_radical(Z12).members)
    assert trimmed.vertices == (2, 10)
    assert trimmed.edges == frozenset({(2, 10)})
    assert trimmed.removed == (6,)
    assert remove_vertices(g, ()).vertices == g.vertices
    assert remove_vertices(g, range(12)).vertices == ()


def test_remove_vertices_annotated_in_name():
    g = remove_vertices(ideal_cozero_divisor_graph(Z12, I3), (6,))
    assert g.name == "cozero_ideal_Zn_12_gen_3_minus_6"


@pytest.mark.parametrize("builder,fname", [
    (lambda: cozero_divisor_graph(Z12), "cozero_Zn_12.dot"),
    (lambda: ideal_cozero_divisor_graph(Z12, I3), "cozero_ideal_Zn_12_gen_3.dot"),
    (lambda: zero_divisor_graph(Z12), "zero_div_Zn_12.dot"),
    (lambda: ideal_zero_divisor_graph(Z12, I3), "zero_div_ideal_Zn_12_gen_3.dot"),
])
def test_dot_golden_files(builder, fname):
    assert emit_graph(builder(), "dot") == (GOLDEN / fname).read_text()


def test_json_schema_and_content():
    payload = json.loads(emit_graph(ideal_cozero_divisor_graph(Z12, I3), "json"))
    assert list(payload) == ["kind", "ring", "ideal", "vertices", "edges"]
    assert payload == {
        "kind": "cozero_ideal",
        "ring": "Zn:12",
        "ideal": [0, 3, 6, 9],
        "vertices": [2, 6, 10],
        "edges": [[2, 10]],
    }
    plain = json.loads(emit_graph(cozero_divisor_graph(Z12), "json"))
    assert plain["ideal"] is None


def test_emission_deterministic_across_fresh_builds():
    def render():
        ring = build_ring("Zn:12")
        ideal = ideal_generated(ring, (3,))
        g = ideal_cozero_divisor_graph(ring, ideal)
        return emit_graph(g, "dot"), emit_graph(g, "json")

    assert render() == render()


def test_unknown_format_rejected():
    with pytest.raises(ValueError):
        emit_graph(zero_divisor_graph(Z12), "gml")


def test_vertex_membership_recheckable():
    # every vertex of the ideal cozero graph satisfies its membership rule
    for spec in ("Zn:12", "Zn:2xZn:4"):
        ring = build_ring(spec)
        for ideal in all_ideals(ring):
            g = ideal_cozero_divisor_graph(ring, ideal)
            for x in range(ring.order):
                scaled = {ring.mul(x, m) for m in ideal.members}
                killed = all(ring.mul(x, m) == ring.zero for m in ideal.members)
                expected = not killed and scaled != set(ideal.members)
                assert (x in g.vertices) == expected
