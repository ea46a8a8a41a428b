"""Exact invariants against naive exponential oracles and frozen examples."""

from __future__ import annotations

import itertools

import pytest

from ringgraphs import (
    INF,
    CapExceededError,
    ExtendedNat,
    SimpleGraph,
    all_ideals,
    build_ring,
    chromatic_number,
    clique_number,
    components,
    cozero_divisor_graph,
    diameter,
    distance,
    girth,
    ideal_cozero_divisor_graph,
    ideal_generated,
    ideal_zero_divisor_graph,
    is_connected,
    is_planar,
    jacobson_radical,
    metrics_report,
    partite_structure,
    r_partite,
    remove_vertices,
    zero_divisor_graph,
)
from oracles import (
    naive_chromatic_number,
    naive_clique_number,
    naive_diameter,
    naive_girth,
)


def complete_graph(n):
    return SimpleGraph.build(range(n), itertools.combinations(range(n), 2))


def complete_bipartite(m, n):
    return SimpleGraph.build(range(m + n), [(a, m + b) for a in range(m) for b in range(n)])


def small_corpus_graphs(max_vertices=8):
    for spec in ("Zn:4", "Zn:6", "Zn:8", "Zn:9", "Zn:10", "Zn:12", "Zn:15", "Zn:16",
                 "Zn:2xZn:2", "Zn:2xZn:4", "Zn:3xZn:3", "Zn:2xZn:2xZn:2", "gf:2^3"):
        ring = build_ring(spec)
        graphs = [zero_divisor_graph(ring), cozero_divisor_graph(ring)]
        for ideal in all_ideals(ring):
            graphs.append(ideal_cozero_divisor_graph(ring, ideal))
            if ideal.is_proper:
                graphs.append(ideal_zero_divisor_graph(ring, ideal))
        for g in graphs:
            if len(g.vertices) <= max_vertices:
                yield g


# -- ExtendedNat --------------------------------------------------------------

def test_extended_nat_total_order():
    assert ExtendedNat(3) == 3
    assert ExtendedNat(3) < ExtendedNat(5) < INF
    assert INF == INF and not INF < INF
    assert INF > 100 and ExtendedNat(2) <= 2
    assert repr(INF) == "inf" and repr(ExtendedNat(4)) == "4"
    assert INF.to_json() == "inf" and ExtendedNat(0).to_json() == 0
    assert INF.is_infinite and not ExtendedNat(1).is_infinite
    with pytest.raises(ValueError):
        ExtendedNat(-1)
    with pytest.raises(ValueError):
        INF.value


# -- connectivity and distances ------------------------------------------------

def test_connectivity_examples():
    z12 = build_ring("Zn:12")
    fig_b = ideal_cozero_divisor_graph(z12, ideal_generated(z12, (3,)))
    assert not is_connected(fig_b)
    assert is_connected(remove_vertices(fig_b, jacobson_radical(z12).members))
    assert is_connected(SimpleGraph.build((), ()))
    assert components(fig_b) == [[2, 10], [6]]


def test_distance_examples():
    z6 = build_ring("Zn:6")
    path = cozero_divisor_graph(z6)
    assert distance(path, 2, 4) == 2
    assert distance(path, 2, 2) == 0
    assert diameter(path) == 2
    z12 = build_ring("Zn:12")
    fig_b = ideal_cozero_divisor_graph(z12, ideal_generated(z12, (3,)))
    assert distance(fig_b, 2, 6) == INF
    assert diameter(fig_b) == INF
    with pytest.raises(ValueError):
        distance(path, 2, 5)


def test_diameter_degenerate():
    assert diameter(SimpleGraph.build((), ())) == 0
    assert diameter(SimpleGraph.build((7,), ())) == 0


def test_girth_examples():
    z12 = build_ring("Zn:12")
    assert girth(cozero_divisor_graph(z12)) == 4
    assert girth(cozero_divisor_graph(build_ring("Zn:6"))) == INF
    assert girth(complete_graph(3)) == 3
    assert girth(SimpleGraph.build(range(4), [(0, 1), (1, 2), (2, 3)])) == INF


def test_clique_examples():
    z12 = build_ring("Zn:12")
    assert clique_number(cozero_divisor_graph(z12)) == 2
    assert clique_number(complete_graph(5)) == 5
    assert clique_number(SimpleGraph.build(range(3), ())) == 1
    assert clique_number(SimpleGraph.build((), ())) == 0


def test_chromatic_examples():
    z12 = build_ring("Zn:12")
    assert chromatic_number(cozero_divisor_graph(z12)) == 2
    assert chromatic_number(complete_bipartite(3, 4)) == 2
    assert chromatic_number(complete_graph(4)) == 4
    assert chromatic_number(SimpleGraph.build((), ())) == 0
    assert chromatic_number(SimpleGraph.build(range(2), ())) == 1
    assert r_partite(complete_graph(4), 4) and not r_partite(complete_graph(4), 3)


def test_partite_structure_examples():
    z6 = build_ring("Zn:6")
    ps = partite_structure(cozero_divisor_graph(z6))
    assert ps.bipartite and ps.complete_bipartite == (1, 2)
    assert ps.parts == ((3,), (2, 4))
    z12 = build_ring("Zn:12")
    ps12 = partite_structure(cozero_divisor_graph(z12))
    assert ps12.bipartite and ps12.complete_bipartite is None
    k3 = partite_structure(complete_graph(3))
    assert k3.complete and not k3.bipartite
    assert partite_structure(SimpleGraph.build((), ())).bipartite


def test_complete_bipartite_needs_connectivity_and_nonempty_parts():
    two_edges = SimpleGraph.build(range(4), [(0, 1), (2, 3)])
    assert partite_structure(two_edges).complete_bipartite is None
    lone = SimpleGraph.build((5,), ())
    assert partite_structure(lone).complete_bipartite is None
    assert partite_structure(complete_bipartite(1, 1)).complete_bipartite == (1, 1)


def test_planarity_examples():
    assert not is_planar(complete_graph(5))
    assert not is_planar(complete_bipartite(3, 3))
    for n in range(5):
        for edges in _all_graphs_on(n):
            assert is_planar(SimpleGraph.build(range(n), edges))


def _all_graphs_on(n):
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield [pairs[i] for i in range(len(pairs)) if bits >> i & 1]


def test_caps_enforced():
    big = SimpleGraph.build(range(65), ())
    for fn in (clique_number, chromatic_number, is_planar):
        with pytest.raises(CapExceededError):
            fn(big)
    assert clique_number(big, cap=65) == 1


def test_metrics_report_json():
    z12 = build_ring("Zn:12")
    report = metrics_report(cozero_divisor_graph(z12)).to_json()
    assert report == {
        "connected": True,
        "diameter": 3,
        "girth": 4,
        "clique_number": 2,
        "chromatic_number": 2,
        "bipartite": True,
        "complete_bipartite": None,
        "complete": False,
        "planar": True,
    }


def test_empty_graph_conventions():
    report = metrics_report(SimpleGraph.build((), ()))
    assert report.connected and report.diameter == 0 and report.girth == INF
    assert report.clique_number == 0 and report.chromatic_number == 0
    assert report.planar and report.bipartite and report.complete_bipartite is None


# -- oracle agreement ----------------------------------------------------------

def test_metrics_match_naive_oracles_on_small_graphs():
    checked = 0
    for g in small_corpus_graphs():
        dia = naive_diameter(g.vertices, g.edges)
        assert diameter(g) == (INF if dia is None else dia)
        gir = naive_girth(g.vertices, g.edges)
        assert girth(g) == (INF if gir is None else gir)
        assert clique_number(g) == naive_clique_number(g.vertices, g.edges)
        chi = naive_chromatic_number(g.vertices, g.edges)
        if chi is None:
            assert chromatic_number(g) > 4
        else:
            assert chromatic_number(g) == chi
        checked += 1
    assert checked >= 40


def test_girth_matches_oracle_on_dense_synthetic_graphs():
    for n in range(3, 6):
        for edges in _all_graphs_on(n):
            g = SimpleGraph.build(range(n), edges)
            expected = naive_girth(g.vertices, g.edges)
            assert girth(g) == (INF if expected is None else expected)


# -- structural invariants ------------------------------------------------------

def test_chromatic_at_least_clique_and_triangle_iff_girth3():
    for g in small_corpus_graphs(max_vertices=12):
        clique = clique_number(g)
        chi = chromatic_number(g)
        assert chi >= clique
        assert (girth(g) == 3) == (clique >= 3)
        ps = partite_structure(g)
        if g.edges:
            assert ps.bipartite == (chi <= 2)
            if ps.bipartite:
                assert chi == clique == 2


def test_edge_bound_implies_nonplanar():
    g = complete_graph(6)  # 15 > 3*6-6 = 12
    assert len(g.edges) > 3 * len(g.vertices) - 6
    assert not is_planar(g)


def test_remove_vertices_monotonicity():
    z12 = build_ring("Zn:12")
    g = cozero_divisor_graph(z12)
    for drop in itertools.combinations(g.vertices, 2):
        sub = remove_vertices(g, drop)
        assert girth(sub) >= girth(g)
        assert clique_number(sub) <= clique_number(g)
