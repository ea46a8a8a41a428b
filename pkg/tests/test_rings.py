"""Ring construction, validation, and arithmetic."""

from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from ringgraphs import (
    CapExceededError,
    Element,
    RingAxiomError,
    RingMismatchError,
    RingSpecError,
    build_ring,
    parse_ring_spec,
)


@pytest.mark.parametrize("text", [
    "Zn:12",
    "Zn:2xZn:3",
    "Zn:2xZn:2xZn:4",
    "gf:2^3",
    "polyquot:2:1,1,1",
    "table:/tmp/ring.txt",
])
def test_spec_round_trip(text):
    spec = parse_ring_spec(text)
    assert parse_ring_spec(str(spec)) == spec
    assert str(spec) == text


@given(st.integers(min_value=2, max_value=500))
def test_cyclic_spec_round_trip(n):
    spec = parse_ring_spec(f"Zn:{n}")
    assert str(spec) == f"Zn:{n}"
    assert parse_ring_spec(str(spec)) == spec


def test_gf_exponent_one_normalizes_to_cyclic():
    assert parse_ring_spec("gf:7^1") == parse_ring_spec("Zn:7")


@pytest.mark.parametrize("bad", [
    "Zn:1", "Zn:x", "", "gf:4^2", "gf:6", "polyquot:2:1", "nope:3",
    "Zn:2xZn:2xZn:2xtable:/x",
])
def test_bad_specs_rejected(bad):
    with pytest.raises(RingSpecError):
        parse_ring_spec(bad)


def test_cyclic_arithmetic():
    ring = build_ring("Zn:12")
    assert ring.order == 12
    assert ring.add(1, 11) == 0
    assert ring.mul(10, 3) == 6
    assert ring.labels == tuple(str(i) for i in range(12))
    for x in range(12):
        assert ring.add(x, ring.neg(x)) == ring.zero


def test_pow_by_squaring():
    z8 = build_ring("Zn:8")
    assert z8.pow(2, 3) == 0
    assert z8.pow(3, 0) == z8.one
    assert z8.pow(5, 7) == pow(5, 7, 8)


@given(st.integers(min_value=2, max_value=40), st.data())
def test_cyclic_tables_match_int_arithmetic(n, data):
    ring = build_ring(f"Zn:{n}")
    a = data.draw(st.integers(min_value=0, max_value=n - 1))
    b = data.draw(st.integers(min_value=0, max_value=n - 1))
    assert ring.add(a, b) == (a + b) % n
    assert ring.mul(a, b) == (a * b) % n


def test_product_isomorphic_to_z6_by_bijection_search():
    """Z_2 x Z_3 is isomorphic to Z_6, found by scanning bijections fixing 0, 1."""
    prod = build_ring("Zn:2xZn:3")
    z6 = build_ring("Zn:6")
    others = [i for i in range(6) if i not in (prod.zero, prod.one)]
    targets = [i for i in range(6) if i not in (z6.zero, z6.one)]
    found = None
    for perm in itertools.permutations(targets):
        phi = {prod.zero: z6.zero, prod.one: z6.one}
        phi.update(dict(zip(others, perm)))
        if all(
            phi[prod.add(a, b)] == z6.add(phi[a], phi[b])
            and phi[prod.mul(a, b)] == z6.mul(phi[a], phi[b])
            for a in range(6) for b in range(6)
        ):
            found = phi
            break
    assert found is not None


def test_product_labels_and_units():
    ring = build_ring("Zn:2xZn:2")
    assert ring.order == 4
    assert sorted(ring.labels) == ["(0,0)", "(0,1)", "(1,0)", "(1,1)"]
    assert ring.units() == {ring.one}


def test_galois_field_of_order_4():
    gf4 = build_ring("gf:2^2")
    assert gf4.order == 4
    # every nonzero element is a unit
    assert gf4.units() == frozenset(range(4)) - {gf4.zero}
    assert "x" in gf4.labels


def test_polyquot_allows_reducible_modulus():
    # x^2 + 1 = (x+1)^2 over F_2: the quotient has a nilpotent
    ring = build_ring("polyquot:2:1,0,1")
    assert ring.order == 4
    nilpotent = [x for x in range(4) if x != ring.zero and ring.mul(x, x) == ring.zero]
    assert nilpotent


def test_units_and_zero_divisors_examples():
    assert sorted(build_ring("Zn:12").units()) == [1, 5, 7, 11]
    assert sorted(build_ring("Zn:5").units()) == [1, 2, 3, 4]
    assert sorted(build_ring("Zn:12").zero_divisors()) == [0, 2, 3, 4, 6, 8, 9, 10]
    assert sorted(build_ring("Zn:7").zero_divisors()) == [0]
    assert sorted(build_ring("Zn:4").zero_divisors()) == [0, 2]


def test_units_zero_divisors_brute_force_agreement():
    for spec in ("Zn:9", "Zn:10", "Zn:2xZn:4", "gf:3^2", "polyquot:2:1,1,1"):
        ring = build_ring(spec)
        units = {
            x for x in range(ring.order)
            if any(ring.mul(x, y) == ring.one for y in range(ring.order))
        }
        zdiv = {
            x for x in range(ring.order)
            if any(ring.mul(x, y) == ring.zero for y in range(ring.order) if y != ring.zero)
        }
        assert ring.units() == units
        assert ring.zero_divisors() == zdiv


def test_table_ring_round_trip(tmp_path):
    z4 = build_ring("Zn:4")
    path = tmp_path / "z4.txt"
    rows = ["4"]
    rows += [" ".join(str(z4.add(a, b)) for b in range(4)) for a in range(4)]
    rows += [" ".join(str(z4.mul(a, b)) for b in range(4)) for a in range(4)]
    path.write_text("\n".join(rows) + "\n")
    ring = build_ring(f"table:{path}")
    assert ring.order == 4
    assert ring.mul(2, 2) == 0
    assert ring.zero == 0 and ring.one == 1


def test_table_ring_non_associative_rejected(tmp_path):
    z4 = build_ring("Zn:4")
    add = np.array(z4.add_table)
    mul = np.array(z4.mul_table)
    mul[2, 3] = 1  # breaks commutativity/associativity
    path = tmp_path / "broken.txt"
    rows = ["4"]
    rows += [" ".join(str(add[a, b]) for b in range(4)) for a in range(4)]
    rows += [" ".join(str(mul[a, b]) for b in range(4)) for a in range(4)]
    path.write_text("\n".join(rows) + "\n")
    with pytest.raises(RingAxiomError) as err:
        build_ring(f"table:{path}")
    assert err.value.witness  # names a concrete witness tuple


def test_table_ring_bad_shape_rejected(tmp_path):
    path = tmp_path / "short.txt"
    path.write_text("3 0 1 2\n")
    with pytest.raises(RingSpecError):
        build_ring(f"table:{path}")


def test_trivial_ring_rejected(tmp_path):
    path = tmp_path / "unit.txt"
    path.write_text("1 0 0\n")
    with pytest.raises((RingAxiomError, RingSpecError)):
        build_ring(f"table:{path}")


def test_order_cap():
    with pytest.raises(CapExceededError):
        build_ring("Zn:300")
    build_ring("Zn:300", order_cap=300)


def test_element_operations():
    ring = build_ring("Zn:12")
    two, three = ring.element(2), ring.element(3)
    assert (two + three).idx == 5
    assert (two * three).idx == 6
    assert (-three).idx == 9
    assert (two ** 3).idx == 8
    assert (two - three).idx == 11
    assert str(ring.element(7)) == "7"


def test_element_ring_mismatch():
    a = build_ring("Zn:6").element(2)
    b = build_ring("Zn:6").element(2)
    with pytest.raises(RingMismatchError):
        _ = a + b


def test_associativity_validated_everywhere():
    # construction re-checks the axioms; spot-check commutativity/distributivity
    for spec in ("Zn:8", "Zn:2xZn:3", "gf:2^3", "polyquot:3:1,0,1"):
        ring = build_ring(spec)
        n = ring.order
        for a, b, c in itertools.product(range(n), repeat=3):
            assert ring.mul(a, ring.add(b, c)) == ring.add(ring.mul(a, b), ring.mul(a, c))
            assert ring.mul(ring.mul(a, b), c) == ring.mul(a, ring.mul(b, c))


def test_element_wrapper_range_check():
    ring = build_ring("Zn:6")
    with pytest.raises(ValueError):
        ring.element(6)
    assert isinstance(ring.element(5), Element)
