"""Ideal classifications: second, secondary, secondal, primal, and the
element sets W(I), S(I) and the ideal-based zero-divisor vertex set.

Definitions used here (all scans are exhaustive over the finite ring):

* W(I) = {a : aI != I};
* second: I != 0 and every rI is 0 or I;
* secondary: I != 0 and for every r, rI = I or some power of r kills I
  (the scaling chain rI, r^2 I, ... stabilizes within |R| steps);
* secondal: I != 0 and W(I) is an ideal, necessarily prime, called P;
* primal: proper I whose set S(I) of elements not prime to I is an ideal;
* J is second to I when IJ = I.

Second, secondary and secondal are undefined for the zero ideal, and
S(I) for the whole ring; callers report those combinations as n/a.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NotAnIdealError
from .ideals import (
    IdealSet,
    all_ideals,
    annihilator,
    ideal_generated,
    ideal_product,
    is_prime_ideal,
    radical_of_ideal,
    scale_members,
    validate_ideal_members,
)
from .rings import FiniteRing


def w_set(ring: FiniteRing, ideal: IdealSet) -> frozenset[int]:
    """W(I) = {a : aI != I}."""
    return frozenset(
        a for a in range(ring.order)
        if scale_members(ring, a, ideal.members) != ideal.members
    )


def is_second(ring: FiniteRing, ideal: IdealSet) -> bool:
    """I != 0 and rI is 0 or I for every r."""
    if ideal.is_zero:
        return False
    zero_set = frozenset((ring.zero,))
    return all(
        scale_members(ring, r, ideal.members) in (zero_set, ideal.members)
        for r in range(ring.order)
    )


def is_secondary(ring: FiniteRing, ideal: IdealSet) -> bool:
    """I != 0 and each r either fixes I or scales it to 0 eventually."""
    if ideal.is_zero:
        return False
    zero_set = frozenset((ring.zero,))
    for r in range(ring.order):
        current = scale_members(ring, r, ideal.members)
        if current == ideal.members:
            continue
        while True:
            nxt = scale_members(ring, r, current)
            if nxt == current:
                break
            current = nxt
        if current != zero_set:
            return False
    return True


def _is_ideal_members(ring: FiniteRing, members: frozenset[int]) -> bool:
    try:
        validate_ideal_members(ring, members)
    except NotAnIdealError:
        return False
    return True


def is_secondal(ring: FiniteRing, ideal: IdealSet) -> IdealSet | None:
    """The prime P = W(I) when W(I) is an ideal, else None.

    Primality of an ideal-shaped W(I) is automatic (the complement is
    multiplicatively closed); it is asserted by the verification harness
    rather than re-checked here.
    """
    if ideal.is_zero:
        raise ValueError("secondal is undefined for the zero ideal")
    w = w_set(ring, ideal)
    if _is_ideal_members(ring, w):
        return IdealSet(ring, w)
    return None


def s_set(ring: FiniteRing, ideal: IdealSet) -> frozenset[int]:
    """S(I): elements a with ra in I for some r outside I."""
    if not ideal.is_proper:
        raise ValueError("S(I) is defined for proper ideals")
    outside = [r for r in range(ring.order) if r not in ideal.members]
    return frozenset(
        a for a in range(ring.order)
        if any(ring.mul(r, a) in ideal.members for r in outside)
    )


def is_primal(ring: FiniteRing, ideal: IdealSet) -> bool:
    return _is_ideal_members(ring, s_set(ring, ideal))


def z_ideal_set(ring: FiniteRing, ideal: IdealSet) -> frozenset[int]:
    """Vertex set of the ideal zero-divisor graph, recomputed definitionally."""
    if not ideal.is_proper:
        raise ValueError("the ideal zero-divisor vertex set needs a proper ideal")
    outside = [x for x in range(ring.order) if x not in ideal.members]
    return frozenset(
        x for x in outside
        if any(ring.mul(x, y) in ideal.members for y in outside)
    )


def is_second_to(ring: FiniteRing, other: IdealSet, ideal: IdealSet) -> bool:
    """J is second to I when IJ = I."""
    return ideal_product(ideal, other).members == ideal.members


def second_to_witness(ring: FiniteRing, ideal: IdealSet) -> tuple[int, int] | None:
    """A vertex pair (x, y) of the ideal cozero graph with <x,y> second to I."""
    ann = annihilator(ring, ideal).members
    vertices = sorted(w_set(ring, ideal) - ann)
    for i, x in enumerate(vertices):
        for y in vertices[i + 1:]:
            if is_second_to(ring, ideal_generated(ring, (x, y)), ideal):
                return (x, y)
    return None


def is_comultiplication_ring(ring: FiniteRing) -> bool:
    """Every ideal N satisfies N = Ann(Ann(N))."""
    return all(
        annihilator(ring, annihilator(ring, n)).members == n.members
        for n in all_ideals(ring)
    )


@dataclass(frozen=True)
class ClassificationRecord:
    """Full classification of one ideal; None marks n/a combinations."""

    ideal: IdealSet
    w_set: frozenset[int]
    ann: IdealSet
    is_second: bool | None
    is_secondary: bool | None
    is_secondal: bool | None
    secondal_prime: IdealSet | None
    s_set: frozenset[int] | None
    is_primal: bool | None
    is_prime: bool | None
    is_radical: bool
    z_ideal_set: frozenset[int] | None = field(default=None)

    def to_json(self) -> dict:
        def na(value):
            return "n/a" if value is None else value

        def setlist(values):
            return "n/a" if values is None else sorted(values)

        if self.secondal_prime is not None:
            prime = sorted(self.secondal_prime.members)
        elif self.is_secondal is None:
            prime = "n/a"
        else:
            prime = None
        return {
            "ideal": sorted(self.ideal.members),
            "generators": list(self.ideal.generators),
            "w_set": sorted(self.w_set),
            "annihilator": sorted(self.ann.members),
            "is_second": na(self.is_second),
            "is_secondary": na(self.is_secondary),
            "is_secondal": na(self.is_secondal),
            "secondal_prime": prime,
            "s_set": setlist(self.s_set),
            "is_primal": na(self.is_primal),
            "is_prime": na(self.is_prime),
            "is_radical": self.is_radical,
            "z_ideal_set": setlist(self.z_ideal_set),
        }


def classification_record(ring: FiniteRing, ideal: IdealSet) -> ClassificationRecord:
    """Classify one ideal; out-of-domain classifications come back as None."""
    zero = ideal.is_zero
    proper = ideal.is_proper
    secondal_p = None if zero else is_secondal(ring, ideal)
    return ClassificationRecord(
        ideal=ideal,
        w_set=w_set(ring, ideal),
        ann=annihilator(ring, ideal),
        is_second=None if zero else is_second(ring, ideal),
        is_secondary=None if zero else is_secondary(ring, ideal),
        is_secondal=None if zero else (secondal_p is not None),
        secondal_prime=secondal_p,
        s_set=s_set(ring, ideal) if proper else None,
        is_primal=is_primal(ring, ideal) if proper else None,
        is_prime=is_prime_ideal(ring, ideal) if proper else None,
        is_radical=radical_of_ideal(ring, ideal).members == ideal.members,
        z_ideal_set=z_ideal_set(ring, ideal) if proper else None,
    )
