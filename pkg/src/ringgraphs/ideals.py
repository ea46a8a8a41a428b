"""Ideals of finite rings: enumeration, lattice queries, quotients.

An ideal is a canonical membership set of element indices.  Two ideals are
equal exactly when their member sets (and owning ring) are equal; generator
lists are informational only.  Everything here is a pure function of
immutable inputs; per-ring results (the full ideal list, maximal ideals,
the Jacobson radical) are cached on the ring after first computation.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import CapExceededError, NotAnIdealError, RingMismatchError
from .rings import DEFAULT_ORDER_CAP, FiniteRing


@dataclass(frozen=True)
class IdealSet:
    """An ideal as a frozen membership set over element indices."""

    ring: FiniteRing = field(repr=False)
    members: frozenset[int]
    generators: tuple[int, ...] = field(default=(), compare=False)

    def __contains__(self, idx: int) -> bool:
        return idx in self.members

    def __len__(self) -> int:
        return len(self.members)

    def sorted_members(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    @property
    def is_zero(self) -> bool:
        return self.members == frozenset((self.ring.zero,))

    @property
    def is_proper(self) -> bool:
        return len(self.members) < self.ring.order

    def __repr__(self) -> str:
        return f"IdealSet({{{', '.join(str(m) for m in self.sorted_members())}}})"


def _require_same_ring(ring: FiniteRing, *ideals: IdealSet) -> None:
    for ideal in ideals:
        if ideal.ring is not ring:
            raise RingMismatchError(
                f"ideal of {ideal.ring.spec} used with ring {ring.spec}"
            )


def validate_ideal_members(ring: FiniteRing, members: frozenset[int]) -> None:
    """Raise NotAnIdealError naming the first closure failure."""
    if any(not 0 <= m < ring.order for m in members):
        raise NotAnIdealError(f"member outside element range of {ring.spec}")
    if ring.zero not in members:
        raise NotAnIdealError("ideal must contain 0")
    for a in sorted(members):
        for b in sorted(members):
            if ring.add(a, b) not in members:
                raise NotAnIdealError(
                    f"not closed under addition: {ring.label(a)} + {ring.label(b)} "
                    f"= {ring.label(ring.add(a, b))} is outside the set"
                )
        if ring.neg(a) not in members:
            raise NotAnIdealError(
                f"not closed under negation: -{ring.label(a)} is outside the set"
            )
    for r in range(ring.order):
        for a in sorted(members):
            if ring.mul(r, a) not in members:
                raise NotAnIdealError(
                    f"not closed under ring multiplication: {ring.label(r)} * {ring.label(a)} "
                    f"= {ring.label(ring.mul(r, a))} is outside the set"
                )


def ideal_from_members(ring: FiniteRing, members, generators: tuple[int, ...] = ()) -> IdealSet:
    """Validated IdealSet from an explicit member collection."""
    members = frozenset(int(m) for m in members)
    validate_ideal_members(ring, members)
    return IdealSet(ring, members, generators)


def additive_closure(ring: FiniteRing, seed) -> frozenset[int]:
    """Smallest additively closed set containing seed and 0."""
    closed = {ring.zero} | {int(s) for s in seed}
    work = list(closed)
    while work:
        a = work.pop()
        for b in list(closed):
            c = ring.add(a, b)
            if c not in closed:
                closed.add(c)
                work.append(c)
    return frozenset(closed)


def principal_ideal(ring: FiniteRing, x: int) -> IdealSet:
    """xR = {x*r : r in R}."""
    members = frozenset(int(v) for v in ring.mul_table[x])
    return IdealSet(ring, members, (x,))


def ideal_generated(ring: FiniteRing, gens) -> IdealSet:
    """Smallest ideal containing gens: the sum of their principal ideals."""
    gens = tuple(int(g) for g in gens)
    if not gens:
        raise ValueError("generator list must be nonempty")
    members = frozenset((ring.zero,))
    for g in gens:
        members = _sum_members(ring, members, frozenset(int(v) for v in ring.mul_table[g]))
    return IdealSet(ring, members, gens)


def scale_ideal(ring: FiniteRing, x: int, ideal: IdealSet) -> IdealSet:
    """xI = {x*i : i in I}; always an ideal again (xI = sum of (x*g)R)."""
    _require_same_ring(ring, ideal)
    members = scale_members(ring, x, ideal.members)
    gens = tuple(dict.fromkeys(ring.mul(x, g) for g in ideal.generators))
    if __debug__:
        assert ring.zero in members
    return IdealSet(ring, members, gens)


def scale_members(ring: FiniteRing, x: int, members: frozenset[int]) -> frozenset[int]:
    return frozenset(int(v) for v in ring.mul_table[x, sorted(members)])


def _sum_members(ring: FiniteRing, a: frozenset[int], b: frozenset[int]) -> frozenset[int]:
    block = ring.add_table[np.ix_(sorted(a), sorted(b))]
    return frozenset(int(v) for v in np.unique(block))


def ideal_sum(i: IdealSet, j: IdealSet) -> IdealSet:
    _require_same_ring(i.ring, j)
    return IdealSet(i.ring, _sum_members(i.ring, i.members, j.members),
                    tuple(dict.fromkeys(i.generators + j.generators)))


def ideal_product(i: IdealSet, j: IdealSet) -> IdealSet:
    """IJ: additive closure of the pairwise products."""
    _require_same_ring(i.ring, j)
    ring = i.ring
    block = ring.mul_table[np.ix_(sorted(i.members), sorted(j.members))]
    products = frozenset(int(v) for v in np.unique(block))
    return IdealSet(ring, additive_closure(ring, products))


def ideal_intersection(i: IdealSet, j: IdealSet) -> IdealSet:
    _require_same_ring(i.ring, j)
    return IdealSet(i.ring, i.members & j.members)


def ideal_ops(ring: FiniteRing, i: IdealSet, j: IdealSet, op: str) -> IdealSet:
    _require_same_ring(ring, i, j)
    if op == "sum":
        return ideal_sum(i, j)
    if op == "product":
        return ideal_product(i, j)
    if op == "intersection":
        return ideal_intersection(i, j)
    raise ValueError(f"unknown ideal op {op!r}")


def all_ideals(ring: FiniteRing, cap: int = DEFAULT_ORDER_CAP) -> tuple[IdealSet, ...]:
    """Every ideal of the ring, ascending by (size, members).

    Computed as the fixed-point closure of the principal ideals under
    pairwise sums, which reaches every ideal of a finite ring.
    """
    if ring.order > cap:
        raise CapExceededError(f"ideal enumeration needs order <= {cap}, ring has {ring.order}")
    if "all_ideals" not in ring._cache:
        principal = {frozenset(int(v) for v in ring.mul_table[x]) for x in range(ring.order)}
        known = set(principal)
        work = list(principal)
        while work:
            current = work.pop()
            for other in list(known):
                s = _sum_members(ring, current, other)
                if s not in known:
                    known.add(s)
                    work.append(s)
        ideals = tuple(
            IdealSet(ring, m, _greedy_generators(ring, m))
            for m in sorted(known, key=lambda m: (len(m), sorted(m)))
        )
        ring._cache["all_ideals"] = ideals
    return ring._cache["all_ideals"]


def _greedy_generators(ring: FiniteRing, members: frozenset[int]) -> tuple[int, ...]:
    gens: list[int] = []
    current = frozenset((ring.zero,))
    for m in sorted(members):
        if m not in current:
            gens.append(m)
            current = _sum_members(ring, current, frozenset(int(v) for v in ring.mul_table[m]))
        if current == members:
            break
    return tuple(gens) if gens else (ring.zero,)


def annihilator(ring: FiniteRing, ideal: IdealSet) -> IdealSet:
    """Ann_R(I) = {r : rI = 0}."""
    _require_same_ring(ring, ideal)
    cols = sorted(ideal.members)
    mask = (ring.mul_table[:, cols] == ring.zero).all(axis=1)
    return IdealSet(ring, frozenset(int(i) for i in np.nonzero(mask)[0]))


def maximal_ideals(ring: FiniteRing) -> tuple[IdealSet, ...]:
    """Proper ideals maximal under inclusion."""
    if "maximal_ideals" not in ring._cache:
        proper = [i for i in all_ideals(ring) if i.is_proper]
        maximal = tuple(
            i for i in proper
            if not any(i.members < j.members for j in proper)
        )
        ring._cache["maximal_ideals"] = maximal
    return ring._cache["maximal_ideals"]


def jacobson_radical(ring: FiniteRing) -> IdealSet:
    """Intersection of all maximal ideals."""
    if "jacobson_radical" not in ring._cache:
        members = frozenset(range(ring.order))
        for m in maximal_ideals(ring):
            members &= m.members
        ring._cache["jacobson_radical"] = IdealSet(ring, members)
    return ring._cache["jacobson_radical"]


def is_prime_ideal(ring: FiniteRing, ideal: IdealSet) -> bool:
    """I proper and ab in I implies a in I or b in I (exhaustive scan)."""
    _require_same_ring(ring, ideal)
    if not ideal.is_proper:
        raise ValueError("prime ideals are proper; got the whole ring")
    outside = sorted(set(range(ring.order)) - ideal.members)
    block = ring.mul_table[np.ix_(outside, outside)]
    return not bool(np.isin(block, sorted(ideal.members)).any())


def prime_ideals(ring: FiniteRing) -> tuple[IdealSet, ...]:
    if "prime_ideals" not in ring._cache:
        ring._cache["prime_ideals"] = tuple(
            i for i in all_ideals(ring) if i.is_proper and is_prime_ideal(ring, i)
        )
    return ring._cache["prime_ideals"]


def radical_of_ideal(ring: FiniteRing, ideal: IdealSet) -> IdealSet:
    """sqrt(I) = {x : x^k in I for some k >= 1}; k <= order suffices."""
    _require_same_ring(ring, ideal)
    members = set()
    for x in range(ring.order):
        power = x
        for _ in range(ring.order):
            if power in ideal.members:
                members.add(x)
                break
            power = ring.mul(power, x)
    return IdealSet(ring, frozenset(members))


def minimal_primes_over(ring: FiniteRing, ideal: IdealSet) -> tuple[IdealSet, ...]:
    """Primes containing I, minimal under inclusion among those."""
    _require_same_ring(ring, ideal)
    if not ideal.is_proper:
        raise ValueError("minimal primes are defined over proper ideals")
    over = [p for p in prime_ideals(ring) if ideal.members <= p.members]
    return tuple(p for p in over if not any(q.members < p.members for q in over))


def quotient_ring(ring: FiniteRing, ideal: IdealSet) -> tuple[FiniteRing, tuple[int, ...]]:
    """Coset ring R/I plus the projection map (element index -> coset index).

    Coset representatives are the least element indices; the quotient is
    rebuilt as a full FiniteRing and passes the same validation.
    """
    _require_same_ring(ring, ideal)
    if not ideal.is_proper:
        raise ValueError("cannot form the quotient by the whole ring")
    members = sorted(ideal.members)
    coset_of: dict[int, int] = {}
    reps: list[int] = []
    for e in range(ring.order):
        if e in coset_of:
            continue
        coset = sorted(int(v) for v in ring.add_table[e, members])
        rep_pos = len(reps)
        reps.append(coset[0])
        for c in coset:
            coset_of[c] = rep_pos
    q = len(reps)
    add = np.empty((q, q), dtype=np.int16)
    mul = np.empty((q, q), dtype=np.int16)
    for i, a in enumerate(reps):
        for j, b in enumerate(reps):
            add[i, j] = coset_of[ring.add(a, b)]
            mul[i, j] = coset_of[ring.mul(a, b)]
    labels = tuple(ring.label(r) for r in reps)
    spec = f"{ring.spec}/({','.join(str(m) for m in members)})"
    quotient = FiniteRing(spec, labels, add, mul)
    projection = tuple(coset_of[e] for e in range(ring.order))
    return quotient, projection


@dataclass(frozen=True)
class RingPredicates:
    is_local: bool
    is_field: bool
    is_reduced: bool
    is_zero_dimensional: bool


def ring_predicates(ring: FiniteRing) -> RingPredicates:
    """Structural predicates, each computed from the lattice, never assumed."""
    if "predicates" not in ring._cache:
        maxes = maximal_ideals(ring)
        is_local = len(maxes) == 1
        is_field = is_local and len(maxes[0]) == 1
        zero_ideal = IdealSet(ring, frozenset((ring.zero,)))
        is_reduced = radical_of_ideal(ring, zero_ideal).members == zero_ideal.members
        max_sets = {m.members for m in maxes}
        is_zero_dim = all(p.members in max_sets for p in prime_ideals(ring))
        ring._cache["predicates"] = RingPredicates(is_local, is_field, is_reduced, is_zero_dim)
    return ring._cache["predicates"]
