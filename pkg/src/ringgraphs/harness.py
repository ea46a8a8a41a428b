"""Structural property checks replayed over generated ring corpora.

Each check C01..C29 is an executable property: a tuple space (rings,
ring/ideal pairs, ...), a hypothesis evaluator and a conclusion evaluator,
kept separate so hypothesis-satisfaction counts and vacuity are reported
honestly.  Violations are collected as data with witnesses, never raised.

Six checks (C07, C08, C09, C11, C12, C14) hypothesize a proper ideal with
zero annihilator.  Over finite rings every proper ideal has a nonzero
annihilator, so those checks are provably vacuous on any corpus; each one
therefore carries a companion row (id suffix ``-companion``) that
exercises the same machinery at I = R, where the annihilator is trivially
zero.  C30 audits exactly this pattern and the underlying structural fact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .classify import (
    is_comultiplication_ring,
    is_second,
    is_secondary,
    is_secondal,
    second_to_witness,
    w_set,
)
from .errors import NotAnIdealError, RingSpecError
from .graphs import (
    RingGraph,
    cozero_divisor_graph,
    ideal_cozero_divisor_graph,
    ideal_zero_divisor_graph,
    remove_vertices,
    zero_divisor_graph,
)
from .ideals import (
    IdealSet,
    all_ideals,
    annihilator,
    ideal_generated,
    ideal_product,
    is_prime_ideal,
    jacobson_radical,
    maximal_ideals,
    minimal_primes_over,
    prime_ideals,
    quotient_ring,
    radical_of_ideal,
    ring_predicates,
    validate_ideal_members,
)
from .metrics import (
    chromatic_number,
    diameter,
    girth,
    clique_number,
    is_connected,
    is_planar,
    partite_structure,
)
from .rings import FiniteRing, build_ring, parse_ring_spec

PAIR_SPACE_ORDER_CAP = 64
AUDITED_VACUOUS = ("C07", "C08", "C09", "C11", "C12", "C14")


# ---------------------------------------------------------------------------
# Corpus generation
# ---------------------------------------------------------------------------

KNOWN_FAMILIES = ("cyclic", "products", "galois")


@dataclass(frozen=True)
class CorpusConfig:
    """Which rings to generate and how far to quantify."""

    families: tuple[str, ...] = ("cyclic",)
    max_order: int = 36
    max_cyclic_n: int = 36
    custom_specs: tuple[str, ...] = ()
    include_full_ideal_quantifier: bool = False

    def __post_init__(self):
        unknown = [f for f in self.families if f not in KNOWN_FAMILIES]
        if unknown:
            raise RingSpecError(f"unknown corpus families: {unknown}")
        if not self.families and not self.custom_specs:
            raise RingSpecError("corpus config needs at least one family or custom spec")
        if self.max_order > 256 or self.max_cyclic_n > 256:
            raise RingSpecError("corpus orders are capped at 256")

    def to_json(self) -> dict:
        return {
            "families": list(self.families),
            "max_order": self.max_order,
            "max_cyclic_n": self.max_cyclic_n,
            "custom_specs": list(self.custom_specs),
            "include_full_ideal_quantifier": self.include_full_ideal_quantifier,
        }


def _product_factor_tuples(max_order: int) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []

    def rec(prod: int, minf: int, acc: list[int]) -> None:
        for f in range(minf, max_order + 1):
            if prod * f > max_order:
                break
            acc.append(f)
            if len(acc) >= 2:
                out.append(tuple(acc))
            rec(prod * f, f, acc)
            acc.pop()

    rec(1, 2, [])
    out.sort(key=lambda t: (_prod(t), t))
    return out


def _prod(factors: tuple[int, ...]) -> int:
    p = 1
    for f in factors:
        p *= f
    return p


def _primes_upto(n: int) -> list[int]:
    return [p for p in range(2, n + 1) if all(p % d for d in range(2, int(p**0.5) + 1))]


def generate_corpus(config: CorpusConfig) -> list[FiniteRing]:
    """Deterministic ring list: cyclic, then products in normal form
    (ascending factors), then Galois fields with exponent >= 2, then any
    custom specs; duplicates by canonical spec string are dropped."""
    specs: list[str] = []
    if "cyclic" in config.families:
        specs.extend(f"Zn:{n}" for n in range(2, config.max_cyclic_n + 1))
    if "products" in config.families:
        specs.extend(
            "x".join(f"Zn:{f}" for f in factors)
            for factors in _product_factor_tuples(config.max_order)
        )
    if "galois" in config.families:
        fields = []
        for p in _primes_upto(config.max_order):
            k = 2
            while p**k <= config.max_order:
                fields.append((p**k, p, k))
                k += 1
        fields.sort()
        specs.extend(f"gf:{p}^{k}" for _, p, k in fields)
    specs.extend(str(parse_ring_spec(s)) for s in config.custom_specs)
    return [build_ring(s) for s in dict.fromkeys(specs)]


# ---------------------------------------------------------------------------
# Per-ring evaluation context (memoizes everything the checks share)
# ---------------------------------------------------------------------------

class RingCtx:
    """Caches per-ring data shared by the checks; keys are member sets."""

    def __init__(self, ring: FiniteRing, pairs_enabled: bool | None = None):
        self.ring = ring
        self.ideals = all_ideals(ring)
        self.zero_ideal = self.ideals[0]
        self.full_ideal = self.ideals[-1]
        self.predicates = ring_predicates(ring)
        self.maximal = maximal_ideals(ring)
        self.jacobson = jacobson_radical(ring)
        if pairs_enabled is None:
            pairs_enabled = ring.order <= PAIR_SPACE_ORDER_CAP
        self.pairs_enabled = pairs_enabled
        self._memo: dict = {}

    def _get(self, key, factory):
        if key not in self._memo:
            self._memo[key] = factory()
        return self._memo[key]

    # -- ideal-derived data --------------------------------------------------

    def ann(self, ideal: IdealSet) -> IdealSet:
        return self._get(("ann", ideal.members), lambda: annihilator(self.ring, ideal))

    def w(self, ideal: IdealSet) -> frozenset[int]:
        return self._get(("w", ideal.members), lambda: w_set(self.ring, ideal))

    def radical(self, ideal: IdealSet) -> frozenset[int]:
        return self._get(
            ("radical", ideal.members), lambda: radical_of_ideal(self.ring, ideal).members
        )

    def second(self, ideal: IdealSet) -> bool:
        return self._get(("second", ideal.members), lambda: is_second(self.ring, ideal))

    def secondary(self, ideal: IdealSet) -> bool:
        return self._get(("secondary", ideal.members), lambda: is_secondary(self.ring, ideal))

    def secondal(self, ideal: IdealSet) -> IdealSet | None:
        return self._get(("secondal", ideal.members), lambda: is_secondal(self.ring, ideal))

    def second_ideals(self) -> tuple[IdealSet, ...]:
        return self._get(
            "second_ideals",
            lambda: tuple(i for i in self.ideals if not i.is_zero and self.second(i)),
        )

    def z_vertices(self, members: frozenset[int]) -> frozenset[int]:
        """{x outside M : xy in M for some y outside M}; empty when M = R."""
        def compute():
            outside = [x for x in range(self.ring.order) if x not in members]
            return frozenset(
                x for x in outside
                if any(self.ring.mul(x, y) in members for y in outside)
            )
        return self._get(("zv", members), compute)

    # -- graphs ---------------------------------------------------------------

    def cozero_graph(self) -> RingGraph:
        return self._get("cozero", lambda: cozero_divisor_graph(self.ring))

    def zero_graph(self) -> RingGraph:
        return self._get("zero", lambda: zero_divisor_graph(self.ring))

    def cozero_ideal_graph(self, ideal: IdealSet) -> RingGraph:
        return self._get(
            ("gco", ideal.members), lambda: ideal_cozero_divisor_graph(self.ring, ideal)
        )

    def zero_ideal_graph(self, ideal: IdealSet) -> RingGraph:
        return self._get(
            ("gz", ideal.members), lambda: ideal_zero_divisor_graph(self.ring, ideal)
        )

    def cozero_ideal_minus_j(self, ideal: IdealSet) -> RingGraph:
        return self._get(
            ("gco-j", ideal.members),
            lambda: remove_vertices(self.cozero_ideal_graph(ideal), self.jacobson.members),
        )

    def cozero_minus_j(self) -> RingGraph:
        return self._get(
            "cozero-j", lambda: remove_vertices(self.cozero_graph(), self.jacobson.members)
        )

    def quotient(self, members: frozenset[int]):
        """(quotient ring, projection) for a proper member set."""
        return self._get(("quot", members), lambda: quotient_ring(
            self.ring, IdealSet(self.ring, members)
        ))

    # -- ring-level facts ------------------------------------------------------

    def comultiplication(self) -> bool:
        return self._get("comult", lambda: is_comultiplication_ring(self.ring))

    def covered_by_zero_divisors_and_units(self) -> bool:
        def compute():
            covered = self.ring.zero_divisors() | self.ring.units()
            return len(covered) == self.ring.order
        return self._get("zu", compute)

    def radical_avoidance(self) -> bool:
        """For every a in J(R) there are m in Max(R), b in m minus J(R)
        with a outside bR.  Evaluated literally and exhaustively; a = 0
        always lies in bR, so this holds on no ring with J(R) nonempty."""
        def compute():
            principal_sets = []
            for m in self.maximal:
                for b in sorted(m.members - self.jacobson.members):
                    principal_sets.append(
                        frozenset(int(v) for v in self.ring.mul_table[b])
                    )
            return all(
                any(a not in pr for pr in principal_sets)
                for a in sorted(self.jacobson.members)
            )
        return self._get("radical_avoidance", compute)

    def is_ideal_members(self, members: frozenset[int]) -> bool:
        try:
            validate_ideal_members(self.ring, members)
        except NotAnIdealError:
            return False
        return True


# ---------------------------------------------------------------------------
# Check results
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    ring: str
    ideals: tuple[tuple[int, ...], ...]
    detail: str

    def to_json(self) -> dict:
        return {"ring": self.ring, "ideals": [list(i) for i in self.ideals], "detail": self.detail}


@dataclass
class CheckResult:
    check_id: str
    description: str
    examined: int = 0
    hypothesis_hits: int = 0
    violations: list[Violation] = field(default_factory=list)

    @property
    def vacuous(self) -> bool:
        return self.hypothesis_hits == 0

    def to_json(self) -> dict:
        return {
            "id": self.check_id,
            "paper_ref": self.description,
            "examined": self.examined,
            "hypothesis_hits": self.hypothesis_hits,
            "vacuous": self.vacuous,
            "violations": [v.to_json() for v in self.violations],
        }


@dataclass
class VerificationReport:
    config: CorpusConfig | None
    results: list[CheckResult]
    overall_pass: bool

    def result(self, check_id: str) -> CheckResult:
        for r in self.results:
            if r.check_id == check_id:
                return r
        raise KeyError(check_id)

    def to_json(self) -> dict:
        return {
            "config": self.config.to_json() if self.config else None,
            "results": [r.to_json() for r in self.results],
            "overall_pass": self.overall_pass,
        }


@dataclass(frozen=True)
class CheckDef:
    check_id: str
    description: str
    space: Callable[[RingCtx], Iterable[tuple]]
    hypothesis: Callable[[RingCtx, tuple], bool]
    conclusion: Callable[[RingCtx, tuple], str | None]


# ---------------------------------------------------------------------------
# Tuple spaces
# ---------------------------------------------------------------------------

def _space_ring(ctx: RingCtx):
    yield ()


def _space_nonzero(ctx: RingCtx):
    for i in ctx.ideals:
        if not i.is_zero:
            yield (i,)


def _space_proper(ctx: RingCtx):
    for i in ctx.ideals:
        if i.is_proper:
            yield (i,)


def _space_nonzero_proper(ctx: RingCtx):
    for i in ctx.ideals:
        if i.is_proper and not i.is_zero:
            yield (i,)


def _space_nonzero_ordered_pairs(ctx: RingCtx):
    if not ctx.pairs_enabled:
        return
    nonzero = [i for i in ctx.ideals if not i.is_zero]
    for i in nonzero:
        for j in nonzero:
            yield (i, j)


def _space_nonzero_unordered_pairs(ctx: RingCtx):
    if not ctx.pairs_enabled:
        return
    nonzero = [i for i in ctx.ideals if not i.is_zero]
    for a in range(len(nonzero)):
        for b in range(a, len(nonzero)):
            yield (nonzero[a], nonzero[b])


def _space_second_pairs(ctx: RingCtx):
    seconds = ctx.second_ideals()
    for a in range(len(seconds)):
        for b in range(a, len(seconds)):
            yield (seconds[a], seconds[b])


def _space_ideal_prime_pairs(ctx: RingCtx):
    primes = prime_ideals(ctx.ring)
    for i in ctx.ideals:
        if i.is_zero:
            continue
        for p in primes:
            yield (i, p)


def _always(ctx: RingCtx, tup) -> bool:
    return True


def _ideals_of(tup) -> tuple[tuple[int, ...], ...]:
    return tuple(t.sorted_members() for t in tup if isinstance(t, IdealSet))


# ---------------------------------------------------------------------------
# The checks
# ---------------------------------------------------------------------------

def _c01_concl(ctx, tup):
    (ideal,) = tup
    empty = not ctx.cozero_ideal_graph(ideal).vertices
    second = ctx.second(ideal)
    if empty != second:
        return (
            f"second={second} but the ideal cozero graph has "
            f"{len(ctx.cozero_ideal_graph(ideal).vertices)} vertices"
        )
    return None


def _c02_concl(ctx, tup):
    (ideal,) = tup
    if not is_connected(ctx.cozero_ideal_minus_j(ideal)):
        return "graph minus J(R) is disconnected"
    return None


def _non_local(ctx, tup) -> bool:
    return not ctx.predicates.is_local


def _c03_concl(ctx, tup):
    (ideal,) = tup
    d = diameter(ctx.cozero_ideal_minus_j(ideal))
    if d > 2:
        return f"diameter of the graph minus J(R) is {d}"
    return None


def _c04_hyp(ctx, tup) -> bool:
    return not ctx.predicates.is_local and ctx.radical_avoidance()


def _c04_concl(ctx, tup):
    (ideal,) = tup
    g = ctx.cozero_ideal_graph(ideal)
    if not is_connected(g):
        return "graph is disconnected"
    d = diameter(g)
    if d > 3:
        return f"diameter is {d}"
    return None


def _c05_concl(ctx, tup):
    (ideal,) = tup
    g = girth(ctx.cozero_ideal_minus_j(ideal))
    if not g.is_infinite and g > 5:
        return f"girth of the graph minus J(R) is {g}"
    return None


def _c06_hyp(ctx, tup) -> bool:
    (ideal,) = tup
    contains = set(ctx.cozero_graph().vertices) <= set(ctx.cozero_ideal_graph(ideal).vertices)
    return contains or ctx.ann(ideal).is_zero


def _c06_concl(ctx, tup):
    (ideal,) = tup
    contains = set(ctx.cozero_graph().vertices) <= set(ctx.cozero_ideal_graph(ideal).vertices)
    ann0 = ctx.ann(ideal).is_zero
    if contains and not (ann0 or ctx.predicates.is_field):
        return "vertex containment without trivial annihilator in a non-field"
    if ann0 and not contains:
        return "trivial annihilator but cozero vertices escape the ideal cozero graph"
    return None


def _zero_ann_hyp(ctx, tup) -> bool:
    (ideal,) = tup
    return ctx.ann(ideal).is_zero


def _c07_concl(ctx, tup):
    (ideal,) = tup
    base = ctx.cozero_graph()
    ext = ctx.cozero_ideal_graph(ideal)
    if not set(base.vertices) <= set(ext.vertices):
        return "cozero vertices missing from the ideal cozero graph"
    if not base.edges <= ext.edges:
        return "cozero edges missing from the ideal cozero graph"
    return None


def _c07_companion_concl(ctx, tup):
    base = ctx.cozero_graph()
    ext = ctx.cozero_ideal_graph(ctx.full_ideal)
    if base.vertices != ext.vertices or base.edges != ext.edges:
        return "graph at I = R differs from the cozero graph"
    return None


def _c08_hyp(ctx, tup) -> bool:
    (ideal,) = tup
    return ctx.ann(ideal).is_zero and len(ctx.maximal) >= 3


def _c08_concl(ctx, tup):
    (ideal,) = tup
    g = girth(ctx.cozero_ideal_graph(ideal))
    if g != 3:
        return f"girth is {g}, expected 3"
    return None


def _c08_companion_hyp(ctx, tup) -> bool:
    return len(ctx.maximal) >= 3


def _c08_companion_concl(ctx, tup):
    g = girth(ctx.cozero_graph())
    if g != 3:
        return f"cozero graph girth is {g}, expected 3"
    return None


def _c09_concl(ctx, tup):
    (ideal,) = tup
    z = ctx.z_vertices(ideal.members)
    verts = set(ctx.cozero_ideal_graph(ideal).vertices)
    if not z <= verts:
        return "ideal zero-divisor vertices escape the ideal cozero graph"
    gz = ctx.zero_ideal_graph(ideal)
    gz_complete = all(
        gz.has_edge(a, b) for a, b in itertools.combinations(gz.vertices, 2)
    )
    if ctx.radical(ideal) == ideal.members and z == verts and gz_complete:
        gco = ctx.cozero_ideal_graph(ideal)
        if not all(gco.has_edge(a, b) for a, b in itertools.combinations(gco.vertices, 2)):
            return "complete ideal zero-divisor graph but incomplete ideal cozero graph"
    return None


def _c09_companion_concl(ctx, tup):
    z = ctx.z_vertices(frozenset(range(ctx.ring.order)))
    if not z <= set(ctx.cozero_ideal_graph(ctx.full_ideal).vertices):
        return "nonempty vertex set escaped at I = R"
    return None


def _c10_hyp(ctx, tup) -> bool:
    (ideal,) = tup
    return partite_structure(ctx.cozero_ideal_graph(ideal)).complete_bipartite is not None


def _c10_concl(ctx, tup):
    (ideal,) = tup
    parts = partite_structure(ctx.cozero_ideal_graph(ideal)).parts
    for part in parts:
        for a, b in itertools.combinations(part, 2):
            a_in_bR = a in {int(v) for v in ctx.ring.mul_table[b]}
            b_in_aR = b in {int(v) for v in ctx.ring.mul_table[a]}
            if not (a_in_bR or b_in_aR):
                return (
                    f"principal ideals of {ctx.ring.label(a)} and {ctx.ring.label(b)} "
                    "are incomparable inside one part"
                )
    return None


def _c11_concl(ctx, tup):
    (ideal,) = tup
    n = chromatic_number(ctx.cozero_ideal_minus_j(ideal))
    if n >= 1 and len(ctx.maximal) > n:
        return f"{len(ctx.maximal)} maximal ideals exceed the chromatic bound {n}"
    return None


def _c11_companion_hyp(ctx, tup) -> bool:
    return chromatic_number(ctx.cozero_minus_j()) >= 1


def _c11_companion_concl(ctx, tup):
    n = chromatic_number(ctx.cozero_minus_j())
    if len(ctx.maximal) > n:
        return f"{len(ctx.maximal)} maximal ideals exceed the chromatic bound {n}"
    return None


def _c12_concl(ctx, tup):
    (ideal,) = tup
    c = clique_number(ctx.cozero_ideal_graph(ideal))
    if c < len(ctx.maximal):
        return f"clique number {c} below the {len(ctx.maximal)} maximal ideals"
    return None


def _c12_companion_hyp(ctx, tup) -> bool:
    return not ctx.predicates.is_field


def _c12_companion_concl(ctx, tup):
    c = clique_number(ctx.cozero_graph())
    if c < len(ctx.maximal):
        return f"cozero clique number {c} below the {len(ctx.maximal)} maximal ideals"
    return None


def _c13_hyp(ctx, tup) -> bool:
    s1, s2 = tup
    combined = set()
    for a in s1.members:
        for b in s2.members:
            combined.add(ctx.ring.add(a, b))
    return len(combined) == ctx.ring.order


def _c13_concl(ctx, tup):
    s1, s2 = tup
    p1 = ctx.ann(s1).members
    p2 = ctx.ann(s2).members
    side_a = p1 - p2
    side_b = p2 - p1
    g = ctx.cozero_graph()
    if set(g.vertices) != (side_a | side_b):
        return "cozero vertices differ from the annihilator symmetric parts"
    expected = frozenset(
        (min(x, y), max(x, y)) for x in side_a for y in side_b
    )
    if g.edges != expected:
        return "cozero graph is not complete bipartite on the annihilator parts"
    return None


def _c14_hyp(ctx, tup) -> bool:
    (ideal,) = tup
    return ctx.ann(ideal).is_zero and len(ctx.maximal) >= 5


def _c14_concl(ctx, tup):
    (ideal,) = tup
    if is_planar(ctx.cozero_ideal_graph(ideal)):
        return "graph is planar despite at least 5 maximal ideals"
    return None


def _c14_companion_hyp(ctx, tup) -> bool:
    return is_planar(ctx.cozero_graph())


def _c14_companion_concl(ctx, tup):
    if len(ctx.maximal) > 4:
        return f"planar cozero graph with {len(ctx.maximal)} maximal ideals"
    return None


def _c15_concl(ctx, tup):
    (ideal,) = tup
    ann_members = ctx.ann(ideal).members
    zv = ctx.z_vertices(ann_members)
    gco = ctx.cozero_ideal_graph(ideal)
    verts = set(gco.vertices)
    if not zv <= verts:
        return "zero-divisor vertices mod Ann(I) escape the ideal cozero graph"
    if ctx.predicates.is_reduced:
        for a, b in itertools.combinations(sorted(zv), 2):
            if ctx.ring.mul(a, b) in ann_members and not gco.has_edge(a, b):
                return (
                    f"edge {ctx.ring.label(a)}-{ctx.ring.label(b)} of the "
                    "annihilator graph is missing (reduced ring)"
                )
    return None


def _c16_concl(ctx, tup):
    (ideal,) = tup
    ann_members = ctx.ann(ideal).members
    quotient, proj = ctx.quotient(ann_members)
    qverts = quotient.nonzero_nonunits()
    verts = set(ctx.cozero_ideal_graph(ideal).vertices)
    outside = [x for x in range(ctx.ring.order) if x not in ann_members]
    for x in outside:
        if (x in verts) != (proj[x] in qverts):
            return f"vertex correspondence fails at {ctx.ring.label(x)}"
    qgraph = cozero_divisor_graph(quotient)
    gco = ctx.cozero_ideal_graph(ideal)
    for x, y in itertools.combinations(outside, 2):
        if proj[x] == proj[y]:
            continue
        if qgraph.has_edge(proj[x], proj[y]) and not gco.has_edge(x, y):
            return (
                f"quotient edge {ctx.ring.label(x)}-{ctx.ring.label(y)} "
                "is missing from the ideal cozero graph"
            )
    return None


def _c17_hyp(ctx, tup) -> bool:
    (ideal,) = tup
    if ctx.comultiplication():
        return True
    ann_members = ctx.ann(ideal).members
    if len(ann_members) == ctx.ring.order:
        return True
    quotient, _ = ctx.quotient(ann_members)
    covered = quotient.zero_divisors() | quotient.units()
    return len(covered) == quotient.order


def _c17_concl(ctx, tup):
    (ideal,) = tup
    zv = ctx.z_vertices(ctx.ann(ideal).members)
    verts = set(ctx.cozero_ideal_graph(ideal).vertices)
    if zv != verts:
        return "ideal cozero vertices differ from zero-divisor vertices mod Ann(I)"
    return None


def _c18_hyp(ctx, tup) -> bool:
    i, j = tup
    return i.members <= j.members and ctx.predicates.is_zero_dimensional


def _c18_concl(ctx, tup):
    i, j = tup
    vi = set(ctx.cozero_ideal_graph(i).vertices)
    vj = set(ctx.cozero_ideal_graph(j).vertices)
    if not vi <= vj:
        return "vertex sets do not nest along the ideal inclusion"
    return None


def _c19_hyp(ctx, tup) -> bool:
    (ideal,) = tup
    if not ctx.covered_by_zero_divisors_and_units():
        return False
    return set(ctx.cozero_ideal_graph(ideal).vertices) == set(ctx.cozero_graph().vertices)


def _c19_concl(ctx, tup):
    (ideal,) = tup
    if not ctx.ann(ideal).is_zero:
        return "equal vertex sets but nonzero annihilator"
    return None


def _c20_concl(ctx, tup):
    gz = ctx.zero_graph()
    gz0 = ctx.zero_ideal_graph(ctx.zero_ideal)
    if gz.vertices != gz0.vertices or gz.edges != gz0.edges:
        return "zero-divisor graph differs from the I = 0 ideal graph"
    gco = ctx.cozero_graph()
    gcoR = ctx.cozero_ideal_graph(ctx.full_ideal)
    if gco.vertices != gcoR.vertices or gco.edges != gcoR.edges:
        return "cozero graph differs from the I = R ideal graph"
    for ideal in ctx.ideals:
        if ideal.is_zero or not ideal.is_proper:
            continue
        prime = is_prime_ideal(ctx.ring, ideal)
        empty = not ctx.zero_ideal_graph(ideal).vertices
        if prime != empty:
            return (
                f"ideal {sorted(ideal.members)}: prime={prime} but "
                f"ideal zero-divisor graph empty={empty}"
            )
    return None


def _c21_concl(ctx, tup):
    (ideal,) = tup
    ann_members = ctx.ann(ideal).members
    w = ctx.w(ideal)
    if not ann_members <= w:
        return "Ann(I) escapes W(I)"
    quotient, proj = ctx.quotient(ann_members)
    qzero = quotient.zero_divisors()
    preimage = frozenset(x for x in range(ctx.ring.order) if proj[x] in qzero)
    if not preimage <= w:
        return "quotient zero-divisor preimage escapes W(I)"
    verts = set(ctx.cozero_ideal_graph(ideal).vertices)
    if verts != w - ann_members:
        return "vertex set differs from W(I) minus Ann(I)"
    ann_ideal = ctx.ann(ideal)
    if ctx.radical(ann_ideal) == ann_members:
        union = set()
        for p in minimal_primes_over(ctx.ring, ann_ideal):
            union |= p.members
        if not union <= w:
            return "union of minimal primes over the radical annihilator escapes W(I)"
    return None


def _c22_hyp(ctx, tup) -> bool:
    ideal, prime = tup
    return ctx.ann(ideal).members <= prime.members


def _c22_concl(ctx, tup):
    ideal, prime = tup
    secondal_prime = ctx.secondal(ideal)
    left = secondal_prime is not None and secondal_prime.members == prime.members
    right = set(ctx.cozero_ideal_graph(ideal).vertices) == prime.members - ctx.ann(ideal).members
    if left != right:
        return f"P-secondal={left} but vertex characterization={right}"
    return None


def _c23_concl(ctx, tup):
    (ideal,) = tup
    union = frozenset(ctx.cozero_ideal_graph(ideal).vertices) | ctx.ann(ideal).members
    union_is_ideal = ctx.is_ideal_members(union)
    secondal = ctx.secondal(ideal) is not None
    if union_is_ideal != secondal:
        return f"secondal={secondal} but vertices plus Ann(I) ideal={union_is_ideal}"
    if union_is_ideal and not is_prime_ideal(ctx.ring, IdealSet(ctx.ring, union)):
        return "vertices plus Ann(I) form an ideal that is not prime"
    return None


def _c24_hyp(ctx, tup) -> bool:
    i, j = tup
    pi = ctx.secondal(i)
    pj = ctx.secondal(j)
    return pi is not None and pj is not None and pi.members == pj.members


def _c24_concl(ctx, tup):
    i, j = tup
    same_verts = (
        set(ctx.cozero_ideal_graph(i).vertices) == set(ctx.cozero_ideal_graph(j).vertices)
    )
    same_ann = ctx.ann(i).members == ctx.ann(j).members
    if same_verts != same_ann:
        return f"equal vertex sets={same_verts} but equal annihilators={same_ann}"
    return None


def _secondary_hyp(ctx, tup) -> bool:
    (ideal,) = tup
    return ctx.secondary(ideal)


def _c25_concl(ctx, tup):
    (ideal,) = tup
    if ctx.radical(ctx.ann(ideal)) != ctx.w(ideal):
        return "radical of Ann(I) differs from W(I) for a secondary ideal"
    return None


def _c26_concl(ctx, tup):
    (ideal,) = tup
    chi = set(ctx.cozero_ideal_graph(ideal).vertices) == (
        ctx.radical(ctx.ann(ideal)) - ctx.ann(ideal).members
    )
    secondary = ctx.secondary(ideal)
    if chi != secondary:
        return f"secondary={secondary} but radical vertex characterization={chi}"
    return None


def _c27_hyp(ctx, tup) -> bool:
    (ideal,) = tup
    return ctx.secondal(ideal) is None


def _c27_concl(ctx, tup):
    (ideal,) = tup
    if second_to_witness(ctx.ring, ideal) is None:
        return "no vertex pair generates an ideal second to I"
    return None


def _eligible_radical_pairs(ctx, ideal):
    ann_members = ctx.ann(ideal).members
    shell = sorted(ctx.radical(ctx.ann(ideal)) - ann_members)
    for x, y in itertools.combinations(shell, 2):
        if ctx.ring.mul(x, y) not in ann_members:
            yield x, y


def _c28_hyp(ctx, tup) -> bool:
    (ideal,) = tup
    return any(True for _ in _eligible_radical_pairs(ctx, ideal))


def _c28_concl(ctx, tup):
    (ideal,) = tup
    for x, y in _eligible_radical_pairs(ctx, ideal):
        generated = ideal_generated(ctx.ring, (x, y))
        if ideal_product(ideal, generated).members == ideal.members:
            return (
                f"<{ctx.ring.label(x)},{ctx.ring.label(y)}> is second to I "
                "despite the product lying outside Ann(I)"
            )
    return None


def _c29_concl(ctx, tup):
    (ideal,) = tup
    d = diameter(ctx.zero_ideal_graph(ctx.ann(ideal)))
    if d > 2:
        return f"zero-divisor graph mod Ann(I) has diameter {d}"
    return None


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------

def _defs() -> dict[str, list[CheckDef]]:
    c = CheckDef
    reg: dict[str, list[CheckDef]] = {
        "C01": [c("C01", "nonzero ideal is second iff its ideal cozero graph is empty",
                  _space_nonzero, _always, _c01_concl)],
        "C02": [c("C02", "proper ideal: ideal cozero graph minus J(R) is connected",
                  _space_proper, _always, _c02_concl)],
        "C03": [c("C03", "non-local ring, proper ideal: diameter of the graph minus J(R) is at most 2",
                  _space_proper, _non_local, _c03_concl)],
        "C04": [c("C04", "non-local ring with the radical avoidance condition: ideal cozero graph connected, diameter at most 3",
                  _space_proper, _c04_hyp, _c04_concl)],
        "C05": [c("C05", "non-local ring, proper ideal: girth of the graph minus J(R) is at most 5 or infinite",
                  _space_proper, _non_local, _c05_concl)],
        "C06": [c("C06", "cozero vertex containment forces trivial annihilator or a field; trivial annihilator forces containment",
                  _space_nonzero, _c06_hyp, _c06_concl)],
        "C07": [c("C07", "proper ideal with trivial annihilator: cozero graph is a subgraph of the ideal cozero graph",
                  _space_proper, _zero_ann_hyp, _c07_concl),
                c("C07-companion", "at I = R the ideal cozero graph equals the cozero graph",
                  _space_ring, _always, _c07_companion_concl)],
        "C08": [c("C08", "proper ideal, trivial annihilator, at least 3 maximal ideals: ideal cozero girth is 3",
                  _space_proper, _c08_hyp, _c08_concl),
                c("C08-companion", "at least 3 maximal ideals: cozero graph girth is 3",
                  _space_ring, _c08_companion_hyp, _c08_companion_concl)],
        "C09": [c("C09", "proper ideal, trivial annihilator: ideal zero-divisor vertices lie in the ideal cozero graph; completeness transfers",
                  _space_proper, _zero_ann_hyp, _c09_concl),
                c("C09-companion", "at I = R the ideal zero-divisor vertex set is empty and contained",
                  _space_ring, _always, _c09_companion_concl)],
        "C10": [c("C10", "complete bipartite ideal cozero graph: principal ideals within one part are totally ordered",
                  _space_proper, _c10_hyp, _c10_concl)],
        "C11": [c("C11", "proper ideal, trivial annihilator: chromatic number of the graph minus J(R) bounds the maximal ideal count",
                  _space_proper, _zero_ann_hyp, _c11_concl),
                c("C11-companion", "chromatic number of the cozero graph minus J(R) bounds the maximal ideal count",
                  _space_ring, _c11_companion_hyp, _c11_companion_concl)],
        "C12": [c("C12", "proper ideal, trivial annihilator: clique number at least the maximal ideal count",
                  _space_proper, _zero_ann_hyp, _c12_concl),
                c("C12-companion", "non-field: cozero clique number at least the maximal ideal count",
                  _space_ring, _c12_companion_hyp, _c12_companion_concl)],
        "C13": [c("C13", "second ideals summing to R: cozero graph is complete bipartite on the annihilator differences",
                  _space_second_pairs, _c13_hyp, _c13_concl)],
        "C14": [c("C14", "proper ideal, trivial annihilator, at least 5 maximal ideals: ideal cozero graph is not planar",
                  _space_proper, _c14_hyp, _c14_concl),
                c("C14-companion", "planar cozero graph: at most 4 maximal ideals",
                  _space_ring, _c14_companion_hyp, _c14_companion_concl)],
        "C15": [c("C15", "proper ideal: zero-divisor vertices mod Ann(I) lie in the ideal cozero graph; subgraph on reduced rings",
                  _space_proper, _always, _c15_concl)],
        "C16": [c("C16", "vertices and edges of the ideal cozero graph correspond through R/Ann(I)",
                  _space_nonzero_proper, _always, _c16_concl)],
        "C17": [c("C17", "comultiplication ring or covered quotient: ideal cozero vertices equal zero-divisor vertices mod Ann(I)",
                  _space_proper, _c17_hyp, _c17_concl)],
        "C18": [c("C18", "zero-dimensional ring, nested nonzero ideals: ideal cozero vertex sets nest",
                  _space_nonzero_ordered_pairs, _c18_hyp, _c18_concl)],
        "C19": [c("C19", "ring covered by zero-divisors and units, equal vertex sets: annihilator is trivial",
                  _space_nonzero, _c19_hyp, _c19_concl)],
        "C20": [c("C20", "identities: I = 0 gives the zero-divisor graph, I = R the cozero graph, primality iff empty ideal zero-divisor graph",
                  _space_ring, _always, _c20_concl)],
        "C21": [c("C21", "W(I) contains Ann(I) and the quotient zero-divisor preimage; vertices are W(I) minus Ann(I); minimal-prime bound",
                  _space_nonzero, _always, _c21_concl)],
        "C22": [c("C22", "primes containing Ann(I): P-secondal iff vertices equal P minus Ann(I)",
                  _space_ideal_prime_pairs, _c22_hyp, _c22_concl)],
        "C23": [c("C23", "secondal iff vertices plus Ann(I) form an ideal (then prime)",
                  _space_nonzero, _always, _c23_concl)],
        "C24": [c("C24", "two P-secondal ideals: equal vertex sets iff equal annihilators",
                  _space_nonzero_unordered_pairs, _c24_hyp, _c24_concl)],
        "C25": [c("C25", "secondary ideal: radical of Ann(I) equals W(I)",
                  _space_nonzero, _secondary_hyp, _c25_concl)],
        "C26": [c("C26", "secondary iff vertices equal the radical of Ann(I) minus Ann(I)",
                  _space_nonzero, _always, _c26_concl)],
        "C27": [c("C27", "nonzero non-secondal ideal: some vertex pair generates an ideal second to I",
                  _space_nonzero, _c27_hyp, _c27_concl)],
        "C28": [c("C28", "radical-shell pairs with product outside Ann(I) never generate an ideal second to I",
                  _space_nonzero, _c28_hyp, _c28_concl)],
        "C29": [c("C29", "secondary ideal: zero-divisor graph mod Ann(I) has diameter at most 2",
                  _space_nonzero, _secondary_hyp, _c29_concl)],
    }
    return reg


CHECKS: dict[str, list[CheckDef]] = _defs()
ALL_CHECK_IDS: tuple[str, ...] = tuple(sorted(CHECKS)) + ("C30",)

C30_DESCRIPTION = (
    "vacuity audit: every proper ideal has a nonzero annihilator, the "
    "trivial-annihilator checks are vacuous for proper ideals, and their "
    "I = R companions fire cleanly"
)


# ---------------------------------------------------------------------------
# Runner
# ---------------------------------------------------------------------------

def _run_single(check: CheckDef, ctxs: Sequence[RingCtx]) -> CheckResult:
    result = CheckResult(check.check_id, check.description)
    for ctx in ctxs:
        for tup in check.space(ctx):
            result.examined += 1
            if not check.hypothesis(ctx, tup):
                continue
            result.hypothesis_hits += 1
            detail = check.conclusion(ctx, tup)
            if detail is not None:
                result.violations.append(
                    Violation(ctx.ring.spec, _ideals_of(tup), detail)
                )
    return result


def _run_audit(ctxs: Sequence[RingCtx], rows: dict[str, CheckResult]) -> CheckResult:
    result = CheckResult("C30", C30_DESCRIPTION)
    for ctx in ctxs:
        for ideal in ctx.ideals:
            if not ideal.is_proper:
                continue
            result.examined += 1
            result.hypothesis_hits += 1
            if ctx.ann(ideal).is_zero:
                result.violations.append(Violation(
                    ctx.ring.spec, (ideal.sorted_members(),),
                    "proper ideal with zero annihilator",
                ))
    for check_id in AUDITED_VACUOUS:
        proper = rows[check_id]
        companion = rows[f"{check_id}-companion"]
        if not proper.vacuous:
            result.violations.append(Violation(
                "", (), f"{check_id} was expected to be vacuous for proper ideals "
                        f"but had {proper.hypothesis_hits} hypothesis hits",
            ))
        if companion.vacuous:
            result.violations.append(Violation(
                "", (), f"{check_id}-companion never fired",
            ))
        if companion.violations:
            result.violations.append(Violation(
                "", (), f"{check_id}-companion reported violations",
            ))
    return result


def normalize_check_ids(check_ids) -> tuple[str, ...]:
    """Validate and normalize a check selection ('all', None, or ids)."""
    if check_ids is None or check_ids == "all":
        return ALL_CHECK_IDS
    selected = []
    for cid in check_ids:
        cid = cid.strip().upper()
        if cid not in CHECKS and cid != "C30":
            raise ValueError(f"unknown check id {cid!r}")
        selected.append(cid)
    return tuple(sorted(dict.fromkeys(selected)))


def run_checks(
    corpus: Sequence[FiniteRing],
    check_ids=None,
    config: CorpusConfig | None = None,
) -> VerificationReport:
    """Run the selected checks over the corpus.

    Selecting C30 pulls in the six checks it audits, so a C30-only run
    still reports their vacuity pattern.
    """
    selected = set(normalize_check_ids(check_ids))
    if "C30" in selected:
        selected.update(AUDITED_VACUOUS)
    pairs_flag = config.include_full_ideal_quantifier if config else False
    ctxs = [
        RingCtx(ring, pairs_enabled=pairs_flag or ring.order <= PAIR_SPACE_ORDER_CAP)
        for ring in corpus
    ]
    results: list[CheckResult] = []
    for cid in sorted(selected - {"C30"}):
        for check in CHECKS[cid]:
            results.append(_run_single(check, ctxs))
    if "C30" in selected:
        rows = {r.check_id: r for r in results}
        results.append(_run_audit(ctxs, rows))
    results.sort(key=lambda r: r.check_id)
    overall = all(not r.violations for r in results)
    return VerificationReport(config=config, results=results, overall_pass=overall)


def verify_corpus(config: CorpusConfig, check_ids=None) -> VerificationReport:
    """Generate the corpus for config and run the checks."""
    return run_checks(generate_corpus(config), check_ids, config)
