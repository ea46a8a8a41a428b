"""Finite commutative rings with identity, modelled by dense operation tables.

Rings are built from a small spec language (``Zn:12``, ``Zn:2xZn:3``,
``gf:2^3``, ``polyquot:2:1,1,1``, ``table:<path>``) and validated
exhaustively against the ring axioms.  Elements are indices into the
tables; every derived set (units, zero-divisors, ...) is an explicit set
of indices.  Instances are immutable after construction and safe to share.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .errors import CapExceededError, RingAxiomError, RingMismatchError, RingSpecError

DEFAULT_ORDER_CAP = 256


# ---------------------------------------------------------------------------
# Ring specs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RingSpec:
    """Parsed form of a ring spec string.

    kind is one of ``cyclic``, ``product``, ``galois``, ``polyquot``,
    ``table``; the remaining fields are kind-specific.  ``str()`` prints
    the canonical spec string, and ``parse_ring_spec(str(s)) == s``.
    """

    kind: str
    n: int = 0                              # cyclic order / polyquot base / galois p
    k: int = 0                              # galois exponent
    coeffs: tuple[int, ...] = ()            # polyquot modulus, ascending degree
    factors: tuple["RingSpec", ...] = ()    # product factors, order preserved
    path: str = ""                          # table file

    def __post_init__(self):
        if self.kind == "cyclic":
            if self.n < 2:
                raise RingSpecError(f"cyclic order must be >= 2, got {self.n}")
        elif self.kind == "product":
            if len(self.factors) < 2:
                raise RingSpecError("product needs at least 2 factors")
            if any(f.kind in ("product", "table") for f in self.factors):
                raise RingSpecError("product factors must be simple ring specs")
        elif self.kind == "galois":
            if not _is_prime(self.n):
                raise RingSpecError(f"galois-field base {self.n} is not prime")
            if self.k < 1:
                raise RingSpecError("galois-field exponent must be >= 1")
        elif self.kind == "polyquot":
            if self.n < 2:
                raise RingSpecError("polyquot base must be >= 2")
            if len(self.coeffs) < 2 or self.coeffs[-1] % self.n == 0:
                raise RingSpecError("polyquot modulus must have degree >= 1")
        elif self.kind == "table":
            if not self.path:
                raise RingSpecError("table spec needs a file path")
        else:
            raise RingSpecError(f"unknown ring kind {self.kind!r}")

    def __str__(self) -> str:
        if self.kind == "cyclic":
            return f"Zn:{self.n}"
        if self.kind == "product":
            return "x".join(str(f) for f in self.factors)
        if self.kind == "galois":
            return f"gf:{self.n}^{self.k}"
        if self.kind == "polyquot":
            return f"polyquot:{self.n}:{','.join(str(c) for c in self.coeffs)}"
        return f"table:{self.path}"


def parse_ring_spec(text: str) -> RingSpec:
    """Parse a spec string.  ``gf:p^1`` normalizes to ``Zn:p``."""
    text = text.strip()
    if not text:
        raise RingSpecError("empty ring spec")
    if text.startswith("table:"):
        return RingSpec(kind="table", path=text[len("table:"):])
    if "x" in text:
        factors = tuple(_parse_simple(part) for part in text.split("x"))
        return RingSpec(kind="product", factors=factors)
    return _parse_simple(text)


def _parse_simple(text: str) -> RingSpec:
    if text.startswith("Zn:"):
        return RingSpec(kind="cyclic", n=_parse_int(text[3:], "cyclic order"))
    if text.startswith("gf:"):
        body = text[3:]
        if "^" in body:
            p_str, k_str = body.split("^", 1)
        else:
            p_str, k_str = body, "1"
        p = _parse_int(p_str, "galois base")
        k = _parse_int(k_str, "galois exponent")
        if k == 1:
            if not _is_prime(p):
                raise RingSpecError(f"galois-field base {p} is not prime")
            return RingSpec(kind="cyclic", n=p)
        return RingSpec(kind="galois", n=p, k=k)
    if text.startswith("polyquot:"):
        parts = text.split(":")
        if len(parts) != 3:
            raise RingSpecError(f"malformed polyquot spec {text!r}")
        base = _parse_int(parts[1], "polyquot base")
        coeffs = tuple(_parse_int(c, "polyquot coefficient") for c in parts[2].split(","))
        coeffs = tuple(c % base for c in coeffs)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        return RingSpec(kind="polyquot", n=base, coeffs=coeffs)
    raise RingSpecError(f"unrecognized ring spec {text!r}")


def _parse_int(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise RingSpecError(f"{what} must be an integer, got {text!r}") from None


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


# ---------------------------------------------------------------------------
# Polynomial arithmetic over Z_base (little-endian coefficient tuples)
# ---------------------------------------------------------------------------

def _poly_trim(c: tuple[int, ...]) -> tuple[int, ...]:
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return c[:i]


def _poly_mul(a: tuple[int, ...], b: tuple[int, ...], base: int) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % base
    return _poly_trim(tuple(out))


def _poly_mod(a: tuple[int, ...], f: tuple[int, ...], base: int) -> tuple[int, ...]:
    """Remainder of a modulo f; f must be monic."""
    a = list(a)
    deg_f = len(f) - 1
    while len(_poly_trim(tuple(a))) - 1 >= deg_f:
        a = list(_poly_trim(tuple(a)))
        shift = len(a) - 1 - deg_f
        lead = a[-1]
        for i, fi in enumerate(f):
            a[i + shift] = (a[i + shift] - lead * fi) % base
    return _poly_trim(tuple(a))


def _poly_is_irreducible(f: tuple[int, ...], p: int) -> bool:
    """Trial division by all monic polynomials of degree <= deg(f)/2 over F_p."""
    deg = len(f) - 1
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            g = low + (1,)
            if _poly_mod(f, g, p) == ():
                return False
    return True


def _find_irreducible(p: int, k: int) -> tuple[int, ...]:
    """First monic irreducible of degree k over F_p, by ascending low coeffs."""
    for low in itertools.product(range(p), repeat=k):
        f = tuple(low) + (1,)
        if _poly_is_irreducible(f, p):
            return f
    raise RingSpecError(f"no irreducible polynomial of degree {k} over F_{p}")  # pragma: no cover


def _poly_label(coeffs: tuple[int, ...]) -> str:
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            xpow = "x" if i == 1 else f"x^{i}"
            terms.append(xpow if c == 1 else f"{c}{xpow}")
    return "+".join(terms) if terms else "0"


# ---------------------------------------------------------------------------
# FiniteRing
# ---------------------------------------------------------------------------

class FiniteRing:
    """A finite commutative ring with identity, as validated index tables.

    Elements are the indices ``0 .. order-1``.  ``add_table[a, b]`` and
    ``mul_table[a, b]`` give the operation results; ``zero`` and ``one``
    are the identity indices.  All axioms are checked exhaustively at
    construction time (vectorized O(n^3) scans).
    """

    def __init__(self, spec: str, labels: tuple[str, ...],
                 add_table: np.ndarray, mul_table: np.ndarray):
        self.spec = spec
        self.order = len(labels)
        self.labels = labels
        self.add_table = np.ascontiguousarray(add_table, dtype=np.int16)
        self.mul_table = np.ascontiguousarray(mul_table, dtype=np.int16)
        self.zero, self.one = _validate_tables(labels, self.add_table, self.mul_table)
        self.add_table.setflags(write=False)
        self.mul_table.setflags(write=False)
        self.neg_table = tuple(
            int(np.nonzero(self.add_table[a] == self.zero)[0][0]) for a in range(self.order)
        )
        self._cache: dict = {}

    def __repr__(self) -> str:
        return f"FiniteRing({self.spec}, order={self.order})"

    # -- arithmetic on element indices --------------------------------------

    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def sub(self, a: int, b: int) -> int:
        return int(self.add_table[a, self.neg_table[b]])

    def pow(self, a: int, exponent: int) -> int:
        """a**exponent by repeated squaring; a**0 is the identity."""
        if exponent < 0:
            raise ValueError("exponent must be >= 0")
        result = self.one
        base = a
        while exponent:
            if exponent & 1:
                result = int(self.mul_table[result, base])
            base = int(self.mul_table[base, base])
            exponent >>= 1
        return result

    def elements(self) -> range:
        return range(self.order)

    def label(self, a: int) -> str:
        return self.labels[a]

    def element(self, idx: int) -> "Element":
        if not 0 <= idx < self.order:
            raise ValueError(f"element index {idx} out of range for {self.spec}")
        return Element(self, idx)

    # -- cached element sets -------------------------------------------------

    def units(self) -> frozenset[int]:
        """Indices x with xy = 1 for some y."""
        if "units" not in self._cache:
            mask = (self.mul_table == self.one).any(axis=1)
            self._cache["units"] = frozenset(int(i) for i in np.nonzero(mask)[0])
        return self._cache["units"]

    def zero_divisors(self) -> frozenset[int]:
        """Indices x with xy = 0 for some y != 0 (includes 0 when order >= 2)."""
        if "zero_divisors" not in self._cache:
            cols = [y for y in range(self.order) if y != self.zero]
            mask = (self.mul_table[:, cols] == self.zero).any(axis=1)
            self._cache["zero_divisors"] = frozenset(int(i) for i in np.nonzero(mask)[0])
        return self._cache["zero_divisors"]

    def is_unit(self, a: int) -> bool:
        return a in self.units()

    def nonzero_nonunits(self) -> frozenset[int]:
        """W*(R): the vertex set of the cozero-divisor graph."""
        if "nonzero_nonunits" not in self._cache:
            u = self.units()
            self._cache["nonzero_nonunits"] = frozenset(
                x for x in range(self.order) if x != self.zero and x not in u
            )
        return self._cache["nonzero_nonunits"]


@dataclass(frozen=True)
class Element:
    """A ring element as (ring, index), with operator sugar.

    Binary operations require both operands to come from the same ring
    object; mixing rings raises RingMismatchError.
    """

    ring: FiniteRing = field(repr=False)
    idx: int

    def _check(self, other: "Element") -> None:
        if not isinstance(other, Element):
            raise TypeError(f"expected Element, got {type(other).__name__}")
        if other.ring is not self.ring:
            raise RingMismatchError(
                f"elements of {self.ring.spec} and {other.ring.spec} cannot be combined"
            )

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        return Element(self.ring, self.ring.add(self.idx, other.idx))

    def __mul__(self, other: "Element") -> "Element":
        self._check(other)
        return Element(self.ring, self.ring.mul(self.idx, other.idx))

    def __sub__(self, other: "Element") -> "Element":
        self._check(other)
        return Element(self.ring, self.ring.sub(self.idx, other.idx))

    def __neg__(self) -> "Element":
        return Element(self.ring, self.ring.neg(self.idx))

    def __pow__(self, exponent: int) -> "Element":
        return Element(self.ring, self.ring.pow(self.idx, exponent))

    def __str__(self) -> str:
        return self.ring.label(self.idx)


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------

def _witness(kind: str, index_tuple, labels, message: str) -> RingAxiomError:
    pretty = ", ".join(labels[int(i)] for i in index_tuple)
    return RingAxiomError(kind, tuple(int(i) for i in index_tuple), f"{message} (witness: {pretty})")


def _validate_tables(labels, add: np.ndarray, mul: np.ndarray) -> tuple[int, int]:
    n = len(labels)
    if n < 2:
        raise RingAxiomError("order", (), "ring must have order >= 2 (non-zero identity)")
    if len(set(labels)) != n:
        raise RingSpecError("element labels must be unique")
    for name, t in (("add", add), ("mul", mul)):
        if t.shape != (n, n):
            raise RingAxiomError("shape", (), f"{name} table must be {n}x{n}, got {t.shape}")
        if t.min() < 0 or t.max() >= n:
            bad = np.argwhere((t < 0) | (t >= n))[0]
            raise _witness("closure", bad, labels, f"{name} table entry out of range")

    # commutativity
    for name, t in (("add_commutative", add), ("mul_commutative", mul)):
        if not np.array_equal(t, t.T):
            bad = np.argwhere(t != t.T)[0]
            raise _witness(name, bad, labels, f"{name.split('_')[0]} is not commutative")

    # identities
    idx = np.arange(n, dtype=np.int16)
    zeros = [a for a in range(n) if np.array_equal(add[a], idx)]
    if not zeros:
        raise RingAxiomError("add_identity", (), "no additive identity")
    zero = zeros[0]
    ones = [a for a in range(n) if np.array_equal(mul[a], idx)]
    if not ones:
        raise RingAxiomError("mul_identity", (), "no multiplicative identity")
    one = ones[0]
    if one == zero:
        raise RingAxiomError("identity_distinct", (zero,), "1 = 0 is not allowed")

    # additive inverses
    has_inv = (add == zero).any(axis=1)
    if not has_inv.all():
        bad = int(np.nonzero(~has_inv)[0][0])
        raise _witness("add_inverse", (bad,), labels, "element has no additive inverse")

    # associativity, distributivity (O(n^3), vectorized)
    lhs = add[add, :]
    rhs = add[:, add]
    if not np.array_equal(lhs, rhs):
        bad = np.argwhere(lhs != rhs)[0]
        raise _witness("add_associative", bad, labels, "addition is not associative")
    lhs = mul[mul, :]
    rhs = mul[:, mul]
    if not np.array_equal(lhs, rhs):
        bad = np.argwhere(lhs != rhs)[0]
        raise _witness("mul_associative", bad, labels, "multiplication is not associative")
    lhs = mul[:, add]
    rhs = add[mul[:, :, None], mul[:, None, :]]
    if not np.array_equal(lhs, rhs):
        bad = np.argwhere(lhs != rhs)[0]
        raise _witness("distributive", bad, labels, "multiplication does not distribute over addition")

    return zero, one


# ---------------------------------------------------------------------------
# Builders
# ---------------------------------------------------------------------------

def spec_order(spec: RingSpec) -> int | None:
    """Ring order predicted from the spec; None for table files."""
    if spec.kind == "cyclic":
        return spec.n
    if spec.kind == "product":
        n = 1
        for f in spec.factors:
            n *= spec_order(f)
        return n
    if spec.kind == "galois":
        return spec.n ** spec.k
    if spec.kind == "polyquot":
        return spec.n ** (len(spec.coeffs) - 1)
    return None


def build_ring(spec: RingSpec | str, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteRing:
    """Construct and validate the ring described by ``spec``."""
    if isinstance(spec, str):
        spec = parse_ring_spec(spec)
    predicted = spec_order(spec)
    if predicted is not None and predicted > order_cap:
        raise CapExceededError(f"ring order {predicted} exceeds cap {order_cap} ({spec})")
    if spec.kind == "cyclic":
        ring = _build_cyclic(spec.n)
    elif spec.kind == "product":
        ring = _build_product(spec)
    elif spec.kind == "galois":
        ring = _build_galois(spec.n, spec.k)
    elif spec.kind == "polyquot":
        ring = _build_polyquot(spec.n, spec.coeffs, str(spec))
    else:
        ring = _build_table(spec.path)
    if ring.order > order_cap:
        raise CapExceededError(f"ring order {ring.order} exceeds cap {order_cap} ({spec})")
    return ring


def _build_cyclic(n: int) -> FiniteRing:
    idx = np.arange(n)
    add = np.add.outer(idx, idx) % n
    mul = np.multiply.outer(idx, idx) % n
    return FiniteRing(f"Zn:{n}", tuple(str(i) for i in range(n)), add, mul)


def _build_product(spec: RingSpec) -> FiniteRing:
    subrings = [build_ring(f) for f in spec.factors]
    orders = [r.order for r in subrings]
    n = 1
    for o in orders:
        n *= o
    tuples = list(itertools.product(*[range(o) for o in orders]))
    index_of = {t: i for i, t in enumerate(tuples)}
    labels = tuple(
        "(" + ",".join(r.label(c) for r, c in zip(subrings, t)) + ")" for t in tuples
    )
    add = np.empty((n, n), dtype=np.int16)
    mul = np.empty((n, n), dtype=np.int16)
    for i, ti in enumerate(tuples):
        for j, tj in enumerate(tuples):
            add[i, j] = index_of[tuple(r.add(a, b) for r, a, b in zip(subrings, ti, tj))]
            mul[i, j] = index_of[tuple(r.mul(a, b) for r, a, b in zip(subrings, ti, tj))]
    return FiniteRing(str(spec), labels, add, mul)


def _build_galois(p: int, k: int) -> FiniteRing:
    f = _find_irreducible(p, k)
    return _build_polyquot(p, f, f"gf:{p}^{k}")


def _build_polyquot(base: int, modulus: tuple[int, ...], spec_str: str) -> FiniteRing:
    lc = modulus[-1] % base
    if _gcd(lc, base) != 1:
        raise RingSpecError("polyquot modulus leading coefficient must be a unit")
    if lc != 1:
        inv = next(u for u in range(base) if (u * lc) % base == 1)
        modulus = tuple((c * inv) % base for c in modulus)
    k = len(modulus) - 1
    n = base ** k
    vecs = [tuple((i // base**d) % base for d in range(k)) for i in range(n)]
    index_of = {v: i for i, v in enumerate(vecs)}
    labels = tuple(_poly_label(_poly_trim(v)) for v in vecs)
    add = np.empty((n, n), dtype=np.int16)
    mul = np.empty((n, n), dtype=np.int16)

    def pad(c: tuple[int, ...]) -> tuple[int, ...]:
        return c + (0,) * (k - len(c))

    for i, vi in enumerate(vecs):
        for j, vj in enumerate(vecs):
            s = tuple((a + b) % base for a, b in zip(vi, vj))
            add[i, j] = index_of[s]
            prod = _poly_mod(_poly_mul(_poly_trim(vi), _poly_trim(vj), base), modulus, base)
            mul[i, j] = index_of[pad(prod)]
    return FiniteRing(spec_str, labels, add, mul)


def _build_table(path: str) -> FiniteRing:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            tokens = fh.read().split()
    except OSError as exc:
        raise RingSpecError(f"cannot read table file {path!r}: {exc}") from None
    if not tokens:
        raise RingSpecError(f"table file {path!r} is empty")
    try:
        values = [int(t) for t in tokens]
    except ValueError as exc:
        raise RingSpecError(f"table file {path!r}: {exc}") from None
    n = values[0]
    if n < 2:
        raise RingSpecError("table ring order must be >= 2")
    need = 1 + 2 * n * n
    if len(values) != need:
        raise RingSpecError(
            f"table file {path!r}: expected {need} numbers (order + two {n}x{n} tables), got {len(values)}"
        )
    add = np.array(values[1:1 + n * n], dtype=np.int16).reshape(n, n)
    mul = np.array(values[1 + n * n:], dtype=np.int16).reshape(n, n)
    return FiniteRing(f"table:{path}", tuple(str(i) for i in range(n)), add, mul)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a
