import warnings
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence

import numpy as np

from pdoring.config import DEFAULT_CONFIG, EngineConfig
from pdoring.errors import NonUnitalRingError, RingStructureError


class SampledValidationWarning(UserWarning):
    """Axioms were checked on random triples instead of exhaustively."""


class RingViolation(NamedTuple):
    axiom: str
    witness: tuple

    def __str__(self):
        return f"{self.axiom} fails at {self.witness}"


class Violations(list):
    """List of violated axioms; ``sampled`` tells whether the check was exhaustive."""

    def __init__(self, items: Iterable = (), sampled: bool = False):
        super().__init__(items)
        self.sampled = sampled


class FiniteRing:
    """
    Finite associative ring on the element indices 0..order-1, given by
    addition and multiplication tables. The identity is optional.
    """
    add_table: np.ndarray = None
    mul_table: np.ndarray = None
    neg_table: np.ndarray = None
    has_tables = True

    def __init__(self, add_table, mul_table, neg_table=None, zero: int = 0, one: Optional[int] = None,
                 element_names: Sequence[str] = None, generators: Dict[str, int] = None,
                 name: str = None):
        add = np.array(add_table, dtype=np.int64)
        mul = np.array(mul_table, dtype=np.int64)
        if add.ndim != 2 or add.shape[0] != add.shape[1] or add.shape[0] == 0:
            raise RingStructureError(f"addition table must be a non-empty square table, got shape {add.shape}")
        n = add.shape[0]
        if mul.shape != (n, n):
            raise RingStructureError(f"multiplication table has shape {mul.shape}, expected {(n, n)}")
        for label, table in (("addition", add), ("multiplication", mul)):
            if table.min() < 0 or table.max() >= n:
                raise RingStructureError(f"{label} table holds indices outside 0..{n - 1}")
        if not 0 <= zero < n:
            raise RingStructureError(f"zero index {zero} outside 0..{n - 1}")
        if one is not None and not 0 <= one < n:
            raise RingStructureError(f"identity index {one} outside 0..{n - 1}")
        if neg_table is None:
            # first b with a + b = 0; rows without an inverse keep 0 and fail validation
            neg = np.argmax(add == zero, axis=1).astype(np.int64)
        else:
            neg = np.array(neg_table, dtype=np.int64)
            if neg.shape != (n,):
                raise RingStructureError(f"negation table has shape {neg.shape}, expected {(n,)}")
            if neg.min() < 0 or neg.max() >= n:
                raise RingStructureError(f"negation table holds indices outside 0..{n - 1}")
        if element_names is not None and len(element_names) != n:
            raise RingStructureError(f"{len(element_names)} element names given for {n} elements")
        for table in (add, mul, neg):
            table.setflags(write=False)
        self.add_table, self.mul_table, self.neg_table = add, mul, neg
        self.zero = int(zero)
        self.one = None if one is None else int(one)
        self.name = name or f"ring of order {n}"
        self.generators = dict(generators or {})
        self._names = list(element_names) if element_names is not None else None
        self._commutative = None
        # optional provenance set by constructors
        self.coordinate_ring = None
        self.factors = None
        self.parent = None
        self.embedding = None

    @property
    def order(self) -> int:
        return self.add_table.shape[0]

    @property
    def elements(self) -> range:
        return range(self.order)

    @property
    def is_unital(self) -> bool:
        return self.one is not None

    @property
    def is_commutative(self) -> bool:
        if self._commutative is None:
            self._commutative = bool((self.mul_table == self.mul_table.T).all())
        return self._commutative

    def require_one(self) -> int:
        if self.one is None:
            raise NonUnitalRingError(f"{self.name} has no identity")
        return self.one

    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def neg(self, a: int) -> int:
        return int(self.neg_table[a])

    def sub(self, a: int, b: int) -> int:
        return int(self.add_table[a, self.neg_table[b]])

    def int_scale(self, m: int, a: int) -> int:
        return int_scale(self, m, a)

    def element_name(self, a: int) -> str:
        if self._names is not None:
            return self._names[a]
        return "0" if a == self.zero else f"#{a}"

    @property
    def element_names(self) -> List[str]:
        return [self.element_name(a) for a in self.elements]

    def format_set(self, members: Iterable[int]) -> str:
        return "{" + ", ".join(self.element_name(int(a)) for a in sorted(members)) + "}"

    def __repr__(self):
        return f"FiniteRing({self.name!r}, order={self.order})"


def int_scale(ring, m: int, a: int) -> int:
    """
    m·a in the additive group, by doubling.

    :param ring: FiniteRing or CoordinateRing
    :param m: any integer; negative values scale the negation
    :param a: element index
    """
    if m < 0:
        m, a = -m, ring.neg(a)
    result, base = ring.zero, a
    while m:
        if m & 1:
            result = ring.add(result, base)
        m >>= 1
        if m:
            base = ring.add(base, base)
    return result


def _first(bad: np.ndarray):
    idx = np.argwhere(bad)
    return tuple(int(v) for v in idx[0]) if len(idx) else None


def validate_ring(ring: FiniteRing, config: EngineConfig = DEFAULT_CONFIG, seed: int = 0) -> Violations:
    """
    Check every ring axiom and return the violated ones, each with a witness.

    Pair axioms are always exhaustive. Triple axioms are exhaustive up to
    ``config.exhaustive_triple_order`` and sampled above it.
    """
    A, M, N = ring.add_table, ring.mul_table, ring.neg_table
    n, z = ring.order, ring.zero
    found: Dict[str, tuple] = {}

    def note(axiom, witness):
        if witness is not None and axiom not in found:
            found[axiom] = witness

    elems = np.arange(n)
    note("additive identity", _first((A[z, :] != elems) | (A[:, z] != elems)))
    note("additive inverse", _first(A[elems, N] != z))
    note("additive commutativity", _first(A != A.T))
    if ring.one is not None:
        note("multiplicative identity", _first((M[ring.one, :] != elems) | (M[:, ring.one] != elems)))

    sampled = n > config.exhaustive_triple_order
    if not sampled:
        for a in range(n):
            note("additive associativity", _prefix(a, _first(A[A[a, :], :] != A[a, A])))
            note("multiplicative associativity", _prefix(a, _first(M[M[a, :], :] != M[a, M])))
            note("left distributivity", _prefix(a, _first(M[a, A] != A[M[a, :][:, None], M[a, :][None, :]])))
            # (b + c)a = ba + ca, with a as the right factor
            right = A[M[:, a][:, None], M[:, a][None, :]]
            witness = _first(M[A, a] != right)
            note("right distributivity", None if witness is None else (witness[0], witness[1], a))
    else:
        warnings.warn(f"{ring.name}: order {n} above {config.exhaustive_triple_order}, "
                      f"checking {config.validation_samples} random triples", SampledValidationWarning)
        rng = np.random.default_rng(seed)
        a, b, c = (rng.integers(0, n, config.validation_samples) for _ in range(3))
        for axiom, bad in (
                ("additive associativity", A[A[a, b], c] != A[a, A[b, c]]),
                ("multiplicative associativity", M[M[a, b], c] != M[a, M[b, c]]),
                ("left distributivity", M[a, A[b, c]] != A[M[a, b], M[a, c]]),
                ("right distributivity", M[A[a, b], c] != A[M[a, c], M[b, c]])):
            hit = np.flatnonzero(bad)
            if len(hit):
                i = hit[0]
                note(axiom, (int(a[i]), int(b[i]), int(c[i])))
    return Violations((RingViolation(k, v) for k, v in found.items()), sampled=sampled)


def _prefix(a: int, witness):
    return None if witness is None else (a,) + witness
