from dataclasses import dataclass
from typing import Dict, Sequence, Tuple

import numpy as np

from pdoring.algebra.finite_ring import RingViolation, Violations, int_scale
from pdoring.errors import DerivationStructureError, NotADeltaIdealError, RingStructureError


@dataclass(frozen=True)
class DeltaOrbit:
    """
    The sequence a, δ(a), δ²(a), … up to its first repetition.

    ``values[cycle_start:]`` repeats forever. The orbit terminates when the
    repeating part is the zero element, which is a fixed point of every derivation.
    """
    values: Tuple[int, ...]
    cycle_start: int
    zero: int = 0

    @property
    def terminates(self) -> bool:
        return self.values[self.cycle_start] == self.zero

    @property
    def length(self) -> int:
        return len(self.values)

    def term(self, t: int) -> int:
        if t < len(self.values):
            return self.values[t]
        period = len(self.values) - self.cycle_start
        return self.values[self.cycle_start + (t - self.cycle_start) % period]

    def nonzero_length(self) -> int:
        """Number of leading terms before the orbit reaches zero (None when it never does)."""
        return self.cycle_start if self.terminates else None


class Derivation:
    """
    Additive Leibniz map on a ring, stored as an image table.

    The zero derivation keeps no table, so it also serves table-free
    coordinate rings.
    """

    def __init__(self, ring, table=None, name: str = None):
        self.ring = ring
        if table is None:
            self._table = None
        else:
            table = np.array(table, dtype=np.int64)
            if table.shape != (ring.order,):
                raise DerivationStructureError(
                    f"derivation table has {table.size} entries, ring has {ring.order} elements")
            if table.min() < 0 or table.max() >= ring.order:
                raise DerivationStructureError(f"derivation table holds indices outside 0..{ring.order - 1}")
            table.setflags(write=False)
            self._table = table
        self.name = name or ("zero" if table is None else "table")
        self._orbits: Dict[int, DeltaOrbit] = {}

    @property
    def table(self) -> np.ndarray:
        if self._table is None:
            if not self.ring.has_tables:
                raise RingStructureError(f"{self.ring.name} keeps no tables")
            table = np.full(self.ring.order, self.ring.zero, dtype=np.int64)
            table.setflags(write=False)
            return table
        return self._table

    @property
    def is_zero(self) -> bool:
        return self._table is None or bool((self._table == self.ring.zero).all())

    def apply(self, a: int) -> int:
        return self.ring.zero if self._table is None else int(self._table[a])

    __call__ = apply

    def orbit(self, a: int) -> DeltaOrbit:
        cached = self._orbits.get(a)
        if cached is not None:
            return cached
        seen, values, v = {}, [], a
        while v not in seen:
            seen[v] = len(values)
            values.append(v)
            v = self.apply(v)
        orbit = DeltaOrbit(tuple(values), seen[v], self.ring.zero)
        self._orbits[a] = orbit
        return orbit

    def power(self, a: int, j: int) -> int:
        """δʲ(a)."""
        return self.orbit(a).term(j)

    def restrict(self, subring) -> 'Derivation':
        """The same map on an ideal viewed as a ring; the ideal must be a δ-subset."""
        if self._table is None:
            return Derivation(subring, None, self.name)
        position = {int(p): i for i, p in enumerate(subring.embedding)}
        images = []
        for p in subring.embedding:
            image = int(self._table[p])
            if image not in position:
                raise NotADeltaIdealError(int(p), image)
            images.append(position[image])
        return Derivation(subring, images, self.name)

    def __repr__(self):
        return f"Derivation({self.name!r} on {self.ring.name!r})"

    @classmethod
    def zero(cls, ring) -> 'Derivation':
        return cls(ring, None, "zero")

    @classmethod
    def from_table(cls, ring, table: Sequence[int], name: str = "table") -> 'Derivation':
        return cls(ring, table, name)

    @classmethod
    def inner(cls, ring, c: int, name: str = None) -> 'Derivation':
        """a ↦ ca − ac."""
        M, A, N = ring.mul_table, ring.add_table, ring.neg_table
        table = A[M[c, :], N[M[:, c]]]
        return cls(ring, table, name or f"inner {ring.element_name(c)}")

    @classmethod
    def from_basis_images(cls, ring, images: Sequence[int], name: str) -> 'Derivation':
        """Extend basis images Z-linearly; ``ring`` must come from a CoordinateRing."""
        algebra = ring.coordinate_ring
        if algebra is None or len(images) != algebra.dim:
            raise DerivationStructureError(f"{ring.name} has no coordinate basis of size {len(images)}")
        table = []
        for a in ring.elements:
            value = ring.zero
            for c, image in zip(algebra.decode(a), images):
                if c:
                    value = ring.add(value, int_scale(ring, int(c), image))
            table.append(value)
        return cls(ring, table, name)

    @classmethod
    def partial(cls, ring, generator: str) -> 'Derivation':
        """∂/∂g on a truncated polynomial ring: g^e·rest ↦ e·g^(e-1)·rest."""
        algebra = ring.coordinate_ring
        if algebra is None or algebra.exponents is None or generator not in ring.generators:
            raise DerivationStructureError(f"{ring.name} has no polynomial generator '{generator}'")
        var = list(ring.generators).index(generator)
        index = {e: k for k, e in enumerate(algebra.exponents)}
        images = []
        for e in algebra.exponents:
            if e[var] == 0:
                images.append(ring.zero)
                continue
            lowered = list(e)
            lowered[var] -= 1
            coords = np.zeros(algebra.dim, dtype=np.int64)
            coords[index[tuple(lowered)]] = e[var]
            images.append(algebra.encode(coords))
        return cls.from_basis_images(ring, images, f"partial {generator}")

    @classmethod
    def product(cls, ring, first: 'Derivation', second: 'Derivation') -> 'Derivation':
        """(u, v) ↦ (δ₁u, δ₂v) on a ring built by make_product."""
        if ring.factors is None:
            raise DerivationStructureError(f"{ring.name} is not a product ring")
        n2 = ring.factors[1].order
        table = [first.apply(a // n2) * n2 + second.apply(a % n2) for a in ring.elements]
        return cls(ring, table, f"({first.name}) x ({second.name})")


def validate_derivation(ring, d: Derivation) -> Violations:
    """Check additivity and the Leibniz rule over all pairs."""
    if d.ring.order != ring.order:
        raise DerivationStructureError(f"derivation table has {d.ring.order} entries, ring has {ring.order} elements")
    T, A, M = d.table, ring.add_table, ring.mul_table
    violations = Violations()
    bad = np.argwhere(T[A] != A[T[:, None], T[None, :]])
    if len(bad):
        violations.append(RingViolation("additivity", tuple(int(v) for v in bad[0])))
    leibniz = A[M[T[:, None], np.arange(ring.order)[None, :]], M[np.arange(ring.order)[:, None], T[None, :]]]
    bad = np.argwhere(T[M] != leibniz)
    if len(bad):
        violations.append(RingViolation("Leibniz rule", tuple(int(v) for v in bad[0])))
    return violations
