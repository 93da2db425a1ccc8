from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List, Optional, Tuple

import numpy as np

from pdoring.algebra.derivation import Derivation
from pdoring.algebra.finite_ring import FiniteRing
from pdoring.errors import IncompatibleRingsError, NotADeltaIdealError


class Sidedness(Enum):
    LEFT = "left"
    RIGHT = "right"
    TWO_SIDED = "two-sided"


class Ideal:
    """A subset of a FiniteRing held as a boolean membership mask."""

    def __init__(self, ring: FiniteRing, mask, sidedness: Sidedness = Sidedness.TWO_SIDED):
        mask = np.array(mask, dtype=bool)
        if mask.shape != (ring.order,):
            raise IncompatibleRingsError(f"membership mask of size {mask.size} for a ring of order {ring.order}")
        mask.setflags(write=False)
        self.ring = ring
        self.mask = mask
        self.sidedness = sidedness

    @classmethod
    def from_members(cls, ring: FiniteRing, members: Iterable[int],
                     sidedness: Sidedness = Sidedness.TWO_SIDED) -> 'Ideal':
        mask = np.zeros(ring.order, dtype=bool)
        mask[list(members)] = True
        return cls(ring, mask, sidedness)

    @classmethod
    def zero(cls, ring: FiniteRing) -> 'Ideal':
        return cls.from_members(ring, [ring.zero])

    @classmethod
    def whole(cls, ring: FiniteRing) -> 'Ideal':
        return cls(ring, np.ones(ring.order, dtype=bool))

    @property
    def members(self) -> Tuple[int, ...]:
        return tuple(int(a) for a in np.flatnonzero(self.mask))

    @property
    def is_zero(self) -> bool:
        return len(self) == 1 and bool(self.mask[self.ring.zero])

    def issubset(self, other: 'Ideal') -> bool:
        return bool((~self.mask | other.mask).all())

    def __contains__(self, a) -> bool:
        return bool(self.mask[a])

    def __len__(self):
        return int(self.mask.sum())

    def __iter__(self):
        return iter(self.members)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring is other.ring and bool((self.mask == other.mask).all())

    def __hash__(self):
        return hash((id(self.ring), self.mask.tobytes()))

    def __str__(self):
        return self.ring.format_set(self.members)

    def __repr__(self):
        return f"Ideal({self}, {self.sidedness.value})"


def _mask(ring: FiniteRing, elements: Iterable[int]) -> np.ndarray:
    mask = np.zeros(ring.order, dtype=bool)
    elements = [int(a) for a in elements]
    if elements:
        mask[elements] = True
    return mask


def additive_span(ring: FiniteRing, elements: Iterable[int]) -> np.ndarray:
    """Membership mask of the additive subgroup generated by ``elements``."""
    mask = _mask(ring, elements)
    mask[ring.zero] = True
    while True:
        m = np.flatnonzero(mask)
        grown = mask.copy()
        grown[ring.add_table[np.ix_(m, m)].ravel()] = True
        grown[ring.neg_table[m]] = True
        if (grown == mask).all():
            return mask
        mask = grown


def ideal_generated(ring: FiniteRing, seed: Iterable[int], sidedness: Sidedness = Sidedness.TWO_SIDED) -> Ideal:
    """Least ideal of the given sidedness containing ``seed``, by closure to a fixpoint."""
    A, M, N = ring.add_table, ring.mul_table, ring.neg_table
    mask = _mask(ring, seed)
    mask[ring.zero] = True
    while True:
        m = np.flatnonzero(mask)
        grown = mask.copy()
        grown[A[np.ix_(m, m)].ravel()] = True
        grown[N[m]] = True
        if sidedness is not Sidedness.RIGHT:
            grown[M[:, m].ravel()] = True
        if sidedness is not Sidedness.LEFT:
            grown[M[m, :].ravel()] = True
        if (grown == mask).all():
            return Ideal(ring, mask, sidedness)
        mask = grown


def is_delta_subset(ring: FiniteRing, d: Derivation, elements) -> bool:
    mask = elements.mask if isinstance(elements, Ideal) else _mask(ring, elements)
    return bool(mask[d.table[mask]].all())


def is_delta_ideal(ring: FiniteRing, d: Derivation, ideal: Ideal) -> bool:
    """δ(I) ⊆ I."""
    return is_delta_subset(ring, d, ideal)


def delta_compatibility_witness(ring: FiniteRing, d: Derivation, ideal: Ideal) -> Optional[Tuple[int, int]]:
    """First pair (a, b) with ab ∈ I but a·δ(b) ∉ I, or None."""
    M = ring.mul_table
    product_in = ideal.mask[M]
    twisted_in = ideal.mask[M[:, d.table]]
    bad = np.argwhere(product_in & ~twisted_in)
    return (int(bad[0][0]), int(bad[0][1])) if len(bad) else None


def is_delta_compatible(ring: FiniteRing, d: Derivation, ideal: Ideal) -> bool:
    """ab ∈ I implies aδ(b) ∈ I; with I = {0} this decides whether the ring is δ-compatible."""
    return delta_compatibility_witness(ring, d, ideal) is None


def left_annihilator(ring: FiniteRing, elements) -> Ideal:
    """(0:S) = {a : as = 0 for all s ∈ S}; two-sided when S is a two-sided ideal."""
    if isinstance(elements, Ideal):
        members = list(elements.members)
        sidedness = Sidedness.TWO_SIDED if elements.sidedness is Sidedness.TWO_SIDED else Sidedness.LEFT
    else:
        members = [int(s) for s in elements]
        sidedness = Sidedness.LEFT
    if not members:
        return Ideal.whole(ring)
    mask = (ring.mul_table[:, members] == ring.zero).all(axis=1)
    return Ideal(ring, mask, sidedness)


def element_nilpotency_index(ring, a: int) -> Optional[int]:
    """Least k with aᵏ = 0, or None when a is not nilpotent."""
    power, k = a, 1
    seen = set()
    while power != ring.zero:
        if power in seen:
            return None
        seen.add(power)
        power = ring.mul(power, a)
        k += 1
    return k


@dataclass
class QuotientData:
    quotient: FiniteRing
    projection: np.ndarray
    ideal: Ideal
    induced_derivation: Optional[Derivation] = None

    def image(self, mask: np.ndarray) -> np.ndarray:
        image = np.zeros(self.quotient.order, dtype=bool)
        image[self.projection[np.asarray(mask, dtype=bool)]] = True
        return image

    def preimage(self, mask: np.ndarray) -> np.ndarray:
        return np.asarray(mask, dtype=bool)[self.projection]


def quotient_ring(ring: FiniteRing, ideal: Ideal, d: Derivation = None) -> QuotientData:
    """
    R/I on canonical coset representatives (least element index per coset).

    With a derivation, the induced derivation is built; the ideal must then be
    a δ-ideal.
    """
    if ideal.ring is not ring:
        raise IncompatibleRingsError("ideal belongs to another ring")
    members = np.array(ideal.members)
    if d is not None:
        outside = np.flatnonzero(~ideal.mask[d.table[members]])
        if len(outside):
            element = int(members[outside[0]])
            raise NotADeltaIdealError(element, d.apply(element))
    reps_of = ring.add_table[:, members].min(axis=1)
    reps = np.unique(reps_of)
    position = np.full(ring.order, -1, dtype=np.int64)
    position[reps] = np.arange(len(reps))
    projection = position[reps_of]
    add = projection[ring.add_table[np.ix_(reps, reps)]]
    mul = projection[ring.mul_table[np.ix_(reps, reps)]]
    neg = projection[ring.neg_table[reps]]
    one = None if ring.one is None else int(projection[ring.one])
    names = [ring.element_name(int(r)) for r in reps]
    generators = {g: int(projection[e]) for g, e in ring.generators.items()}
    quotient = FiniteRing(add, mul, neg, zero=int(projection[ring.zero]), one=one, element_names=names,
                          generators=generators, name=f"{ring.name} / {ring.format_set(ideal.members)}")
    quotient.parent = ring
    projection.setflags(write=False)
    induced = None
    if d is not None:
        induced = Derivation(quotient, projection[d.table[reps]], f"{d.name} (induced)")
    return QuotientData(quotient, projection, ideal, induced)


def subring(ring: FiniteRing, members: Iterable[int]) -> FiniteRing:
    """An ideal (or any subring) as a ring in its own right; the identity is kept only if one exists inside."""
    embedding = np.array(sorted(int(a) for a in members), dtype=np.int64)
    position = np.full(ring.order, -1, dtype=np.int64)
    position[embedding] = np.arange(len(embedding))
    add = position[ring.add_table[np.ix_(embedding, embedding)]]
    mul = position[ring.mul_table[np.ix_(embedding, embedding)]]
    if (add < 0).any() or (mul < 0).any():
        raise IncompatibleRingsError("subset is not closed under the ring operations")
    neg = position[ring.neg_table[embedding]]
    sub_n = len(embedding)
    one = None
    for e in range(sub_n):
        if (mul[e, :] == np.arange(sub_n)).all() and (mul[:, e] == np.arange(sub_n)).all():
            one = e
            break
    names = [ring.element_name(int(a)) for a in embedding]
    sub = FiniteRing(add, mul, neg, zero=int(position[ring.zero]), one=one, element_names=names,
                     name=f"{ring.format_set(embedding)} in {ring.name}")
    sub.parent = ring
    sub.embedding = embedding
    return sub


def enumerate_ideals(ring: FiniteRing, limit: int) -> Optional[List[Ideal]]:
    """All two-sided ideals, found by growing from {0}; None once more than ``limit`` are found."""
    start = Ideal.zero(ring)
    found = {start.mask.tobytes(): start}
    queue = [start]
    while queue:
        current = queue.pop()
        for a in np.flatnonzero(~current.mask):
            grown = ideal_generated(ring, list(current.members) + [int(a)])
            key = grown.mask.tobytes()
            if key not in found:
                found[key] = grown
                queue.append(grown)
                if len(found) > limit:
                    return None
    return sorted(found.values(), key=lambda i: (len(i), i.members))
