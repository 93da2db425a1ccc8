from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np

from pdoring.algebra.derivation import Derivation
from pdoring.algebra.finite_ring import FiniteRing
from pdoring.algebra.ideal import (Ideal, Sidedness, additive_span, element_nilpotency_index, ideal_generated,
                                   is_delta_subset, quotient_ring)
from pdoring.config import DEFAULT_CONFIG, EngineConfig
from pdoring.errors import (DerivationStructureError, HigherRadidealError, NotADeltaIdealError,
                            RadicalConsistencyError, RingStructureError)
from pdoring.radicals.t_nilpotency import is_left_t_nilpotent


def nilpotency_index(ring: FiniteRing, ideal: Ideal) -> Optional[int]:
    """Least k with Iᵏ = 0, or None when I^|R| is still nonzero."""
    members = np.array(ideal.members)
    power = ideal.mask
    for k in range(1, ring.order + 1):
        if power.sum() == 1 and power[ring.zero]:
            return k
        products = ring.mul_table[np.ix_(np.flatnonzero(power), members)].ravel()
        power = additive_span(ring, np.unique(products))
    return None


class _IdealCache:
    """Principal ideals and their verdicts, keyed by membership mask."""

    def __init__(self, ring: FiniteRing):
        self.ring = ring
        self.principal: Dict[int, Ideal] = {}
        self.verdicts: Dict[bytes, object] = {}

    def generated(self, a: int) -> Ideal:
        if a not in self.principal:
            self.principal[a] = ideal_generated(self.ring, [a])
        return self.principal[a]

    def decide(self, ideal: Ideal, oracle):
        key = ideal.mask.tobytes()
        if key not in self.verdicts:
            self.verdicts[key] = oracle(ideal)
        return self.verdicts[key]


def _sweep(ring: FiniteRing, oracle) -> np.ndarray:
    cache = _IdealCache(ring)
    mask = np.zeros(ring.order, dtype=bool)
    for a in ring.elements:
        if mask[a]:
            continue
        principal = cache.generated(a)
        if cache.decide(principal, oracle):
            mask |= principal.mask
    return mask


def radideal_Il(ring: FiniteRing) -> Ideal:
    """
    Sum of all left T-nilpotent ideals, swept over principal ideals.

    The sum of the qualifying principal ideals must itself consist of
    qualifying elements; otherwise RadicalConsistencyError is raised.
    """
    def oracle(ideal):
        return is_left_t_nilpotent(ring, ideal.members).verdict

    qualifying = _sweep(ring, oracle)
    result = ideal_generated(ring, np.flatnonzero(qualifying))
    if not (result.mask == qualifying).all() or not oracle(result):
        raise RadicalConsistencyError(f"{ring.name}: the sum of left T-nilpotent principal ideals "
                                      f"{ring.format_set(result.members)} is not left T-nilpotent")
    return result


def prime_radical(ring: FiniteRing) -> Ideal:
    """Sum of all nilpotent ideals: the largest nilpotent ideal of a finite ring."""
    def oracle(ideal):
        return nilpotency_index(ring, ideal) is not None

    result = ideal_generated(ring, np.flatnonzero(_sweep(ring, oracle)))
    if not oracle(result):
        raise RadicalConsistencyError(f"{ring.name}: sum of nilpotent ideals {result} is not nilpotent")
    return result


def delta_orbit_set(ring: FiniteRing, d: Derivation, a: int) -> Tuple[Tuple[int, ...], Dict[int, Tuple[int, Optional[int]]]]:
    """
    The union of δʲ(a)·R over the δ-orbit of a, each element tagged with one
    pair (j, r) such that it equals δʲ(a)·r. In a ring without identity the
    orbit elements themselves join the set with the tag (j, None).
    """
    tags: Dict[int, Tuple[int, Optional[int]]] = {}
    orbit = d.orbit(a)
    for j, value in enumerate(orbit.values):
        if not ring.is_unital:
            tags.setdefault(value, (j, None))
        for r in ring.elements:
            tags.setdefault(int(ring.mul_table[value, r]), (j, r))
    return tuple(sorted(tags)), tags


def delta_right_ideal(ring: FiniteRing, d: Derivation, a: int) -> Ideal:
    """Σⱼ δʲ(a)R, or the right ideal generated by the orbit when there is no identity."""
    return ideal_generated(ring, d.orbit(a).values, Sidedness.RIGHT)


def in_radideal_Il_delta(ring, d: Derivation, a: int) -> bool:
    """Whether Σⱼ δʲ(a)R is left T-nilpotent."""
    if not ring.has_tables:
        # commutative with zero derivation: aR is left T-nilpotent iff a is nilpotent
        if not (ring.is_commutative and d.is_zero):
            raise DerivationStructureError(f"{ring.name} keeps no tables; only the commutative "
                                           f"zero-derivation case is decided without them")
        return element_nilpotency_index(ring, a) is not None
    return is_left_t_nilpotent(ring, delta_right_ideal(ring, d, a).members).verdict


@dataclass
class DeltaRadideal:
    """ℐ_{l,δ}(R) as a raw element set; ideal-ness is measured, not assumed."""
    ring: FiniteRing
    mask: np.ndarray
    is_ideal: bool
    is_delta_subset: bool

    @property
    def members(self) -> Tuple[int, ...]:
        return tuple(int(a) for a in np.flatnonzero(self.mask))

    def __contains__(self, a) -> bool:
        return bool(self.mask[a])

    def __len__(self):
        return int(self.mask.sum())

    def __str__(self):
        return self.ring.format_set(self.members)


def radideal_Il_delta(ring: FiniteRing, d: Derivation, config: EngineConfig = DEFAULT_CONFIG) -> DeltaRadideal:
    if not ring.has_tables:
        raise RingStructureError(f"{ring.name} keeps no tables; decide single elements with in_radideal_Il_delta")
    mask = np.array([in_radideal_Il_delta(ring, d, a) for a in ring.elements], dtype=bool)
    is_ideal = bool((ideal_generated(ring, np.flatnonzero(mask)).mask == mask).all())
    return DeltaRadideal(ring, mask, is_ideal, is_delta_subset(ring, d, np.flatnonzero(mask)))


@dataclass
class RadidealChain:
    """ℐ⁽¹⁾ ⊆ ℐ⁽²⁾ ⊆ … until the first repeat; ``limit`` is the last stage."""
    stages: List[Ideal]
    stabilization_step: int

    @property
    def limit(self) -> Ideal:
        return self.stages[-1]


def higher_radideals(ring: FiniteRing, d: Derivation = None, config: EngineConfig = DEFAULT_CONFIG) -> RadidealChain:
    """
    Iterate stage ↦ preimage of the radideal of R/stage, starting from {0}.

    Without a derivation the radideal is ℐₗ and the limit is the prime
    radical. With one it is ℐ_{l,δ} of the quotient under the induced
    derivation, and every stage must be a δ-ideal.
    """
    current = Ideal.zero(ring)
    stages: List[Ideal] = []
    for step in range(1, ring.order + 1):
        try:
            data = quotient_ring(ring, current, d)
        except NotADeltaIdealError as exc:
            raise HigherRadidealError(step - 1, current.members, "is not a delta-ideal") from exc
        if d is None:
            radical_mask = radideal_Il(data.quotient).mask
        else:
            radical = radideal_Il_delta(data.quotient, data.induced_derivation, config)
            if not radical.is_ideal:
                raise HigherRadidealError(step, np.flatnonzero(data.preimage(radical.mask)), "is not an ideal")
            radical_mask = radical.mask
        pulled = Ideal(ring, data.preimage(radical_mask))
        if pulled == current:
            if not stages:
                stages.append(pulled)
            break
        stages.append(pulled)
        current = pulled
    steps = len(stages) - 1 if stages[0].is_zero else len(stages)
    return RadidealChain(stages, steps)
