from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from pdoring.algebra.derivation import Derivation
from pdoring.algebra.finite_ring import FiniteRing
from pdoring.algebra.ideal import Ideal, is_delta_subset
from pdoring.radicals.t_nilpotency import is_left_t_nilpotent


@dataclass
class AnnihilatorSeries:
    """
    The chain {0} = I⁽⁰⁾ ⊊ I⁽¹⁾ ⊊ … with I⁽ᵏ⁺¹⁾/I⁽ᵏ⁾ the left annihilator of N/I⁽ᵏ⁾.

    ``stages`` lists only distinct stages; ``stabilization_step`` is the number
    of strict increases. ``delta_stable`` holds one flag per stage when a
    derivation was attached.
    """
    stages: List[Ideal]
    reached_top: bool
    stabilization_step: int
    delta_stable: Optional[List[bool]] = field(default=None)

    @property
    def limit(self) -> Ideal:
        return self.stages[-1]


def upper_left_annihilator_series(ring: FiniteRing, d: Derivation = None) -> AnnihilatorSeries:
    M = ring.mul_table
    current = np.zeros(ring.order, dtype=bool)
    current[ring.zero] = True
    stages = [Ideal(ring, current)]
    while True:
        # a lands in the next stage when aN ⊆ current
        grown = current[M].all(axis=1)
        if (grown == current).all():
            break
        current = grown
        stages.append(Ideal(ring, current))
    delta_stable = None
    if d is not None:
        delta_stable = [is_delta_subset(ring, d, stage) for stage in stages]
    return AnnihilatorSeries(stages, bool(current.all()), len(stages) - 1, delta_stable)


def levitzki_equivalence(ring: FiniteRing, d: Derivation = None) -> bool:
    """The cycle oracle and the annihilator series agree on whether the ring is left T-nilpotent."""
    verdict = is_left_t_nilpotent(ring, ring.elements)
    return verdict.verdict == upper_left_annihilator_series(ring, d).reached_top
