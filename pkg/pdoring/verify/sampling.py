import hashlib
from typing import Optional, Sequence

import numpy as np

from pdoring.algebra.derivation import Derivation
from pdoring.series.laurent_series import DEFAULT_POLICY, PrecisionPolicy, Series

TOP_RANGE = (-3, 3)
MAX_WIDTH = 6


def suite_rng(seed: int, suite: str, fixture: str) -> np.random.Generator:
    """Private stream per (seed, suite, fixture); independent of scheduling order."""
    digest = hashlib.sha256(f"{seed}:{suite}:{fixture}".encode("utf-8")).digest()
    return np.random.default_rng(int.from_bytes(digest[:8], "little"))


def random_element(rng: np.random.Generator, members: Sequence[int]) -> int:
    return int(members[rng.integers(0, len(members))])


def random_series(rng: np.random.Generator, ring, d: Derivation, members: Optional[Sequence[int]] = None,
                  policy: PrecisionPolicy = DEFAULT_POLICY) -> Series:
    """
    Exact series with top uniform in [-3, 3] and at most six consecutive
    degrees of support, coefficients uniform over ``members`` (default: the ring).
    """
    if members is None:
        members = list(ring.elements)
    top = int(rng.integers(TOP_RANGE[0], TOP_RANGE[1] + 1))
    width = int(rng.integers(1, MAX_WIDTH + 1))
    terms = [(top - i, random_element(rng, members)) for i in range(width)]
    return Series.from_terms(ring, d, terms, policy=policy)
