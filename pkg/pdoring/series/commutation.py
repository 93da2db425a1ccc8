from dataclasses import dataclass
from typing import Optional

from pdoring.algebra.derivation import Derivation
from pdoring.series.binomial import binom_int
from pdoring.series.laurent_series import DEFAULT_POLICY, PrecisionPolicy, Series, commute_terms


def commute_pow(ring, d: Derivation, k: int, a: int, requested_floor: Optional[int] = None,
                policy: PrecisionPolicy = DEFAULT_POLICY) -> Series:
    """
    xᵏ·a in left-coefficient form, Σ_t binom_int(k, t)·δᵗ(a)·x^(k-t).

    Exact when k >= 0 or the δ-orbit of a reaches zero. Otherwise the
    expansion is cut at ``requested_floor`` (default: k - policy.default_floor_drop).
    """
    if k >= 0 or d.orbit(a).terminates:
        return Series(ring, d, dict(commute_terms(ring, d, k, a, None)), policy=policy)
    floor = k - policy.default_floor_drop if requested_floor is None else min(requested_floor, k)
    return Series(ring, d, dict(commute_terms(ring, d, k, a, floor)), floor=floor, exact=False, policy=policy)


def x_power_times(f: Series, k: int) -> Series:
    """xᵏ·f for k >= 0, expanded term by term; needs no identity in the ring."""
    if k < 0:
        raise ValueError(f"left multiplication is by nonnegative powers only, got {k}")
    ring = f.ring
    coeffs = {}
    floor = None if f.exact else f.floor + k
    for n, a in f.terms():
        for degree, c in commute_terms(ring, f.derivation, k, a, None):
            if floor is not None and degree + n < floor:
                continue
            coeffs[degree + n] = ring.add(coeffs.get(degree + n, ring.zero), c)
    return Series(ring, f.derivation, coeffs, floor=floor, exact=f.exact, policy=f.policy)


@dataclass
class ConjugationResult:
    holds: bool
    degree: Optional[int]
    lhs: Series
    rhs: Series
    floor: Optional[int]

    def __bool__(self):
        return self.holds


def conjugation_check(f: Series, j: int, precision_floor: Optional[int] = None) -> ConjugationResult:
    """
    Compare δʲ(f) with Σ_i (-1)^(j-i)·C(j,i)·xⁱ·f·x^(j-i) down to ``precision_floor``.

    ``degree`` is the highest degree where the two sides differ, or None.
    """
    if j < 0:
        raise ValueError(f"derivation power must be nonnegative, got {j}")
    lhs = f.delta(j)
    rhs = Series.zero(f.ring, f.derivation, f.policy)
    for i in range(j + 1):
        term = x_power_times(f, i).shift(j - i).scale((-1) ** (j - i) * binom_int(j, i))
        rhs = rhs + term
    floor = precision_floor
    if not f.exact:
        floor = f.floor + j if floor is None else max(floor, f.floor + j)
    degree = lhs.first_difference(rhs, floor)
    return ConjugationResult(degree is None, degree, lhs, rhs, floor)
