from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

import numpy as np

from pdoring.algebra.derivation import Derivation
from pdoring.errors import IncompatibleRingsError, PrecisionError
from pdoring.series.binomial import binom_int


class _Unknown:
    """Coefficient below the floor of a truncated series."""

    def __repr__(self):
        return "unknown"

    def __bool__(self):
        return False


UNKNOWN = _Unknown()


@dataclass(frozen=True)
class PrecisionPolicy:
    default_floor_drop: int = 24

    def __post_init__(self):
        if self.default_floor_drop < 1:
            raise ValueError(f"default_floor_drop must be at least 1, got {self.default_floor_drop}")


DEFAULT_POLICY = PrecisionPolicy()


def commute_terms(ring, derivation: Derivation, k: int, b: int, limit: Optional[int]) -> Iterator[Tuple[int, int]]:
    """
    Terms (degree, coefficient) of x^k·b = Σ_t C(k,t)·δᵗ(b)·x^(k-t).

    Without ``limit`` the expansion must be finite (k >= 0 or the δ-orbit of b
    reaches zero); with it, degrees below ``limit`` are skipped.
    """
    orbit = derivation.orbit(b)
    tmax = k if k >= 0 else None
    if orbit.terminates:
        last = orbit.cycle_start - 1
        tmax = last if tmax is None else min(tmax, last)
    if limit is not None:
        tmax = k - limit if tmax is None else min(tmax, k - limit)
    if tmax is None:
        raise PrecisionError(f"expansion of x^{k}·{ring.element_name(b)} does not terminate")
    for t in range(tmax + 1):
        value = orbit.term(t)
        if value == ring.zero:
            continue
        coeff = ring.int_scale(binom_int(k, t), value)
        if coeff != ring.zero:
            yield k - t, coeff


class Series:
    """
    Element Σ_{i<=top} a_i x^i of R((x⁻¹;δ)) with coefficients on the left.

    An exact series has finite support. A truncated series (``exact`` false)
    knows its coefficients only for degrees >= ``floor``; below that they are
    unknown, never silently zero.
    """

    def __init__(self, ring, derivation: Derivation, coeffs: Dict[int, int] = None, floor: Optional[int] = None,
                 exact: bool = True, policy: PrecisionPolicy = DEFAULT_POLICY):
        if derivation.ring is not ring:
            raise IncompatibleRingsError("derivation belongs to another ring")
        if not exact and floor is None:
            raise ValueError("a truncated series needs a floor")
        coeffs = coeffs or {}
        self.ring = ring
        self.derivation = derivation
        self.exact = exact
        self.policy = policy
        self._coeffs = {int(d): int(c) for d, c in coeffs.items()
                        if c != ring.zero and (exact or d >= floor)}
        if exact:
            self.floor = min(self._coeffs) if self._coeffs else None
        else:
            self.floor = int(floor)

    # construction

    @classmethod
    def zero(cls, ring, derivation: Derivation, policy: PrecisionPolicy = DEFAULT_POLICY) -> 'Series':
        return cls(ring, derivation, {}, policy=policy)

    @classmethod
    def embed_scalar(cls, ring, derivation: Derivation, a: int, policy: PrecisionPolicy = DEFAULT_POLICY) -> 'Series':
        return cls(ring, derivation, {0: a}, policy=policy)

    @classmethod
    def x_power(cls, ring, derivation: Derivation, k: int, policy: PrecisionPolicy = DEFAULT_POLICY) -> 'Series':
        return cls(ring, derivation, {k: ring.require_one()}, policy=policy)

    @classmethod
    def from_terms(cls, ring, derivation: Derivation, terms: Iterable[Tuple[int, int]], floor: int = None,
                   policy: PrecisionPolicy = DEFAULT_POLICY) -> 'Series':
        """Sum of a·x^k terms; repeated degrees add up. A floor makes the result truncated."""
        coeffs: Dict[int, int] = defaultdict(lambda: ring.zero)
        for degree, a in terms:
            coeffs[int(degree)] = ring.add(coeffs[int(degree)], int(a))
        return cls(ring, derivation, dict(coeffs), floor=floor, exact=floor is None, policy=policy)

    @classmethod
    def big_o(cls, ring, derivation: Derivation, degree: int, policy: PrecisionPolicy = DEFAULT_POLICY) -> 'Series':
        """O(x^degree): nothing known at or below ``degree``."""
        return cls(ring, derivation, {}, floor=degree + 1, exact=False, policy=policy)

    def _like(self, coeffs: Dict[int, int], floor: Optional[int], exact: bool) -> 'Series':
        return Series(self.ring, self.derivation, coeffs, floor=floor, exact=exact, policy=self.policy)

    # inspection

    @property
    def top(self) -> Optional[int]:
        return max(self._coeffs) if self._coeffs else None

    @property
    def effective_top(self) -> int:
        """Top degree, or for an all-unknown truncated series the degree just below its floor."""
        if self._coeffs:
            return max(self._coeffs)
        if self.exact:
            raise ValueError("the zero series has no top degree")
        return self.floor - 1

    @property
    def guaranteed_floor(self) -> Optional[int]:
        return None if self.exact else self.floor

    @property
    def is_zero(self) -> bool:
        return self.exact and not self._coeffs

    def is_zero_to_floor(self) -> bool:
        return not self._coeffs

    def terms(self) -> List[Tuple[int, int]]:
        return sorted(self._coeffs.items(), reverse=True)

    def leading(self) -> Tuple[Optional[int], int]:
        if self._coeffs:
            top = max(self._coeffs)
            return top, self._coeffs[top]
        if self.exact:
            return None, self.ring.zero
        raise PrecisionError(f"no known nonzero coefficient above the floor {self.floor}")

    def coefficient_at(self, degree: int):
        if not self.exact and degree < self.floor:
            return UNKNOWN
        return self._coeffs.get(degree, self.ring.zero)

    def coefficients_in(self, mask: np.ndarray) -> bool:
        """All known coefficients lie in the subset given by ``mask``."""
        return all(bool(mask[c]) for c in self._coeffs.values())

    # arithmetic

    def _check(self, other: 'Series'):
        if not isinstance(other, Series):
            raise TypeError(f"expected a Series, got {type(other).__name__}")
        if other.ring is not self.ring or other.derivation is not self.derivation:
            raise IncompatibleRingsError("series over different rings or derivations")

    def add(self, other: 'Series') -> 'Series':
        self._check(other)
        floors = [s.floor for s in (self, other) if not s.exact]
        floor = max(floors) if floors else None
        coeffs = dict(self._coeffs)
        for d, c in other._coeffs.items():
            coeffs[d] = self.ring.add(coeffs.get(d, self.ring.zero), c)
        return self._like(coeffs, floor, not floors)

    def neg(self) -> 'Series':
        return self._like({d: self.ring.neg(c) for d, c in self._coeffs.items()}, self.floor, self.exact)

    def sub(self, other: 'Series') -> 'Series':
        return self.add(other.neg())

    def scale(self, m: int) -> 'Series':
        """m·f for an integer m."""
        return self._like({d: self.ring.int_scale(m, c) for d, c in self._coeffs.items()}, self.floor, self.exact)

    def shift(self, k: int) -> 'Series':
        """f·x^k; coefficients stay on the left, so only degrees move."""
        floor = None if self.exact else self.floor + k
        return self._like({d + k: c for d, c in self._coeffs.items()}, floor, self.exact)

    def truncate(self, floor: int) -> 'Series':
        if not self.exact and floor < self.floor:
            raise PrecisionError(f"cannot truncate at {floor}, below the guaranteed floor {self.floor}")
        return self._like(self._coeffs, floor, False)

    def delta(self, j: int = 1) -> 'Series':
        """δʲ applied coefficient-wise."""
        if j < 0:
            raise ValueError(f"derivation power must be nonnegative, got {j}")
        d = self.derivation
        return self._like({deg: d.power(c, j) for deg, c in self._coeffs.items()}, self.floor, self.exact)

    def _expansions_terminate(self, other: 'Series') -> bool:
        if all(i >= 0 for i in self._coeffs):
            return True
        return all(self.derivation.orbit(b).terminates for b in other._coeffs.values())

    def mul(self, other: 'Series', floor: int = None) -> 'Series':
        """
        Product through x^i·b = Σ_t C(i,t)δᵗ(b)x^(i-t).

        The result is exact when both factors are and every needed expansion
        terminates. Otherwise it is truncated at the deepest floor the inputs
        guarantee, at ``floor`` if that is higher, or by default
        ``policy.default_floor_drop`` degrees below the top.
        """
        self._check(other)
        if self.is_zero or other.is_zero:
            return Series.zero(self.ring, self.derivation, self.policy)
        top_f, top_g = self.effective_top, other.effective_top
        bounds = []
        if not self.exact:
            bounds.append(self.floor + top_g)
        if not other.exact:
            bounds.append(top_f + other.floor)
        guaranteed = max(bounds) if bounds else None
        exact = not bounds and self._expansions_terminate(other)
        if exact:
            limit = None
        else:
            if floor is not None:
                limit = floor
            elif guaranteed is not None:
                limit = guaranteed
            else:
                limit = top_f + top_g - self.policy.default_floor_drop
            if guaranteed is not None:
                limit = max(limit, guaranteed)
        ring = self.ring
        acc: Dict[int, int] = {}
        for i, a in self._coeffs.items():
            if limit is not None and i + top_g < limit:
                continue
            for j, b in other._coeffs.items():
                if limit is not None and i + j < limit:
                    continue
                inner_limit = None if limit is None else limit - j
                for degree, c in commute_terms(ring, self.derivation, i, b, inner_limit):
                    product = ring.mul(a, c)
                    if product != ring.zero:
                        d = degree + j
                        acc[d] = ring.add(acc.get(d, ring.zero), product)
        return self._like(acc, limit, exact)

    def power(self, k: int) -> 'Series':
        if k < 0:
            raise ValueError("series inversion is not supported")
        result = Series.x_power(self.ring, self.derivation, 0, self.policy) if self.ring.is_unital else None
        for _ in range(k):
            result = self if result is None else result.mul(self)
        if result is None:
            raise ValueError("zeroth power needs an identity")
        return result

    def equal_to_floor(self, other: 'Series', floor: Optional[int]) -> bool:
        """Equality of all coefficients at degrees >= ``floor`` (None: everywhere, exact series only)."""
        self._check(other)
        for s in (self, other):
            if not s.exact and (floor is None or floor < s.floor):
                raise PrecisionError(f"comparison floor {floor} is below the guaranteed floor {s.floor}")
        degrees = set(self._coeffs) | set(other._coeffs)
        return all(self._coeffs.get(d, self.ring.zero) == other._coeffs.get(d, self.ring.zero)
                   for d in degrees if floor is None or d >= floor)

    def first_difference(self, other: 'Series', floor: Optional[int]) -> Optional[int]:
        """Highest degree >= floor where the coefficients differ, or None."""
        degrees = sorted(set(self._coeffs) | set(other._coeffs), reverse=True)
        for d in degrees:
            if floor is not None and d < floor:
                break
            if self._coeffs.get(d, self.ring.zero) != other._coeffs.get(d, self.ring.zero):
                return d
        return None

    # operators

    def __add__(self, other):
        return self.add(other)

    def __sub__(self, other):
        return self.sub(other)

    def __neg__(self):
        return self.neg()

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return self.mul(other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        return self.power(k)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        if not (self.exact and other.exact):
            raise PrecisionError("truncated series compare only down to a floor; use equal_to_floor")
        return (self.ring is other.ring and self.derivation is other.derivation
                and self._coeffs == other._coeffs)

    __hash__ = None

    def _coefficient_text(self, a: int, alone: bool) -> str:
        name = self.ring.element_name(a)
        compound = any(ch in name for ch in "+- ,") and not name.startswith("(")
        return f"({name})" if compound and not alone else name

    def __str__(self):
        terms = self.terms()
        alone = len(terms) == 1 and self.exact
        parts = []
        for degree, c in terms:
            if degree == 0:
                parts.append(self._coefficient_text(c, alone))
                continue
            xs = "x" if degree == 1 else f"x^{degree}"
            parts.append(xs if c == self.ring.one else f"{self._coefficient_text(c, False)}*{xs}")
        if not self.exact:
            parts.append(f"O(x^{self.floor - 1})")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"Series({self})"
