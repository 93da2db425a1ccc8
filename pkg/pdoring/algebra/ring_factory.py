import itertools
import math
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from pdoring.algebra.coordinate_ring import CoordinateRing
from pdoring.algebra.finite_ring import FiniteRing
from pdoring.config import DEFAULT_CONFIG, EngineConfig
from pdoring.errors import RingSizeError, RingStructureError


def find_identity(mul_table: np.ndarray) -> Optional[int]:
    n = len(mul_table)
    elems = np.arange(n)
    for e in range(n):
        if (mul_table[e, :] == elems).all() and (mul_table[:, e] == elems).all():
            return e
    return None


def _monomial_name(exponent: Sequence[int], variables: Sequence[str]) -> str:
    factors = [v if e == 1 else f"{v}^{e}" for v, e in zip(variables, exponent) if e]
    return "*".join(factors) if factors else "1"


class RingFactory:
    """Constructors of the coefficient rings used as fixtures."""

    @staticmethod
    def make_zn(n: int, config: EngineConfig = DEFAULT_CONFIG) -> FiniteRing:
        if n < 1:
            raise RingStructureError(f"Z_n needs n >= 1, got {n}")
        if n > config.max_order:
            raise RingSizeError(n, config.max_order)
        elems = np.arange(n)
        add = np.add.outer(elems, elems) % n
        mul = np.multiply.outer(elems, elems) % n
        return FiniteRing(add, mul, (-elems) % n, zero=0, one=1 % n,
                          element_names=[str(i) for i in elems], name=f"Z{n}")

    @staticmethod
    def truncated_poly_algebra(m: int, exponents: Sequence[int],
                               config: EngineConfig = DEFAULT_CONFIG) -> CoordinateRing:
        """Z_m[a₁..a_k]/(a_i^{e_i}) on its monomial basis, without operation tables."""
        exponents = [int(e) for e in exponents]
        if not exponents or min(exponents) < 1:
            raise RingStructureError(f"exponents must be positive, got {exponents}")
        dim = math.prod(exponents)
        if m ** dim > config.lazy_max_order:
            raise RingSizeError(m ** dim, config.lazy_max_order)
        variables = ["a"] if len(exponents) == 1 else [f"a{i + 1}" for i in range(len(exponents))]
        monomials = list(itertools.product(*(range(e) for e in exponents)))
        index = {mono: k for k, mono in enumerate(monomials)}
        structure = np.zeros((dim, dim, dim), dtype=np.int64)
        for i, left in enumerate(monomials):
            for j, right in enumerate(monomials):
                total = tuple(p + q for p, q in zip(left, right))
                if all(t < e for t, e in zip(total, exponents)):
                    structure[i, j, index[total]] = 1
        generators = {}
        for k, v in enumerate(variables):
            unit = [0] * len(exponents)
            unit[k] = 1
            coords = [0] * dim
            if tuple(unit) in index:
                coords[index[tuple(unit)]] = 1
            generators[v] = coords
        one = [1] + [0] * (dim - 1)
        relations = ",".join(f"{v}^{e}" for v, e in zip(variables, exponents))
        return CoordinateRing(m, [_monomial_name(mono, variables) for mono in monomials], structure, one,
                              generators, name=f"Z{m}[{','.join(variables)}]/({relations})",
                              commutative=True, exponents=monomials)

    @classmethod
    def make_truncated_poly(cls, m: int, exponents: Sequence[int],
                            config: EngineConfig = DEFAULT_CONFIG) -> FiniteRing:
        dim = math.prod(int(e) for e in exponents)
        if m ** dim > config.max_order:
            raise RingSizeError(m ** dim, config.max_order)
        return cls.truncated_poly_algebra(m, exponents, config).materialize(config)

    @staticmethod
    def _matrix_units(m: int, size: int, upper_only: bool, label: str,
                      config: EngineConfig) -> FiniteRing:
        units: List[Tuple[int, int]] = [(i, j) for i in range(size) for j in range(size) if not upper_only or i <= j]
        dim = len(units)
        if m ** dim > config.max_order:
            raise RingSizeError(m ** dim, config.max_order)
        index = {u: k for k, u in enumerate(units)}
        structure = np.zeros((dim, dim, dim), dtype=np.int64)
        for (i, j), a in index.items():
            for (k, l), b in index.items():
                if j == k:
                    structure[a, b, index[(i, l)]] = 1
        one = [1 if i == j else 0 for i, j in units]
        names = [f"e{i + 1}{j + 1}" for i, j in units]
        generators = {n: [1 if k == a else 0 for k in range(dim)] for a, n in enumerate(names)}
        algebra = CoordinateRing(m, names, structure, one, generators, name=f"{label}{size}(Z{m})")
        return algebra.materialize(config)

    @classmethod
    def make_triangular_matrix_ring(cls, m: int, size: int = 2, config: EngineConfig = DEFAULT_CONFIG) -> FiniteRing:
        return cls._matrix_units(m, size, True, "T", config)

    @classmethod
    def make_matrix_ring(cls, m: int, size: int = 2, config: EngineConfig = DEFAULT_CONFIG) -> FiniteRing:
        return cls._matrix_units(m, size, False, "M", config)

    @staticmethod
    def make_trivial_extension(m: int, rank: int, config: EngineConfig = DEFAULT_CONFIG) -> FiniteRing:
        """Z_m ⊕ Z_m^rank with b_i·b_j = 0: a local ring whose radical squares to zero."""
        dim = rank + 1
        if m ** dim > config.max_order:
            raise RingSizeError(m ** dim, config.max_order)
        names = ["1"] + (["b"] if rank == 1 else [f"b{i + 1}" for i in range(rank)])
        structure = np.zeros((dim, dim, dim), dtype=np.int64)
        for k in range(dim):
            structure[0, k, k] = 1
            structure[k, 0, k] = 1
        generators = {n: [1 if k == a else 0 for k in range(dim)] for a, n in enumerate(names) if a}
        algebra = CoordinateRing(m, names, structure, [1] + [0] * rank, generators,
                                 name=f"Z{m}+Z{m}^{rank}", commutative=True)
        return algebra.materialize(config)

    @staticmethod
    def make_skew_dual_numbers(config: EngineConfig = DEFAULT_CONFIG) -> FiniteRing:
        """
        GF(4)[t; σ]/(t²) with σ the Frobenius map, on the Z₂-basis 1, w, t, w*t
        (w² = w + 1, t·w = w²·t). Noncommutative and local.
        """
        products: Dict[Tuple[int, int], List[int]] = {
            (1, 1): [0, 1], (1, 2): [3], (1, 3): [2, 3],
            (2, 1): [2, 3], (2, 2): [], (2, 3): [],
            (3, 1): [2], (3, 2): [], (3, 3): [],
        }
        structure = np.zeros((4, 4, 4), dtype=np.int64)
        for k in range(4):
            structure[0, k, k] = 1
            structure[k, 0, k] = 1
        for (i, j), terms in products.items():
            for k in terms:
                structure[i, j, k] = 1
        generators = {"w": [0, 1, 0, 0], "t": [0, 0, 1, 0]}
        algebra = CoordinateRing(2, ["1", "w", "t", "w*t"], structure, [1, 0, 0, 0], generators,
                                 name="GF4[t;frob]/(t^2)")
        return algebra.materialize(config)

    @staticmethod
    def make_product(first: FiniteRing, second: FiniteRing, config: EngineConfig = DEFAULT_CONFIG) -> FiniteRing:
        n1, n2 = first.order, second.order
        if n1 * n2 > config.max_order:
            raise RingSizeError(n1 * n2, config.max_order)
        idx = np.arange(n1 * n2)
        u, v = idx // n2, idx % n2

        def combine(t1, t2):
            return t1[u[:, None], u[None, :]] * n2 + t2[v[:, None], v[None, :]]

        add = combine(first.add_table, second.add_table)
        mul = combine(first.mul_table, second.mul_table)
        neg = first.neg_table[u] * n2 + second.neg_table[v]
        one = None
        generators = {}
        if first.is_unital and second.is_unital:
            one = first.one * n2 + second.one
            generators["e1"] = first.one * n2 + second.zero
            generators["e2"] = first.zero * n2 + second.one
        for g, e in first.generators.items():
            generators[f"{g}_1"] = e * n2 + second.zero
        for g, e in second.generators.items():
            generators[f"{g}_2"] = first.zero * n2 + e
        names = [f"({first.element_name(int(a))}, {second.element_name(int(b))})" for a, b in zip(u, v)]
        ring = FiniteRing(add, mul, neg, zero=first.zero * n2 + second.zero, one=one, element_names=names,
                          generators=generators, name=f"{first.name} x {second.name}")
        ring.factors = (first, second)
        return ring

    @staticmethod
    def make_table_ring(add_table, mul_table, config: EngineConfig = DEFAULT_CONFIG, name: str = None) -> FiniteRing:
        mul = np.array(mul_table, dtype=np.int64)
        if len(mul) > config.max_order:
            raise RingSizeError(len(mul), config.max_order)
        add = np.array(add_table, dtype=np.int64)
        square = mul.ndim == 2 and mul.shape[0] == mul.shape[1] and add.shape == mul.shape
        one = find_identity(mul) if square else None
        zero = (find_identity(add) if square else None) or 0
        return FiniteRing(add, mul, zero=zero, one=one, name=name or f"table ring of order {len(mul)}")


make_zn = RingFactory.make_zn
make_truncated_poly = RingFactory.make_truncated_poly
make_truncated_poly_algebra = RingFactory.truncated_poly_algebra
make_triangular_matrix_ring = RingFactory.make_triangular_matrix_ring
make_matrix_ring = RingFactory.make_matrix_ring
make_trivial_extension = RingFactory.make_trivial_extension
make_skew_dual_numbers = RingFactory.make_skew_dual_numbers
make_product = RingFactory.make_product
make_table_ring = RingFactory.make_table_ring
