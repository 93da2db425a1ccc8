from typing import Dict, Optional, Sequence

import numpy as np

from pdoring.algebra.finite_ring import FiniteRing
from pdoring.config import DEFAULT_CONFIG, EngineConfig
from pdoring.errors import NonUnitalRingError, RingSizeError, RingStructureError


class CoordinateRing:
    """
    A Z_m-algebra free on a named basis, multiplied through structure constants.

    Elements are encoded as integers in base m (coordinate k is digit k), so a
    CoordinateRing is usable wherever a FiniteRing is expected for element
    arithmetic, without ever building operation tables.
    """
    has_tables = False
    zero = 0

    def __init__(self, modulus: int, basis_names: Sequence[str], structure: np.ndarray,
                 one_coords: Optional[Sequence[int]] = None, generators: Dict[str, Sequence[int]] = None,
                 name: str = None, commutative: bool = None, exponents: Sequence[Sequence[int]] = None):
        if modulus < 1:
            raise RingStructureError(f"modulus must be positive, got {modulus}")
        dim = len(basis_names)
        structure = np.asarray(structure, dtype=np.int64) % modulus
        if structure.shape != (dim, dim, dim):
            raise RingStructureError(f"structure constants have shape {structure.shape}, expected {(dim,) * 3}")
        self.modulus = modulus
        self.basis_names = list(basis_names)
        self.structure = structure
        self.structure.setflags(write=False)
        self.one = None if one_coords is None else self.encode(one_coords)
        self.generators = {g: self.encode(c) for g, c in (generators or {}).items()}
        self.name = name or f"algebra of dimension {dim} over Z{modulus}"
        # monomial exponents per basis vector, for partial derivatives
        self.exponents = None if exponents is None else [tuple(e) for e in exponents]
        self._commutative = commutative

    @property
    def dim(self) -> int:
        return len(self.basis_names)

    @property
    def order(self) -> int:
        return self.modulus ** self.dim

    @property
    def is_unital(self) -> bool:
        return self.one is not None

    @property
    def is_commutative(self) -> bool:
        if self._commutative is None:
            self._commutative = bool((self.structure == self.structure.transpose(1, 0, 2)).all())
        return self._commutative

    def require_one(self) -> int:
        if self.one is None:
            raise NonUnitalRingError(f"{self.name} has no identity")
        return self.one

    def encode(self, coords) -> int:
        return int(sum(int(c) % self.modulus * self.modulus ** k for k, c in enumerate(coords)))

    def decode(self, a: int) -> np.ndarray:
        coords = np.zeros(self.dim, dtype=np.int64)
        for k in range(self.dim):
            a, coords[k] = divmod(a, self.modulus)
        return coords

    def add(self, a: int, b: int) -> int:
        return self.encode((self.decode(a) + self.decode(b)) % self.modulus)

    def neg(self, a: int) -> int:
        return self.encode((-self.decode(a)) % self.modulus)

    def sub(self, a: int, b: int) -> int:
        return self.encode((self.decode(a) - self.decode(b)) % self.modulus)

    def mul(self, a: int, b: int) -> int:
        left = np.tensordot(self.decode(a), self.structure, axes=(0, 0))
        return self.encode(self.decode(b) @ left % self.modulus)

    def int_scale(self, m: int, a: int) -> int:
        return self.encode(self.decode(a) * m % self.modulus)

    def coords_name(self, coords) -> str:
        terms = []
        for c, basis in zip(coords, self.basis_names):
            c = int(c)
            if c == 0:
                continue
            if basis == "1":
                terms.append(str(c))
            else:
                terms.append(basis if c == 1 else f"{c}*{basis}")
        return "+".join(terms) if terms else "0"

    def element_name(self, a: int) -> str:
        return self.coords_name(self.decode(a))

    def format_set(self, members) -> str:
        return "{" + ", ".join(self.element_name(int(a)) for a in sorted(members)) + "}"

    def materialize(self, config: EngineConfig = DEFAULT_CONFIG) -> FiniteRing:
        """Build the operation tables, refusing orders above ``config.max_order``."""
        n = self.order
        if n > config.max_order:
            raise RingSizeError(n, config.max_order)
        m, dim = self.modulus, self.dim
        places = np.array([m ** k for k in range(dim)], dtype=np.int64)
        coords = (np.arange(n)[:, None] // places[None, :]) % m
        add = np.empty((n, n), dtype=np.int64)
        mul = np.empty((n, n), dtype=np.int64)
        for a in range(n):
            add[a] = ((coords[a] + coords) % m) @ places
            left = np.tensordot(coords[a], self.structure, axes=(0, 0))
            mul[a] = ((coords @ left) % m) @ places
        neg = ((-coords) % m) @ places
        names = [self.coords_name(c) for c in coords]
        ring = FiniteRing(add, mul, neg, zero=0, one=self.one, element_names=names,
                          generators=self.generators, name=self.name)
        ring.coordinate_ring = self
        return ring
