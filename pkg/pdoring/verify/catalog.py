from dataclasses import dataclass, field
from typing import Callable, Dict, Iterator, List, Optional, Tuple

from pdoring.algebra.derivation import Derivation, validate_derivation
from pdoring.algebra.finite_ring import FiniteRing, validate_ring
from pdoring.algebra.ideal import Ideal, is_delta_compatible
from pdoring.algebra.ring_factory import RingFactory
from pdoring.config import DEFAULT_CONFIG, EngineConfig
from pdoring.errors import DefinitionError, RingStructureError

# (modulus, generator count, largest power checked) for the unbounded-nilpotence family
COUNTEREXAMPLE_RUNS: Tuple[Tuple[int, int, int], ...] = ((2, 1, 1), (2, 2, 2), (2, 3, 3))


@dataclass
class Fixture:
    name: str
    ring: FiniteRing
    derivation: Derivation
    description: str = ""
    metadata: Dict[str, object] = field(default_factory=dict)

    @property
    def delta_compatible(self) -> bool:
        return bool(self.metadata["delta_compatible"])

    @classmethod
    def build(cls, name: str, ring: FiniteRing, derivation: Derivation, description: str = "",
              config: EngineConfig = DEFAULT_CONFIG) -> 'Fixture':
        """Validate ring and derivation and record the metadata suites gate on."""
        violations = validate_ring(ring, config)
        if violations:
            raise RingStructureError(f"fixture {name}: {violations[0]}")
        violations = validate_derivation(ring, derivation)
        if violations:
            raise RingStructureError(f"fixture {name}: derivation {violations[0]}")
        metadata = {
            "order": ring.order,
            "unital": ring.is_unital,
            "commutative": ring.is_commutative,
            "zero_derivation": derivation.is_zero,
            "delta_compatible": is_delta_compatible(ring, derivation, Ideal.zero(ring)),
        }
        return cls(name, ring, derivation, description, metadata)


def _z4_zero(config):
    ring = RingFactory.make_zn(4, config)
    return ring, Derivation.zero(ring), "Z4, zero derivation"


def _z8_zero(config):
    ring = RingFactory.make_zn(8, config)
    return ring, Derivation.zero(ring), "Z8, zero derivation"


def _z2_zero(config):
    ring = RingFactory.make_zn(2, config)
    return ring, Derivation.zero(ring), "Z2 (a field), zero derivation"


def _dual_partial(config):
    ring = RingFactory.make_truncated_poly(2, [2], config)
    return ring, Derivation.partial(ring, "a"), "Z2[a]/(a^2), d/da"


def _dual_zero(config):
    ring = RingFactory.make_truncated_poly(2, [2], config)
    return ring, Derivation.zero(ring), "Z2[a]/(a^2), zero derivation"


def _trunc23_zero(config):
    ring = RingFactory.make_truncated_poly(2, [2, 3], config)
    return ring, Derivation.zero(ring), "Z2[a1,a2]/(a1^2,a2^3), zero derivation"


def _tri_inner(config):
    ring = RingFactory.make_triangular_matrix_ring(2, 2, config)
    return ring, Derivation.inner(ring, ring.generators["e12"]), "T2(Z2), inner derivation by e12"


def _m2_inner(config):
    ring = RingFactory.make_matrix_ring(2, 2, config)
    return ring, Derivation.inner(ring, ring.generators["e12"]), "M2(Z2), inner derivation by e12"


def _skewdual_inner(config):
    ring = RingFactory.make_skew_dual_numbers(config)
    return ring, Derivation.inner(ring, ring.generators["t"]), "GF4[t;frob]/(t^2), inner derivation by t"


def _trivext_swap(config):
    ring = RingFactory.make_trivial_extension(2, 2, config)
    g = ring.generators
    d = Derivation.from_basis_images(ring, [ring.zero, g["b2"], g["b1"]], "swap")
    return ring, d, "Z2+Z2^2 with b1 <-> b2"


def _z2xz2_zero(config):
    z2 = RingFactory.make_zn(2, config)
    ring = RingFactory.make_product(z2, z2, config)
    return ring, Derivation.zero(ring), "Z2 x Z2, zero derivation"


def _z4_x_dual(config):
    z4 = RingFactory.make_zn(4, config)
    dual = RingFactory.make_truncated_poly(2, [2], config)
    ring = RingFactory.make_product(z4, dual, config)
    d = Derivation.product(ring, Derivation.zero(z4), Derivation.partial(dual, "a"))
    return ring, d, "Z4 x Z2[a]/(a^2), 0 x d/da"


FIXTURE_BUILDERS: Dict[str, Callable] = {
    "z4_zero": _z4_zero,
    "z8_zero": _z8_zero,
    "z2_zero": _z2_zero,
    "dual_partial": _dual_partial,
    "dual_zero": _dual_zero,
    "trunc23_zero": _trunc23_zero,
    "tri_inner": _tri_inner,
    "m2_inner": _m2_inner,
    "skewdual_inner": _skewdual_inner,
    "trivext_swap": _trivext_swap,
    "z2xz2_zero": _z2xz2_zero,
    "z4_x_dual": _z4_x_dual,
}


def build_fixture(name: str, config: EngineConfig = DEFAULT_CONFIG) -> Fixture:
    builder = FIXTURE_BUILDERS.get(name)
    if builder is None:
        raise DefinitionError(f"unknown fixture '{name}', expected one of {', '.join(FIXTURE_BUILDERS)}")
    ring, derivation, description = builder(config)
    return Fixture.build(name, ring, derivation, description, config)


class FixtureCatalog:
    """Ordered collection of validated (ring, derivation) fixtures."""

    def __init__(self, fixtures: List[Fixture] = None):
        self.fixtures = list(fixtures or [])

    @classmethod
    def default(cls, config: EngineConfig = DEFAULT_CONFIG, names: Optional[List[str]] = None) -> 'FixtureCatalog':
        return cls([build_fixture(n, config) for n in (names or FIXTURE_BUILDERS)])

    def get(self, name: str) -> Fixture:
        for fixture in self.fixtures:
            if fixture.name == name:
                return fixture
        raise KeyError(name)

    @property
    def names(self) -> List[str]:
        return [f.name for f in self.fixtures]

    def __iter__(self) -> Iterator[Fixture]:
        return iter(self.fixtures)

    def __len__(self):
        return len(self.fixtures)
