from dataclasses import dataclass, replace


@dataclass(frozen=True)
class EngineConfig:
    """
    Engine-wide defaults.

    :param max_order: largest order of a ring built with operation tables
    :param exhaustive_triple_order: above this order the O(n^3) axiom checks are sampled
    :param validation_samples: number of random triples used by sampled validation
    :param floor_drop: degrees kept below the top of a truncated expansion
    :param trials: trials per randomized verification suite
    :param witness_length: product length of the main theorem witness test
    :param ideal_enumeration_order: rings up to this order get exhaustive ideal enumeration
    :param ideal_enumeration_limit: stop enumerating ideals after this many
    :param lazy_max_order: bound for coordinate rings that never build tables
    :param seed: default random seed
    """
    max_order: int = 4096
    exhaustive_triple_order: int = 512
    validation_samples: int = 20000
    floor_drop: int = 24
    trials: int = 200
    witness_length: int = 10
    ideal_enumeration_order: int = 64
    ideal_enumeration_limit: int = 4096
    lazy_max_order: int = 2 ** 40
    seed: int = 0

    def with_overrides(self, **kwargs) -> 'EngineConfig':
        values = {k: v for k, v in kwargs.items() if v is not None}
        return replace(self, **values)


DEFAULT_CONFIG = EngineConfig()
