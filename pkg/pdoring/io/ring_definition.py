"""
Line formats for rings and derivations, e.g. ``zn 4``, ``truncpoly mod=2 exps=2,3``,
``table n=2 add=0,1;1,0 mul=0,0;0,1``, ``product (zn 4) (truncpoly mod=2 exps=2)``,
``inner c=e12``, ``table 0,0,1,1``, ``partial a``.
"""
from dataclasses import dataclass, field
from typing import Callable, Dict, Optional, Tuple

import pyparsing as pp

from pdoring.algebra.derivation import Derivation
from pdoring.algebra.finite_ring import FiniteRing
from pdoring.algebra.ring_factory import RingFactory
from pdoring.config import DEFAULT_CONFIG, EngineConfig
from pdoring.errors import DefinitionError, DerivationStructureError
from pdoring.verify.catalog import build_fixture


@dataclass(frozen=True)
class RingDefinition:
    kind: str
    params: Dict[str, object] = field(default_factory=dict)
    parts: Tuple['RingDefinition', ...] = ()


@dataclass(frozen=True)
class DerivationDefinition:
    kind: str
    expression: Optional[str] = None
    values: Tuple[int, ...] = ()
    generator: Optional[str] = None


_INTEGER = pp.Word(pp.nums).set_parse_action(lambda t: int(t[0]))
_INT_LIST = pp.Group(pp.DelimitedList(_INTEGER, ","))
_ROWS = pp.Group(pp.DelimitedList(_INT_LIST, ";"))
_NAME = pp.Word(pp.alphas + "_", pp.alphanums + "_")
_LPAR, _RPAR = pp.Suppress("("), pp.Suppress(")")


def _param(name: str, value: pp.ParserElement) -> pp.ParserElement:
    return pp.Suppress(pp.Keyword(name) + "=") + value.copy()(name)


def _kind(name: str) -> pp.ParserElement:
    return pp.Keyword(name)("kind")


def _ring_grammar() -> pp.ParserElement:
    ring = pp.Forward()
    size = pp.Optional(_param("size", _INTEGER))
    ring <<= pp.Group(
        (_kind("zn") + _INTEGER("n"))
        | (_kind("truncpoly") + _param("mod", _INTEGER) + _param("exps", _INT_LIST))
        | (_kind("table") + _param("n", _INTEGER) + _param("add", _ROWS) + _param("mul", _ROWS))
        | (_kind("triangular") + _param("mod", _INTEGER) + size)
        | (_kind("matrix") + _param("mod", _INTEGER) + size)
        | (_kind("trivext") + _param("mod", _INTEGER) + _param("rank", _INTEGER))
        | _kind("skewdual")
        | (_kind("product") + _LPAR + ring("first") + _RPAR + _LPAR + ring("second") + _RPAR)
        | (_kind("fixture") + _NAME("name"))
    )
    return ring


def _derivation_grammar() -> pp.ParserElement:
    return (
        _kind("zero")
        | (_kind("inner") + pp.Suppress(pp.Keyword("c") + "=") + pp.Regex(r".+")("expression"))
        | (_kind("table") + _INT_LIST("values"))
        | (_kind("partial") + _NAME("generator"))
    )


RING_GRAMMAR = _ring_grammar()
DERIVATION_GRAMMAR = _derivation_grammar()


def _parse(grammar: pp.ParserElement, text: str, what: str) -> pp.ParseResults:
    try:
        return grammar.parse_string(text.strip(), parse_all=True)
    except pp.ParseException as exc:
        raise DefinitionError(f"malformed {what} definition '{text.strip()}' at column {exc.col}: {exc.msg}")


def _to_definition(tokens: pp.ParseResults) -> RingDefinition:
    kind = tokens["kind"]
    if kind == "product":
        return RingDefinition(kind, parts=(_to_definition(tokens["first"]), _to_definition(tokens["second"])))
    params = {}
    for key in ("n", "mod", "size", "rank", "name"):
        if key in tokens:
            params[key] = tokens[key]
    if "exps" in tokens:
        params["exps"] = tuple(tokens["exps"])
    for key in ("add", "mul"):
        if key in tokens:
            params[key] = [list(row) for row in tokens[key]]
    return RingDefinition(kind, params)


def parse_ring_definition(text: str) -> RingDefinition:
    return _to_definition(_parse(RING_GRAMMAR, text, "ring")[0])


def parse_derivation_definition(text: str) -> DerivationDefinition:
    tokens = _parse(DERIVATION_GRAMMAR, text, "derivation")
    return DerivationDefinition(
        tokens["kind"],
        expression=tokens["expression"].strip() if "expression" in tokens else None,
        values=tuple(tokens["values"]) if "values" in tokens else (),
        generator=tokens["generator"] if "generator" in tokens else None,
    )


def build_ring(definition: RingDefinition, config: EngineConfig = DEFAULT_CONFIG) -> Tuple[FiniteRing, Optional[Derivation]]:
    """The ring of a definition, with the fixture's derivation for ``fixture <name>``."""
    p, kind = definition.params, definition.kind
    if kind == "zn":
        return RingFactory.make_zn(p["n"], config), None
    if kind == "truncpoly":
        return RingFactory.make_truncated_poly(p["mod"], p["exps"], config), None
    if kind == "table":
        ring = RingFactory.make_table_ring(p["add"], p["mul"], config)
        if ring.order != p["n"]:
            raise DefinitionError(f"table ring declares n={p['n']} but its tables have {ring.order} rows")
        return ring, None
    if kind == "triangular":
        return RingFactory.make_triangular_matrix_ring(p["mod"], p.get("size", 2), config), None
    if kind == "matrix":
        return RingFactory.make_matrix_ring(p["mod"], p.get("size", 2), config), None
    if kind == "trivext":
        return RingFactory.make_trivial_extension(p["mod"], p["rank"], config), None
    if kind == "skewdual":
        return RingFactory.make_skew_dual_numbers(config), None
    if kind == "product":
        first, _ = build_ring(definition.parts[0], config)
        second, _ = build_ring(definition.parts[1], config)
        return RingFactory.make_product(first, second, config), None
    if kind == "fixture":
        fixture = build_fixture(p["name"], config)
        return fixture.ring, fixture.derivation
    raise DefinitionError(f"unknown ring kind '{kind}'")


def build_derivation(definition: DerivationDefinition, ring: FiniteRing,
                     element_of: Callable[[str], int]) -> Derivation:
    """
    :param element_of: evaluates the element expression of ``inner c=...``
    """
    if definition.kind == "zero":
        return Derivation.zero(ring)
    if definition.kind == "inner":
        return Derivation.inner(ring, element_of(definition.expression))
    if definition.kind == "table":
        if len(definition.values) != ring.order:
            raise DerivationStructureError(
                f"derivation table has {len(definition.values)} entries, ring has {ring.order} elements")
        return Derivation.from_table(ring, definition.values)
    if definition.kind == "partial":
        return Derivation.partial(ring, definition.generator)
    raise DefinitionError(f"unknown derivation kind '{definition.kind}'")
