import re
from typing import Dict, List, Optional

from pdoring.algebra.derivation import Derivation
from pdoring.algebra.finite_ring import FiniteRing
from pdoring.cli.expression import (BigO, Delta, Difference, ElementPair, Expr, Group, IndexLiteral, IntLiteral,
                                    Name, Negation, Power, Product, Sum, XPower, parse_expr)
from pdoring.config import DEFAULT_CONFIG, EngineConfig
from pdoring.errors import CliUsageError, ExpressionError, UnknownIdentifierError
from pdoring.series.laurent_series import PrecisionPolicy, Series
from pdoring.verify.report import VerificationReport

_IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_RESERVED = {"x", "D", "O"}


class Session:
    """
    State of one script: the ring and derivation, named series, the precision
    policy, the output mode and the verification reports collected so far.
    """

    def __init__(self, config: EngineConfig = DEFAULT_CONFIG, output: str = "text", show_progress: bool = False):
        self.config = config
        self.output = output
        self.show_progress = show_progress
        self.ring: Optional[FiniteRing] = None
        self.derivation: Optional[Derivation] = None
        self.bindings: Dict[str, Series] = {}
        self.policy = PrecisionPolicy(config.floor_drop)
        self.reports: List[VerificationReport] = []
        self.line_failed = False

    def require_ring(self) -> FiniteRing:
        if self.ring is None:
            raise CliUsageError("no ring is set", hint="start with 'ring <definition>', e.g. 'ring zn 4'")
        return self.ring

    def set_ring(self, ring: FiniteRing, derivation: Derivation = None):
        """Switch rings; bindings over the old ring are dropped."""
        self.ring = ring
        self.derivation = derivation if derivation is not None else Derivation.zero(ring)
        self.bindings.clear()

    def set_derivation(self, derivation: Derivation):
        if derivation.ring is not self.require_ring():
            raise CliUsageError("derivation belongs to another ring")
        self.derivation = derivation
        self.bindings.clear()

    def set_precision(self, floor_drop: int):
        self.policy = PrecisionPolicy(floor_drop)

    def bind(self, name: str, value: Series):
        if not _IDENTIFIER.match(name) or name in _RESERVED:
            raise CliUsageError(f"'{name}' cannot name a series", hint="use a letter followed by letters, digits or _")
        if name in self.require_ring().generators:
            raise CliUsageError(f"'{name}' is a generator of {self.ring.name}", hint="pick another name")
        self.bindings[name] = value

    def mark_failed(self):
        self.line_failed = True

    def evaluate(self, text: str) -> Series:
        self.require_ring()
        return eval_expr(self, parse_expr(text))

    def element_of(self, text: str) -> int:
        """The ring element an expression denotes; only exact degree-0 series qualify."""
        value = self.evaluate(text)
        if not value.exact or any(degree != 0 for degree, _ in value.terms()):
            raise CliUsageError(f"'{text.strip()}' is not a ring element", hint="drop x, x^k and O(...) terms")
        return value.coefficient_at(0)

    def elements_of(self, text: str) -> List[int]:
        """Comma separated elements; commas inside parentheses do not split."""
        parts, depth, current = [], 0, []
        for ch in text:
            if ch == "," and depth == 0:
                parts.append("".join(current))
                current = []
                continue
            depth += {"(": 1, ")": -1}.get(ch, 0)
            current.append(ch)
        parts.append("".join(current))
        return [self.element_of(part) for part in parts]


def eval_expr(session: Session, expr: Expr) -> Series:
    """
    Evaluate in left-coefficient normal form. Every product goes through
    Series.mul, so ``x*a`` becomes ``a*x + D(a)``.
    """
    ring, d, policy = session.require_ring(), session.derivation, session.policy

    def scalar(a: int) -> Series:
        return Series.embed_scalar(ring, d, a, policy)

    def walk(node: Expr) -> Series:
        if isinstance(node, Name):
            if node.name in ring.generators:
                return scalar(ring.generators[node.name])
            if node.name in session.bindings:
                return session.bindings[node.name]
            raise UnknownIdentifierError(node.name, node.position)
        if isinstance(node, IntLiteral):
            if node.value == 0:
                return Series.zero(ring, d, policy)
            if not ring.is_unital:
                raise ExpressionError("integer literals need a ring with identity", node.position)
            return scalar(ring.int_scale(node.value, ring.one))
        if isinstance(node, IndexLiteral):
            if node.index >= ring.order:
                raise ExpressionError(f"element #{node.index} outside 0..{ring.order - 1}", node.position)
            return scalar(node.index)
        if isinstance(node, XPower):
            return Series.x_power(ring, d, node.exponent, policy)
        if isinstance(node, BigO):
            return Series.big_o(ring, d, node.exponent, policy)
        if isinstance(node, Sum):
            return walk(node.left) + walk(node.right)
        if isinstance(node, Difference):
            return walk(node.left) - walk(node.right)
        if isinstance(node, Product):
            return walk(node.left).mul(walk(node.right))
        if isinstance(node, Negation):
            return -walk(node.operand)
        if isinstance(node, Group):
            return walk(node.inner)
        if isinstance(node, Power):
            return walk(node.base).power(node.exponent)
        if isinstance(node, Delta):
            return walk(node.operand).delta(node.power)
        if isinstance(node, ElementPair):
            return scalar(_pair_element(session.config, ring, node))
        raise ExpressionError(f"cannot evaluate {type(node).__name__}", getattr(node, "position", 0))

    return walk(expr)


def _pair_element(config: EngineConfig, ring: FiniteRing, node: ElementPair) -> int:
    """Index of (u, v) in a product ring; each component is evaluated in its own factor."""
    if ring.factors is None:
        raise ExpressionError(f"pairs need a product ring, {ring.name} is not one", node.position)
    first, second = ring.factors
    return _factor_element(config, first, node.first) * second.order + _factor_element(config, second, node.second)


def _factor_element(config: EngineConfig, factor: FiniteRing, expr: Expr) -> int:
    inner = Session(config)
    inner.set_ring(factor)
    value = eval_expr(inner, expr)
    if not value.exact or any(degree != 0 for degree, _ in value.terms()):
        raise ExpressionError("pair components must be ring elements", expr.position)
    return value.coefficient_at(0)
