class PdoringError(Exception):
    """Base class of every error raised by pdoring."""


class RingStructureError(PdoringError):
    """Operation tables have the wrong shape or hold out-of-range indices."""


class RingSizeError(PdoringError):
    def __init__(self, order: int, bound: int):
        super().__init__(f"ring order {order} exceeds the configured bound {bound}")
        self.order = order
        self.bound = bound


class NonUnitalRingError(PdoringError):
    """The operation needs a multiplicative identity."""


class IncompatibleRingsError(PdoringError):
    """Operands live over different rings or derivations."""


class DerivationStructureError(PdoringError):
    """Derivation table does not match the ring order."""


class NotADeltaIdealError(PdoringError):
    def __init__(self, element: int, image: int):
        super().__init__(f"not a delta-ideal: element {element} maps to {image} outside the ideal")
        self.element = element
        self.image = image


class PrecisionError(PdoringError):
    """A comparison or coefficient request reaches below a guaranteed floor."""


class HigherRadidealError(PdoringError):
    def __init__(self, step: int, members, reason: str):
        super().__init__(f"stage {step} of the radideal chain {reason}")
        self.step = step
        self.members = tuple(members)
        self.reason = reason


class RadicalConsistencyError(PdoringError):
    """A radical computed by element sweep failed its post-hoc check."""


class DefinitionError(PdoringError):
    """Malformed ring or derivation definition line."""


class ExpressionError(PdoringError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.message = message
        self.position = position


class LexicalError(ExpressionError):
    pass


class UnbalancedParenthesesError(ExpressionError):
    pass


class UnknownIdentifierError(ExpressionError):
    def __init__(self, name: str, position: int):
        super().__init__(f"unknown identifier '{name}'", position)
        self.name = name


class ExponentOverflowError(ExpressionError):
    pass


class CliUsageError(PdoringError):
    def __init__(self, message: str, hint: str = None):
        super().__init__(message if hint is None else f"{message} (hint: {hint})")
        self.hint = hint
