"""Exception hierarchy shared across the package."""


class SteinbergError(Exception):
    """Base class for all errors raised by this package."""


class RingMismatchError(SteinbergError, ValueError):
    """Operands belong to different coefficient rings."""


class UnsupportedRingError(SteinbergError, ValueError):
    """The requested ring, or ring map, is outside the supported set."""


class GraphMismatchError(SteinbergError, ValueError):
    """Operands live over different graphs."""


class GraphStructureError(SteinbergError, ValueError):
    """A graph definition is invalid (sink, duplicate id, missing endpoint, ...)."""


class PathError(SteinbergError, ValueError):
    """A path is not composable, or a prefix/strip operation does not apply."""


class ExpressionSyntaxError(SteinbergError, ValueError):
    """Text does not match the expression grammar. Carries a position."""

    def __init__(self, message: str, pos: int = 0, expected: str | None = None):
        detail = f"at position {pos}: {message}"
        if expected:
            detail += f" (expected {expected})"
        super().__init__(detail)
        self.pos = pos
        self.expected = expected


class SemanticError(SteinbergError, ValueError):
    """Text is well-formed but invalid over the given graph or ring."""


class MissingAssignmentError(SteinbergError, KeyError):
    """A representation assignment has no entry for a required bisection."""


class InvariantViolationError(SteinbergError, RuntimeError):
    """An internally checked algebraic invariant failed; indicates a bug."""
