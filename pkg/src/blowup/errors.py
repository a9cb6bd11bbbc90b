class BlowupError(Exception):
    """Base class for errors raised by the invariant pipeline."""


class NormalFormError(BlowupError, ValueError):
    """Polynomial has monomials outside the normal-form index window."""

    def __init__(self, j, violations):
        self.j = j
        self.violations = list(violations)
        shown = ", ".join(f"(k={k},i={i})" for k, i in self.violations)
        super().__init__(f"not in normal form for j={j}: offending monomials {shown}")


class StabilizationFailure(BlowupError):
    """A degree-by-degree search was still changing at its degree cap."""

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class StabilityViolation(BlowupError):
    """H^1 dimension differs between consecutive formal neighborhoods."""


class RankAssertionFailure(BlowupError):
    """The double dual did not come out free of rank two."""


class NonFiniteLength(BlowupError):
    """Truncated colength still growing at the degree cap."""
