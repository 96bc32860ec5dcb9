"""Exception types shared across the package."""


class InvalidWeightError(ValueError):
    """A weight, boundary offset or torus point violates its invariants."""


class SingularPointError(ArithmeticError):
    """The Weyl denominator vanishes at the requested torus point."""


class ScaleGuardError(RuntimeError):
    """A computation was refused because it exceeds the configured size cap."""
