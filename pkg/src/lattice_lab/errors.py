"""Exception types shared across the package."""


class LatticeLabError(Exception):
    """Base class for all domain errors raised by this package."""


class ParameterError(LatticeLabError, ValueError):
    """An argument violates a documented precondition."""


class RankDeficientError(LatticeLabError, ValueError):
    """The given rows are linearly dependent over the rationals."""


class GenerationError(LatticeLabError, RuntimeError):
    """Basis generation failed to produce a full-rank matrix."""


class BasisParseError(LatticeLabError, ValueError):
    """Basis text is malformed. Carries the 1-based offending line."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class UnknownSchemeError(LatticeLabError, KeyError):
    """Requested scheme is not in the profile registry."""

    def __init__(self, scheme: str, available: list[str]):
        super().__init__(f"unknown scheme {scheme!r}; available: {', '.join(available)}")
        self.scheme = scheme
        self.available = available
