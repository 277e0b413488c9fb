"""Exception types shared across the package."""

from __future__ import annotations


class InvShadowError(Exception):
    """Base class for every error raised by this package."""


class BadParams(InvShadowError):
    """Invalid construction or call parameters."""


class InvalidQuery(BadParams):
    """Malformed decider query."""


class MetricError(InvShadowError):
    """A metric axiom is violated; carries the offending indices."""

    def __init__(self, msg: str, *indices: int):
        super().__init__(msg)
        self.indices = indices


class AsymmetricMetric(MetricError):
    pass


class NegativeDistance(MetricError):
    pass


class NonzeroDiagonal(MetricError):
    pass


class ZeroOffDiagonal(MetricError):
    pass


class TriangleViolation(MetricError):
    pass


class InvalidPoint(InvShadowError):
    pass


class NonpositiveDelta(BadParams):
    pass


class LengthMismatch(InvShadowError):
    pass


class BackwardOnNonInvertible(InvShadowError):
    pass


class NegativeTimeOnNonInvertible(InvShadowError):
    pass


class BudgetExceeded(InvShadowError):
    pass


class MonotonicityViolation(InvShadowError):
    """A phase diagram broke the eps/delta monotonicity contract."""


class ParseError(InvShadowError):
    """System config could not be parsed; carries a line number when known."""

    def __init__(self, reason: str, line: int | None = None):
        loc = f"line {line}: " if line is not None else ""
        super().__init__(f"{loc}{reason}")
        self.reason = reason
        self.line = line
