"""
Exception hierarchy for the forest Turán toolkit.

Every error raised on purpose by the library derives from ForestTuranError so the
CLI can turn it into a one-line message and a non-zero exit status. Errors about
bad input values also derive from ValueError.
"""

from typing import Any, Optional


class ForestTuranError(Exception):
    """Root of all library errors."""


class ConfigError(ForestTuranError, ValueError):
    """An environment variable or CLI override could not be parsed."""


class GraphConstructionError(ForestTuranError, ValueError):
    """A graph could not be built from the given vertices or edges."""


class Graph6ParseError(ForestTuranError, ValueError):
    """Malformed graph6 input; `offset` is the byte where parsing failed."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class CanonicalSizeError(ForestTuranError, ValueError):
    """Graph too large for brute-force canonical labelling."""


class SpecSyntaxError(ForestTuranError, ValueError):
    """A linear forest spec string could not be parsed."""


class DomainError(ForestTuranError, ValueError):
    """Arguments fall outside the domain of a formula or constructor."""


class OutOfRegimeError(DomainError):
    """The theorem makes no claim for these parameters (e.g. m <= p)."""


class HypothesisError(DomainError):
    """A theorem hypothesis is violated by the given linear forest."""


class UnknownFamilyError(ForestTuranError, ValueError):
    """No constructor is registered under the requested family name."""


class EmbeddingBudgetExceeded(ForestTuranError):
    """The forest embedding search ran out of path extensions."""

    def __init__(self, steps: int):
        super().__init__(f"embedding search budget exceeded after {steps} extensions")
        self.steps = steps


class OracleBudgetError(ForestTuranError):
    """The requested oracle instance is larger than the configured budget."""


class BudgetExceededError(ForestTuranError):
    """The oracle search hit its node budget; `partial` holds the best result so far."""

    def __init__(self, message: str, partial: Optional[Any] = None):
        super().__init__(message)
        self.partial = partial


class SpectralConvergenceError(ForestTuranError):
    """Power iteration hit its iteration cap; `best_estimate` is the last Rayleigh quotient."""

    def __init__(self, message: str, best_estimate: float):
        super().__init__(f"{message} (best estimate {best_estimate:.9f})")
        self.best_estimate = best_estimate
