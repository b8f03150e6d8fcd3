"""Shared exception types and the search-budget countdown."""


class PowerGraphKitError(Exception):
    """Base class for all library errors."""


class CapExceeded(PowerGraphKitError):
    """A group or graph is larger than the configured order cap."""


class SpecParseError(PowerGraphKitError, ValueError):
    """A group spec string failed to parse; the message names the bad token."""


class GroupAxiomError(PowerGraphKitError):
    """A composition law failed a group-axiom check at construction."""


class BudgetExceeded(PowerGraphKitError):
    """An exact search drained its node budget before completing.

    Callers must surface this as an explicit "unknown" outcome; it is never
    converted into an approximate answer.
    """


class PathCapExceeded(PowerGraphKitError):
    """Brute-force longest-path search refused a graph above its vertex cap."""


class DisconnectedGraphError(PowerGraphKitError):
    """Metric invariants (radius, diameter, center) need a connected graph."""


class SearchBudget:
    """Countdown of search nodes shared across one exact computation."""

    __slots__ = ("remaining",)

    def __init__(self, limit: int):
        self.remaining = int(limit)

    def spend(self, amount: int = 1) -> None:
        self.remaining -= amount
        if self.remaining < 0:
            raise BudgetExceeded("search budget exhausted")
