"""Exception types shared across the package."""


class ZdiError(Exception):
    """Base class for all package-specific errors."""


class VertexCapError(ZdiError):
    """Building the explicit graph would exceed the vertex cap."""

    def __init__(self, vertex_count: int, cap: int):
        self.vertex_count = vertex_count
        self.cap = cap
        super().__init__(
            f"explicit graph needs {vertex_count} vertices, above the cap of {cap}; "
            "use the quotient representation or raise the cap"
        )


class DisconnectedGraphError(ZdiError):
    """A zero-divisor graph came out disconnected; signals a construction bug."""


class UndefinedIndexError(ZdiError):
    """Index is undefined because some vertex has eccentricity 0."""


class ExpansionLimitError(ZdiError):
    """A factored value is too large to expand; request the factored form."""


class DegenerateGraphError(ZdiError):
    """The single-vertex graph (p, n) = (2, 2) admits no class analysis."""


class TheoremDomainError(ZdiError):
    """Closed-form evaluator called outside the n-range it is stated for."""


class NonPrimePowerError(ZdiError):
    """Class-based computation requires a prime-power modulus."""


class InvariantViolationError(ZdiError):
    """Two computation paths that must agree disagreed; a build-breaking bug."""
