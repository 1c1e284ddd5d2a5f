"""Exception types shared across the package."""


class FormwidthError(Exception):
    """Base class for every package-specific error."""


class EmptyWordError(FormwidthError, ValueError):
    """A word-valued argument was empty."""


class InvalidParameterError(FormwidthError, ValueError):
    """A construction was asked for out-of-range or inconsistent parameters."""


class ParseError(FormwidthError, ValueError):
    """Malformed textual input. ``position`` is the 0-based offset of the
    first offending character, when known."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


class InfeasibleError(FormwidthError):
    """A search refused to start or continue because it would exceed its
    configured work budget. ``best_length``/``witness`` carry the partial
    best found so far, when the search got that far."""

    def __init__(self, message: str, best_length: int | None = None,
                 witness: tuple[int, ...] | None = None,
                 nodes_explored: int | None = None):
        super().__init__(message)
        self.best_length = best_length
        self.witness = witness
        self.nodes_explored = nodes_explored


class CapHitError(FormwidthError):
    """Some avoider reached the configured length cap, so the extremal
    value is unknown and must not be reported as exact."""

    def __init__(self, length_cap: int, nodes_explored: int):
        super().__init__(f"an avoider reached the length cap {length_cap}; "
                         "the maximum is not certified")
        self.length_cap = length_cap
        self.nodes_explored = nodes_explored


class RegistryError(FormwidthError):
    """A verification-registry row was malformed; the message names the
    offending case id."""
