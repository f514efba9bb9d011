"""Exception types shared across the package."""


class TwinWidthError(Exception):
    """Base class for all errors raised by this package."""


class InvalidContractionError(TwinWidthError, ValueError):
    pass


class InvalidPartitionError(TwinWidthError, ValueError):
    pass


class InvalidSequenceError(TwinWidthError, ValueError):
    """A contraction sequence does not replay on its graph.

    ``index`` is the position of the offending step (0-based).
    """

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class PreconditionError(TwinWidthError, ValueError):
    pass


class ParseError(TwinWidthError, ValueError):
    pass


class ResourceLimitError(TwinWidthError):
    """Input is larger than the configured limit of an exact routine."""


class InconclusiveError(TwinWidthError):
    """A search exhausted its node budget without reaching a verdict."""


class DomainError(TwinWidthError, ValueError):
    """Parameters outside the domain of a bound formula."""


class BoundViolation(TwinWidthError, AssertionError):
    """A synthesized sequence exceeded the width its construction guarantees."""


class DecompositionError(TwinWidthError, ValueError):
    pass


class InternalInvariantError(TwinWidthError, RuntimeError):
    """A construction reached a state its own invariants rule out."""
