class EquindexError(Exception):
    """Base class for errors raised by this package."""


class ParameterError(EquindexError, ValueError):
    """An input value is outside the accepted domain (bad prime, k > l, ...)."""


class StructuralError(EquindexError, TypeError):
    """Objects that must agree (presentations, primes) do not."""


class InternalConsistencyError(EquindexError, RuntimeError):
    """A computed value contradicts a proven invariant; indicates a bug."""
