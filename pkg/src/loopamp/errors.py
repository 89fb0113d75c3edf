"""Exception types shared across the package.

Everything derives from LoopampError so callers can catch the package's
failures in one clause; the concrete classes exist because the command
line maps them to distinct exit codes.
"""


class LoopampError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatchError(LoopampError, ValueError):
    """Two state vectors that must live in the same space do not."""


class UndefinedPhaseError(LoopampError, ValueError):
    """A phase was requested where none exists (zero amplitude or loop product)."""


class UnknownLabelError(LoopampError, KeyError):
    """A state label does not resolve against the graph's state table."""


class UnsupportedConfigurationError(LoopampError, ValueError):
    """The operation is only defined for a restricted graph shape."""


class InconsistentEnsembleError(LoopampError, ArithmeticError):
    """A loop sum violated an internal consistency bound (imaginary or negative)."""
