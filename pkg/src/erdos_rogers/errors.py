"""Exception types shared across the package.

InputError carries a machine-readable witness (a dict) describing why the
input was rejected, e.g. the pair of hyperedges violating linearity.
SelfCheckError marks an internal re-validation failure and should never be
caught and ignored: if a search engine hands back a set that fails its own
independent checker, that is a bug, not a recoverable condition.
"""


class InputError(ValueError):
    """A precondition on user-supplied input failed."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class FormatError(InputError):
    """A text file / serialized object could not be parsed."""


class SelfCheckError(RuntimeError):
    """An internal consistency re-check failed (hard fault)."""
