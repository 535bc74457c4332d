"""Exceptions shared across the package.

Two broad classes matter for the CLI exit codes: validation problems
(malformed input, inconsistent presentations) and computational bounds
(closure caps, brute-force size limits).
"""


class MaxabError(Exception):
    pass


class ValidationError(MaxabError):
    """Malformed or inconsistent input."""


class BoundError(MaxabError):
    """A configured computational bound was exceeded."""


class NotScalarCommutator(ValidationError):
    """The commutator of two elements is not a scalar matrix."""


class ClosureCapExceeded(BoundError):
    """Group closure grew past the configured element cap."""
