"""Shared exception types, organized by how the command line reports them.

``FormatError`` covers malformed or invalid input documents and maps to
exit code 2.  ``PreconditionError`` covers requests outside a
computation's defined domain and maps to exit code 3.
"""


class FusionRankError(Exception):
    """Base class for all errors raised by this package."""


class FormatError(FusionRankError, ValueError):
    """An input document (fusion ring or graph JSON) is malformed or invalid."""


class PreconditionError(FusionRankError, ValueError):
    """A computation was requested outside its defined domain."""


class UnknownLabelError(PreconditionError):
    """A weight refers to a label that is not part of the fusion ring."""


class StabilityError(PreconditionError):
    """A (genus, marks) configuration does not describe a stable curve."""


class EnumerationLimitError(PreconditionError):
    """An exhaustive enumeration would exceed the configured size guard."""
