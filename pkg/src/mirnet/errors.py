"""Exception types shared across the package."""


class MirnetError(Exception):
    """Base class for all package errors."""


class FormatError(MirnetError):
    """Input file could not be parsed."""


class ValidationError(MirnetError):
    """Input parsed but violated a domain invariant."""


class InsufficientDataError(MirnetError):
    """Too little data for the requested computation."""


class AlignmentError(MirnetError):
    """Sequences or ticker sets that must line up do not."""


class DegeneratePairError(MirnetError):
    """Distance is undefined for this pair (e.g. both sequences constant)."""


class UndefinedCorrelationError(MirnetError):
    """Pearson correlation undefined because a series has zero variance."""
