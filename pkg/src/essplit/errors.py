"""Exception types shared across the package."""


class EsSplitError(Exception):
    """Base class for all errors raised by essplit."""


class UnknownLabel(EsSplitError):
    """A label was used that is not part of the relevant ground set."""


class GroundSetTooLarge(EsSplitError):
    """An exhaustive enumeration was requested above the configured cap."""


class LabelCollision(EsSplitError):
    """A fresh label clashes with one that already exists."""


class ElementNotInX(EsSplitError):
    """The marked element e must be a member of the designated set X."""


class PreconditionViolated(EsSplitError):
    """An operation was called with inputs outside its stated contract."""


class FormulaDisagreement(EsSplitError):
    """Two closure cases matched the same query but produced different sets.

    This signals a bug in the case table or its implementation; callers
    must not pick one result silently.
    """


class BaseNotFlat(EsSplitError):
    """The flat predictor requires the underlying base set to be a flat."""


class InvalidPartition(EsSplitError):
    """A vertex-split specification does not partition the incident edges."""


class ParseError(EsSplitError):
    """A text input (matrix or graph) could not be parsed."""
