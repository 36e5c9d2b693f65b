"""Exception hierarchy shared by every engine module.

Each error carries a stable ``code`` string so front ends (notably the JSON
output mode of the CLI) can report machine-readable failures without string
matching on messages.
"""


class EngineError(Exception):
    """Base class for all errors raised by the engine."""

    code = "EngineError"


class MixedGroups(EngineError):
    """Two elements (or classes) from different group models were combined."""

    code = "MixedGroups"


class GroupTooLarge(EngineError):
    """Enumeration was requested on a group above the configured cap."""

    code = "GroupTooLarge"


class UnsupportedSecancy(EngineError):
    """No closed form exists for this secancy on an indecomposable surface."""

    code = "UnsupportedSecancy"


class InvalidSecancy(EngineError):
    """The operation is only defined for a different fiber coefficient."""

    code = "InvalidSecancy"


class HypothesisNotMet(EngineError):
    """A closed-form formula was invoked outside its hypothesis."""

    code = "HypothesisNotMet"


class NotBasePointFree(EngineError):
    """Scroll classification requested for a system with base points."""

    code = "NotBasePointFree"


class InvalidPointSpec(EngineError):
    """A point descriptor does not match the surface family it was used on."""

    code = "InvalidPointSpec"


class NonNormalizedInput(EngineError):
    """A decomposable surface was given an invariant class of positive degree."""

    code = "NonNormalizedInput"


class DegenerateModel(EngineError):
    """The finite group model lacks the torsion needed for this computation."""

    code = "DegenerateModel"


class PreconditionViolated(EngineError):
    """An operation with restricted hypotheses was called outside of them."""

    code = "PreconditionViolated"


class UnreachableTarget(EngineError):
    """A construction plan was requested for an unreachable target."""

    code = "UnreachableTarget"


class SemanticError(EngineError):
    """A parsed command is well-formed but inconsistent (family mismatch...)."""

    code = "SemanticError"


class ParseError(EngineError):
    """Command text could not be parsed.

    Carries the offset (column, 0-based) where parsing failed and the set of
    token kinds that would have been accepted there.
    """

    code = "ParseError"

    def __init__(self, message, column=None, expected=()):
        super().__init__(message)
        self.column = column
        self.expected = tuple(sorted(expected))
