"""Exception hierarchy shared by every module of the package.

Each class carries a short ``code`` that the command line front end uses
as its diagnostic tag.
"""


class SurrealError(Exception):
    code = "E_GENERIC"


class OrdinalRangeError(SurrealError, ValueError):
    """Raised for ordinals at or beyond epsilon_0, or invalid ordinal ops."""

    code = "E_RANGE"


class CutViolation(SurrealError, ValueError):
    """Some left option is not strictly below some right option."""

    code = "E_CUT"

    def __init__(self, left, right, message=None):
        self.left = left
        self.right = right
        super().__init__(message or "cut violation: %s is not below %s" % (left, right))


class FuelExhausted(SurrealError, RuntimeError):
    """A bounded search or recursion ran out of its budget.

    This never means the mathematical answer is "no"; it means the
    question was not settled within the budget.
    """

    code = "E_FUEL"


class UnsupportedFragment(SurrealError, ValueError):
    """The value lies outside the fragment a procedure can handle exactly."""

    code = "E_UNSUPPORTED"


class PreconditionError(SurrealError, ValueError):
    code = "E_PRECONDITION"


class InvariantBreach(SurrealError, AssertionError):
    """Two routes that must agree did not. Always a bug."""

    code = "E_INVARIANT"


class ParseError(SurrealError, ValueError):
    code = "E_SYNTAX"

    def __init__(self, message, text="", pos=0):
        self.message = message
        self.text = text
        self.pos = pos
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        self.line = line
        self.column = col
        super().__init__("%s at line %d, column %d" % (message, line, col))
