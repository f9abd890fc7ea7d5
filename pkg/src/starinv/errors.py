"""Exception hierarchy.

Errors that stand for a mathematical verdict ("this element has no core
inverse") carry a ``diagnosis`` dict so callers can see which membership or
unit test failed.
"""


class StarInvError(Exception):
    def __init__(self, message="", **diagnosis):
        super().__init__(message)
        self.diagnosis = diagnosis


class ContextMismatch(StarInvError):
    pass


class NotEnumerable(StarInvError):
    pass


class ParseError(StarInvError, ValueError):
    def __init__(self, message, line=None, column=None):
        where = ""
        if line is not None:
            where = f" (line {line}, column {column})"
        super().__init__(message + where, line=line, column=column)
        self.line = line
        self.column = column


class ValidationFailure(StarInvError, AssertionError):
    """A computed value failed its defining equations, or two routes that
    must agree did not.  Never expected; indicates a bug or a false theorem."""


class RouteDisagreement(ValidationFailure):
    pass


# -- exact-linalg --------------------------------------------------------

class NotInvertible(StarInvError):
    """Raised by ``invert``.  ``certificate`` is a nonzero kernel vector
    (matrix rings) or ``gcd(u, n)`` (modular rings)."""

    def __init__(self, message, certificate=None):
        super().__init__(message, certificate=certificate)
        self.certificate = certificate


class NotInIdeal(StarInvError):
    pass


class NotRegular(StarInvError):
    pass


# -- gen-inverse ---------------------------------------------------------

class NotGenInvertible(StarInvError):
    """Base for 'no inverse of this class exists'."""


class NotOneThreeInvertible(NotGenInvertible):
    pass


class NotOneFourInvertible(NotGenInvertible):
    pass


class NotMPInvertible(NotGenInvertible):
    pass


class NotGroupInvertible(NotGenInvertible):
    pass


class NotCoreInvertible(NotGenInvertible):
    pass


class NotDualCoreInvertible(NotGenInvertible):
    pass


class NotInvertibleAlong(NotGenInvertible):
    pass


class MissingPrerequisite(StarInvError):
    pass


class BadHermitian(StarInvError):
    pass


class NotAnnihilating(StarInvError):
    pass


class UnitNotInvertible(StarInvError):
    pass


class DNotRegular(StarInvError):
    pass


class NotRegularPair(StarInvError):
    pass


class BadWitness(StarInvError):
    pass
