"""Exception hierarchy.

Input problems (bad shapes, invalid configurations, unparsable files) derive
from :class:`InputError`; the CLI maps them to exit code 2.  Errors that can
only come from a broken implementation derive from :class:`InternalCheckError`.
"""


class CuspidalError(Exception):
    """Base class for all errors raised by this package."""


class InputError(CuspidalError, ValueError):
    pass


class ShapeError(InputError):
    pass


class NotPseudoHomogeneous(InputError):
    pass


class RankDeficient(InputError):
    pass


class DeletionDropsRank(InputError):
    pass


class ExceptionalParameter(InputError):
    pass


class WrongCodimension(InputError):
    pass


class DegenerateConfiguration(InputError):
    pass


class TooFewPoints(InputError):
    pass


class ParseError(InputError):
    def __init__(self, message, location=None):
        self.location = location
        if location is not None:
            message = f"{location}: {message}"
        super().__init__(message)


class GenerationError(CuspidalError):
    pass


class UnknownSuite(InputError):
    pass


class InternalCheckError(CuspidalError, AssertionError):
    """A theorem-guaranteed identity failed; indicates a bug."""


class ConsistencyFailure(InternalCheckError):
    pass


class InconsistencyDetected(InternalCheckError):
    pass


class UnrecognizedSignature(InternalCheckError):
    pass
