"""Exception hierarchy.

Two families matter to the CLI exit-code contract: :class:`MathError`
(a mathematical claim or authorization failed, exit 1) and
:class:`ResourceError` (caps, bad input, bad files, exit 2).
"""


class MincodeError(Exception):
    """Base class for every error raised by this package."""


class MathError(MincodeError):
    pass


class ResourceError(MincodeError):
    pass


class InputError(ResourceError, ValueError):
    pass


# field construction
class CompositeP(InputError):
    pass


class EvenP(InputError):
    pass


class Reducible(InputError):
    pass


class FieldTooLarge(InputError):
    pass


class DivisionByZero(MathError, ZeroDivisionError):
    pass


# linear algebra
class CapExceeded(ResourceError):
    pass


class LengthMismatch(InputError):
    pass


class DimensionMismatch(InputError):
    pass


# codes
class ZeroCode(MathError):
    pass


class ZeroColumn(MathError):
    pass


class InvalidDescriptor(InputError):
    pass


class ZeroVector(InputError):
    pass


class ZeroMessage(InputError):
    pass


class SameHyperplane(InputError):
    pass


class ClaimFailed(MathError):
    def __init__(self, claim):
        super().__init__(f"claim failed: {claim.claim} (predicted {claim.predicted}, observed {claim.observed})")
        self.claim = claim


# secret sharing
class NotAuthorized(MathError):
    pass


class MissingShare(InputError):
    pass


class UnknownParticipant(InputError):
    pass


class NotMinimal(MathError):
    pass


class AuthorizedSet(MathError):
    pass
