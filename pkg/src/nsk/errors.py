"""Exception hierarchy.

Every error raised by the library derives from :class:`NskError`, and its
class name is what the CLI prints on stderr.
"""


class NskError(ValueError):
    pass


class EmptyInput(NskError):
    pass


class NotCoprime(NskError):
    pass


class NotAMember(NskError):
    pass


class FullSemigroup(NskError):
    pass


class CapExceeded(NskError):
    pass


class BoundTooSmall(NskError):
    pass


class NegativeDimension(NskError):
    pass


class NotSymmetric(NskError):
    pass


class Hyperelliptic(NskError):
    pass


class GenusTooSmall(NskError):
    pass


class ArityMismatch(NskError):
    pass


class BadPartition(NskError):
    pass


class BadBSum(NskError):
    pass


class GenusMismatch(NskError):
    pass
