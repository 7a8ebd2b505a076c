"""Exception types raised across the package."""


class YbsetError(Exception):
    """Base class for all library errors."""


class DuplicateLabel(YbsetError):
    pass


class NonBijectiveRow(YbsetError):
    pass


class InvalidMap(YbsetError):
    pass


class NotInvariant(YbsetError):
    """Subset is not r-invariant; args carry a witness pair escaping it."""


class NotSymmetricSet(YbsetError):
    pass


class NotSquareFree(YbsetError):
    pass


class IllDefinedAction(YbsetError):
    """Induced class action depends on representatives (broken precondition)."""


class LevelOutOfRange(YbsetError):
    pass


class NotAnAction(YbsetError):
    pass


class DegreeMismatch(YbsetError):
    pass


class PartNotLri(YbsetError):
    pass


class NonBijectiveCrossAction(YbsetError):
    pass


class NotPartition(YbsetError):
    pass


class NotAutomorphism(YbsetError):
    pass


class OrderTooLarge(YbsetError):
    pass


class ParseError(YbsetError):
    pass
