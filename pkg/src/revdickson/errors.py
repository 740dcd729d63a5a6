"""Exception types shared across the package."""


class ToolkitError(Exception):
    """Base class for every error this package raises on purpose."""


class NotPrime(ToolkitError):
    """A parameter that must be prime is not."""


class EvenCharacteristic(ToolkitError):
    """Characteristic 2 was requested; everything here assumes p odd."""


class OrderOverflow(ToolkitError):
    """The field order p**e exceeds the supported cap."""


class DivisionByZero(ToolkitError, ZeroDivisionError):
    """Inversion of zero, or polynomial division by the zero polynomial."""


class CharacteristicMismatch(ToolkitError):
    """Operands live over different characteristics."""


class KindOutOfRange(ToolkitError):
    """Kind parameter k outside 0 <= k <= p-1."""


class DegreeBoundExceeded(ToolkitError):
    """A dense polynomial construction would exceed the degree bound."""


class StructureOverflow(ToolkitError):
    """A structured index does not fit the supported index range."""


class BadParity(ToolkitError):
    """An argument violates a parity requirement (e.g. an even l where odd is required)."""


class WrongCharacteristic(ToolkitError):
    """An identity restricted to a fixed characteristic was asked for elsewhere."""


class IndexTooSmall(ToolkitError):
    """An index n below the identity's valid range."""


class UnknownClaim(ToolkitError):
    """A claim id that is not in the registry."""


class FieldTooLarge(ToolkitError):
    """The field is too large for an exhaustive scan."""


class NoRoot(ToolkitError):
    """Internal failure: an element that must exist was not found."""


class InternalError(ToolkitError):
    """Internal consistency failure."""
