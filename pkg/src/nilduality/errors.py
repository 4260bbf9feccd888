"""Exception hierarchy shared by every module of the package."""


class OrbitError(ValueError):
    """Base class for all errors raised by nilduality."""


class EmptyDiagram(OrbitError):
    pass


class RowTooShort(OrbitError):
    pass


class ColumnTooShort(OrbitError):
    pass


class SizeMismatch(OrbitError):
    pass


class BoundExceeded(OrbitError):
    pass


class ParityMismatch(OrbitError):
    pass


class UnsupportedFamily(OrbitError):
    pass


class NotAnOrbit(OrbitError):
    pass


class NotSpecial(NotAnOrbit):
    pass


class NoMaximum(OrbitError):
    """The dominated set of typed partitions has no maximum (a theory violation)."""


class InvalidDualPair(OrbitError):
    pass


class StableRangeViolated(OrbitError):
    pass


class LiftNotTypeB(OrbitError):
    """Raised when a theta-lifted orbit fails its type-B validation."""


class RankTooSmall(OrbitError):
    pass


class PairingImpossible(OrbitError):
    pass


class UnknownCheck(OrbitError):
    pass
