"""Exception hierarchy shared by every module."""


class ChernError(ValueError):
    """Base class for all domain errors raised by chernkit."""


class DuplicateGenerator(ChernError):
    pass


class BadTableEntry(ChernError):
    pass


class ModelMismatch(ChernError):
    pass


class NonUnitSeries(ChernError):
    pass


class MissingTableEntry(ChernError):
    pass


class NotDegreeOne(ChernError):
    pass


class NonIntegralResult(ChernError):
    """Raised when a Chern class that must be integral is not; indicates a bug."""


class RankMismatch(ChernError):
    pass


class RankUnsupported(ChernError):
    pass


class NotLineBundle(ChernError):
    pass


class InvalidBundle(ChernError):
    """Declared rank is inconsistent with the total Chern class."""


class ZeroRank(ChernError):
    pass


class RankOutOfRange(ChernError):
    pass


class ModeRankMismatch(ChernError):
    pass


class BadMultiDegree(ChernError):
    pass


class MissingGenerator(ChernError):
    pass


class OutOfTable(ChernError):
    pass


class ArityMismatch(ChernError):
    pass
