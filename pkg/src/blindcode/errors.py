"""Exception types shared across the toolkit."""


class BlindCodeError(Exception):
    """Base class for all toolkit errors."""


class DimensionMismatchError(BlindCodeError, ValueError):
    """Operands have incompatible lengths or shapes."""


class EnumerationCapError(BlindCodeError, ValueError):
    """Code dimension exceeds the configured enumeration cap."""


class RankDeficientError(BlindCodeError, ValueError):
    """A matrix required to be full rank is not."""


class SplitUnderflowError(BlindCodeError, ValueError):
    """Split requested on a code of rank below 2."""


class InfeasibleRankError(BlindCodeError, ValueError):
    """Observation rank exceeds the target code dimension."""


class DuplicateCandidateError(BlindCodeError, ValueError):
    """Candidate set contains two codes with identical span."""


class CrossoverRangeError(BlindCodeError, ValueError):
    """Channel crossover probability outside the admissible range."""


class OracleContractError(BlindCodeError, RuntimeError):
    """A detection oracle returned something outside its contract."""


class FormatError(BlindCodeError, ValueError):
    """An input file does not follow its documented format."""
