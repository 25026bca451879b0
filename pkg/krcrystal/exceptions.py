class CrystalError(Exception):
    """Base class for all exceptions in krcrystal."""

    source = "unknown"

    def __init__(self, msg: str) -> None:
        super().__init__(msg)
        self.message = msg


class CrystalUsageError(CrystalError):
    """Base class for errors caused by invalid input.

    :param msg: Error message.
    :type msg: str

    :cvar source: Source of the error (always set to "usage").
    :vartype source: str
    :ivar message: Error message.
    :vartype message: str
    """

    source = "usage"


class CrystalInternalError(CrystalError):
    """Base class for errors that signal a broken invariant.

    These are never expected on valid input. Seeing one means a construction
    step produced something the surrounding theory rules out.

    :param msg: Error message.
    :type msg: str

    :cvar source: Source of the error (always set to "internal").
    :vartype source: str
    :ivar message: Error message.
    :vartype message: str
    """

    source = "internal"


###################
# Type Exceptions #
###################


class AffineTypeParseError(CrystalUsageError):
    """Failed to parse an affine type label."""


class AffineTypeRankError(CrystalUsageError):
    """Rank is outside the valid range for the family."""


class NodeIndexError(CrystalUsageError):
    """Dynkin node index is out of range."""


#####################
# Weight Exceptions #
#####################


class SpinWeightError(CrystalUsageError):
    """Weight has no partition form."""


class PartitionError(CrystalUsageError):
    """Rows do not form a partition of the requested shape."""


class WeightPairingError(CrystalInternalError):
    """Pairing of a coroot with a weight is not integral."""


###########################
# q-Arithmetic Exceptions #
###########################


class QExponentError(CrystalUsageError):
    """Base exponent of a q-integer is not a positive half-integer."""


class QBinomialRangeError(CrystalUsageError):
    """q-binomial or q-integer arguments are out of range."""


class QDivisionError(CrystalInternalError):
    """Laurent polynomial division left a remainder."""


class QParseError(CrystalUsageError):
    """Failed to parse the text form of a Laurent polynomial."""


########################
# Fermionic Exceptions #
########################


class VacancyError(CrystalInternalError):
    """Vacancy number is not integral."""


########################
# Branching Exceptions #
########################


class CVectorError(CrystalUsageError):
    """Sequence c violates the constraints of its family."""


class SpinNodeError(CrystalUsageError):
    """Operation is undefined on a spin (exceptional) node."""


#######################
# Tableaux Exceptions #
#######################


class ColorError(CrystalUsageError):
    """Crystal operator color is not in the index set."""


class VertexLimitError(CrystalUsageError):
    """Graph generation exceeded the configured vertex cap."""


######################
# Diagram Exceptions #
######################


class DiagramError(CrystalUsageError):
    """Sign diagram violates its shape rules."""


class DiagramLookupError(CrystalInternalError):
    """No unique sign diagram maps to the given element."""


class OperatorStringError(CrystalInternalError):
    """Crystal operator string annihilated an element."""


class PairMoveError(CrystalInternalError):
    """Sign move produced a column outside the pair model."""


####################
# Graph Exceptions #
####################


class GraphFormatError(CrystalUsageError):
    """Persisted graph body is malformed."""


class GraphStructureError(CrystalInternalError):
    """Color class of a graph is not a partial matching."""


class LevelError(CrystalInternalError):
    """Affine weight of a vertex has non-zero level."""


##########################
# Isomorphism Exceptions #
##########################


class AmbiguousMatchingError(CrystalInternalError):
    """Highest weight labels repeat, so the anchored matching is ambiguous."""
