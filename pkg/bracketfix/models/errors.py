"""
Error types raised by bracketfix

Every domain error is a ValueError so callers that only know about bad input
can still catch it.
"""

from typing import Optional


class BracketFixError(ValueError):
    """Base class of all bracketfix errors"""


class InvalidTournament(BracketFixError):
    """Match outcomes do not form a complete asymmetric relation"""


class NotPowerOfTwo(BracketFixError):
    """Player count is not 2^r"""


class DemandNotAnArc(BracketFixError):
    """A demand (u, v) where v beats u"""


class BadRound(BracketFixError):
    """A round index outside [0, log n - 1] or on a non-demand"""


class DuplicateDemand(BracketFixError):
    """The same demand listed twice"""


class InvalidWeights(BracketFixError):
    """Weights missing for some demand, given for a non-demand, or negative"""


class NotAnSBA(BracketFixError):
    """A forest that should be a spanning binomial arborescence is not one"""


class NotPowerOfTwoSubtree(BracketFixError):
    """Height asked for a vertex whose subtree size is not a power of two"""


class NotAFeedbackArcSet(BracketFixError):
    """Removing the given arcs leaves a cycle"""


class TooLarge(BracketFixError):
    """Instance exceeds a configured solver guard"""


class WeightCapExceeded(BracketFixError):
    """A demand weight above the configured cap"""


class PreconditionViolated(BracketFixError):
    """Pack called with inputs outside its contract"""


class PropertyOneViolated(BracketFixError):
    """Some head of a feedback arc has no demand parent"""


class RoundConflict(BracketFixError):
    """Pinned rounds that contradict each other"""


class InfeasibleDemandCount(BracketFixError):
    """More demands requested than the generator can place"""


class ParseError(BracketFixError):
    """Malformed instance file"""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InvalidForest(BracketFixError):
    """A parent map with a cycle, a second parent, or an unknown vertex"""
