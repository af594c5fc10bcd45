"""
Exception hierarchy for tqdlab
"""


class TqdError(Exception):
    """Base class for all library errors"""


class ChainViolation(TqdError):
    """Invariant factors do not form a divisibility chain"""


class BadFactor(TqdError):
    """Invariant factor smaller than 2"""


class NotAGroup(TqdError):
    """Cayley table fails a group axiom"""


class NotACocycle(TqdError):
    """Cocycle identity violated; carries the offending arguments"""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class TooLarge(TqdError):
    """Input exceeds a configured enumeration bound"""


class NotAbelian(TqdError):
    pass


class NotHomomorphism(TqdError):
    pass


class NotSurjective(TqdError):
    pass


class NotGenerating(TqdError):
    """Generators do not generate the group with the stated orders"""


class ConditionFailed(TqdError):
    pass


class OutOfRange(TqdError):
    pass


class NoComplementFound(TqdError):
    pass


class NotACharacter(TqdError):
    """Representation of a centralizer is not multiplicative"""


class NotAbelianSupport(TqdError):
    pass


class DegreeTooHigh(TqdError):
    pass


class NotASkeleton(TqdError):
    pass


class FixtureError(TqdError):
    pass
