"""Exception hierarchy shared by every module of the package."""


class CommutatorError(Exception):
    """Base class for all domain errors raised by cyclecomm."""


class InvalidPermutation(CommutatorError, ValueError):
    """Image data or cycle data does not describe a bijection of 1..n."""


class DegreeMismatch(CommutatorError, ValueError):
    pass


class NotConjugate(CommutatorError, ValueError):
    pass


class PatternSyntaxError(CommutatorError, ValueError):
    pass


class InconsistentProgression(CommutatorError, ValueError):
    pass


class UnresolvedSymbol(CommutatorError, KeyError):
    pass


class OutOfFamily(CommutatorError, ValueError):
    """Parameters violate the bounds of a construction family."""


class NotInTable(CommutatorError, LookupError):
    pass


class NotEvenClass(CommutatorError, ValueError):
    pass


class DegreeTooSmall(CommutatorError, ValueError):
    """Raised for n in {3, 4, 5}, where some even classes are not commutators of n-cycles."""

    def __init__(self, n, missing=None):
        self.n = n
        self.missing = missing
        msg = f"no general construction for n={n}; only n=2 and n>=6 are covered"
        if missing:
            msg += f" (not a commutator of {n}-cycles: {missing})"
        super().__init__(msg)


class DegreeTooLarge(CommutatorError, ValueError):
    pass


class InternalExhaustion(CommutatorError, RuntimeError):
    """The planner found no applicable case. Should be unreachable."""


class ConstructionFailed(CommutatorError, AssertionError):
    """A construction produced a permutation that failed its own verification."""


class PermutationSyntaxError(CommutatorError, ValueError):
    def __init__(self, message, text="", position=0):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}")
