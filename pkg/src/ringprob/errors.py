"""Exception types shared across the package."""


class RingProbError(Exception):
    """Base class for every error raised by ringprob."""


class MembershipError(RingProbError, ValueError):
    """An element or subset does not belong to the structure it was used with."""


class NotASubgroup(MembershipError):
    pass


class CapExceeded(RingProbError):
    """An enumeration was asked to run on a structure above its size cap."""


class SearchBudgetExceeded(RingProbError):
    """A search examined more candidates than its budget allows."""


class RingValidationError(RingProbError, ValueError):
    pass


class WellDefinednessViolation(RingValidationError):
    pass


class AssociativityViolation(RingValidationError):
    def __init__(self, triple, message=None):
        self.triple = triple
        super().__init__(message or f"associativity fails on basis triple {triple}")


class NotAnIdeal(RingProbError, ValueError):
    pass


class ClosureViolation(RingProbError):
    """A set that must be an additive subgroup is not closed. Indicates a bug."""


class InternalMismatch(RingProbError):
    """Two independent computations of the same quantity disagree. Indicates a bug."""


class PreconditionError(RingProbError, ValueError):
    pass


class InvalidWitness(RingProbError):
    pass


class RingSpecError(RingProbError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)
