"""Exception hierarchy shared by all permprob modules."""


class PermProbError(Exception):
    """Base class for every error raised by this package."""


class InvalidPermutation(PermProbError, ValueError):
    """One-line notation that is not a bijection of {1..n}.

    ``index`` is the 0-based position of the first offending entry.
    """

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class CapExceeded(PermProbError):
    """A size cap (enumeration degree, group order, orbit size) was hit."""


class BudgetExceeded(CapExceeded):
    """A brute-force enumeration would exceed its iteration budget."""


class OrbitCapExceeded(CapExceeded):
    """Orbit search stopped early; ``partial`` holds what was explored."""

    def __init__(self, message, partial):
        super().__init__(message)
        self.partial = partial


class IllegalOperation(PermProbError, ValueError):
    """An exchange or cyclic operation whose legality condition fails."""


class GroupError(PermProbError, ValueError):
    """A Cayley table or subgroup that violates the group axioms."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotAssociative(GroupError):
    pass


class MissingIdentity(GroupError):
    pass


class MissingInverse(GroupError):
    pass


class NotASubgroup(GroupError):
    pass


class NotNormal(GroupError):
    pass


class StructureError(PermProbError, ValueError):
    """A group fails a structural precondition of a closed-form formula."""


class PresentationError(PermProbError, ValueError):
    """Malformed or inconsistent power-commutator presentation."""


class FormatError(PermProbError, ValueError):
    """Malformed text input (Cayley file, presentation file, group spec)."""
