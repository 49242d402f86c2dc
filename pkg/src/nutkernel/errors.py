"""Exception types shared by all nutkernel modules."""


class IndexOutOfRange(IndexError):
    """A vertex or coordinate index is outside [0, n)."""


class DuplicateArc(ValueError):
    """The same ordered pair appears twice in an arc list."""


class LoopRejected(ValueError):
    """An arc (u, u) was supplied; loops are not accepted."""


class LastVertex(ValueError):
    """Deletion would leave an empty vertex set."""


class DimensionMismatch(ValueError):
    """Operands live in different ambient dimensions."""


class NotSquare(ValueError):
    """A square matrix was required."""


class NotSingular(ValueError):
    """The digraph has trivial kernel but a singular one was required."""


class DegreeViolation(ValueError):
    """A degree precondition (e.g. out-degree exactly 2) does not hold."""


class NoSuchArc(ValueError):
    """The named arc is not present in the digraph."""


class CompatibilityError(ValueError):
    """Kernel values on the chosen arcs cannot be matched by rescaling."""


class NotAmbiNut(ValueError):
    """An ambi-nut digraph was required."""


class UnequalKernelEntries(ValueError):
    """The kernel entries at the two arc endpoints differ."""


class DemandMismatch(ValueError):
    """A gadget's demand does not equal the base eigenvalue."""


class ArityMismatch(ValueError):
    """The number of gadgets does not match the base order."""


class CapExceeded(ValueError):
    """A search exceeds the built-in size caps (see --stress)."""


class TheoremViolation(AssertionError):
    """A machine-checked postcondition failed; signals a bug, never expected."""


class MalformedHeader(ValueError):
    """An encoded graph string does not start as required."""


class TruncatedPayload(ValueError):
    """An encoded graph string is shorter than its size header demands."""


class OddOrder(ValueError):
    """An even order was required."""


class TooSmall(ValueError):
    """The order parameter is below the family's minimum."""


class BadConnectionSet(ValueError):
    """A circulant connection set must be a subset of 1..n//2."""
