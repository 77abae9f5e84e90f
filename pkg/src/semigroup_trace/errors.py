"""Exception types shared across the package."""


class SemigroupTraceError(Exception):
    """Base class for all errors raised by this package."""


class EmptyGenerators(SemigroupTraceError):
    """A semigroup or ideal was given an empty generating set."""


class GcdNotOne(SemigroupTraceError):
    """Generators with gcd != 1 do not define a numerical semigroup."""


class ResourceLimit(SemigroupTraceError):
    """An enumeration exceeded its configured ceiling."""


class RingMismatch(SemigroupTraceError):
    """Binary ideal operation applied to ideals over different rings."""


class NotContained(SemigroupTraceError):
    """Colength requested for a pair of ideals without containment."""


class NotIntegral(SemigroupTraceError):
    """Operation requires an ideal contained in the ring."""


class NotMember(SemigroupTraceError):
    """A named exponent is not a member of the ideal's value set."""


class RegularRing(SemigroupTraceError):
    """Predicate is undefined for the full semigroup of naturals."""


class ClosureViolation(SemigroupTraceError):
    """A value set failed to be closed; signals an internal bug for I:I."""


class PreconditionFailed(SemigroupTraceError):
    """A verification routine was called outside its hypotheses."""


class VerificationError(SemigroupTraceError):
    """A bit-exact reproduction check found a mismatching value set."""
