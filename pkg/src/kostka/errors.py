"""Exception types shared across the package."""


class KostkaError(Exception):
    """Base class for every error this package raises deliberately."""


class UnsupportedRankError(KostkaError):
    """Requested a (type, rank) combination outside the supported bounds."""


class NoSolutionError(KostkaError):
    """Linear system is inconsistent."""


class MultipleSolutionsError(KostkaError):
    """Linear system is consistent but rank-deficient."""


class SingularMatrixError(KostkaError):
    """Inversion attempted on a singular matrix."""


class EmptyNodeSetError(KostkaError):
    """An operation that needs a nonempty set of Dynkin nodes got an empty one."""


class BudgetExceededError(KostkaError):
    """A Weyl orbit or group enumeration would exceed the configured budget."""


class NotDominantError(KostkaError):
    """A weight that must be dominant is not."""


class NotInConeError(KostkaError):
    """The weight pair lies outside the dominance cone."""


class NotInLeviConeError(KostkaError):
    """The weight pair lies outside the Levi's dominance cone."""


class OverlappingLevisError(KostkaError):
    """Levi node sets that must be pairwise disjoint overlap."""


class RankBoundExceededError(KostkaError):
    """Brute-force vertex enumeration refused: rank above the configured bound."""


class CapExceededError(KostkaError):
    """Representation dimension exceeds the configured cap."""


class NotInRootLatticeError(KostkaError):
    """Multiplicity computations need integral weight inputs."""
