"""Exception types shared across the toolkit."""


class ThetaLabError(Exception):
    """Base class for all toolkit errors."""


class OddDimension(ThetaLabError):
    """Matrix dimension is not of the form 2g."""


class NotSymplectic(ThetaLabError):
    """Integer matrix fails the symplectic relation."""


class NotSymplecticMod2(ThetaLabError):
    """Mod-2 matrix fails the symplectic relation over F2."""


class IndexOutOfRange(ThetaLabError):
    """Generator or curve index outside the valid range."""


class NotInSubgroup(ThetaLabError):
    """Matrix is not in the required congruence subgroup."""


class DimensionMismatch(ThetaLabError):
    """Operands have incompatible sizes."""


class SizeMismatch(DimensionMismatch):
    """Paired matrices have incompatible sizes."""


class SingularCocycle(ThetaLabError):
    """The cocycle determinant is numerically singular."""


class GenusTooLarge(ThetaLabError):
    """Requested genus exceeds the supported range."""


class GeneratorNotInStabilizer(ThetaLabError):
    """A generator does not fix the reference homology class mod 2."""


class NotAChain(ThetaLabError):
    """Homology classes do not satisfy the chain intersection pattern."""


class DegreeOverflow(ThetaLabError):
    """Boolean polynomial product would exceed degree 3."""


class NotSiegel(ThetaLabError):
    """Matrix is not a point of the Siegel upper half space."""


class NotConverged(ThetaLabError):
    """Theta series truncation cannot certify the requested tolerance."""


class ThetaNearZero(ThetaLabError):
    """A theta constant in a denominator is too close to zero."""


class NoRootWithinTolerance(ThetaLabError):
    """A numerical multiplier does not snap to an 8th root of unity."""


class NotFourthRoot(ThetaLabError):
    """A value expected in the group generated by sqrt(-1) is not there."""


class CompatibilityViolated(ThetaLabError):
    """Canonical characteristic forms violate the compatible-pair shape."""
