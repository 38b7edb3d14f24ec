"""Exception hierarchy shared by the whole package."""


class CRSphereError(Exception):
    """Base class for all package-specific errors."""


class DomainError(CRSphereError):
    """Parameters lie outside the admissible domain."""


class AlgebraViolation(CRSphereError):
    """A matrix fails the Lie algebra / Lie group membership test."""


class DegenerateSpan(CRSphereError):
    """Two vectors supposed to span a plane are (numerically) dependent."""


class PointAtInfinity(CRSphereError):
    """A sphere point has no Heisenberg image."""


class ThroughInfinity(CRSphereError):
    """A chain passes through the point at infinity (vertical line)."""


class NotSpacelike(CRSphereError):
    """A chain normal fails the spacelike test."""


class DegenerateDirection(CRSphereError):
    """Chain direction with vanishing horizontal part."""


class LegendrianDirection(CRSphereError):
    """Chain direction lies in the contact plane."""


class TooFewSamples(CRSphereError):
    """Not enough samples to run the derivative scheme."""


class NonTransversal(CRSphereError):
    """The curve touches the contact distribution."""


class InflectionPresent(CRSphereError):
    """The lift determinant vanishes somewhere (CR inflection)."""


class NearInfinity(CRSphereError):
    """Heisenberg data requested too close to the point at infinity."""


class FrameUnavailable(CRSphereError):
    """Frame normalization failed at the requested sample."""


class StepRejected(CRSphereError):
    """Integrator local error estimate exceeded its budget."""


class NotClosed(CRSphereError):
    """Operation requires a closed curve."""


class NotNatural(CRSphereError):
    """Operation requires the natural parametrization."""


class NoConvergence(CRSphereError):
    """An iterative solver failed to converge."""


class NoRoot(CRSphereError):
    """Bracketing scan found no sign change."""


class ChiVanishes(CRSphereError):
    """The winding map has a (near) zero."""


class NonIntegerWinding(CRSphereError):
    """Accumulated phase fails to close to an integer multiple of 2*pi."""


class NotCubeRoot(CRSphereError):
    """Monodromy factor is not a cube root of unity."""


class CurvesIntersect(CRSphereError):
    """Linking integral requested for intersecting curves."""


class SelfIntersecting(CRSphereError):
    """Push-off collides with its base curve."""


class Unstable(CRSphereError):
    """Push-off halving test changed the rounded linking number."""
