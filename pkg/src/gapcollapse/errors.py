"""Exception types raised across the package."""


class GapCollapseError(Exception):
    """Base class for all errors raised by this package."""


class NotHermitian(GapCollapseError):
    """Matrix deviates from its own adjoint beyond tolerance."""


class NotPositive(GapCollapseError):
    """Matrix has an eigenvalue below the negativity floor."""


class TraceNotOne(GapCollapseError):
    """Trace deviates from one beyond tolerance."""


class DecompositionFailure(GapCollapseError):
    """Eigendecomposition did not converge."""


class NotProjector(GapCollapseError):
    """Operator is not Hermitian-idempotent within tolerance."""


class NotOrthogonal(GapCollapseError):
    """Projector family is not mutually orthogonal."""


class NotComplete(GapCollapseError):
    """Collapse operators do not resolve the identity."""


class ZeroBranch(GapCollapseError):
    """Collapse onto an outcome whose branch weight is numerically zero."""


class DegenerateDraw(GapCollapseError):
    """A raw sample has norm too small to project onto the sphere."""


class DegenerateWeight(GapCollapseError):
    """A noise realization produced a numerically zero state weight."""


class StepTooLarge(GapCollapseError):
    """Integration step exceeds the stability cap."""


class NonFinite(GapCollapseError):
    """Evolution overflowed; typically the noise coupling times dt is too large."""


class EmptySample(GapCollapseError):
    """Too few samples for the requested estimator."""


class ConfigInvalid(GapCollapseError):
    """Experiment configuration is malformed or inconsistent."""


class ExperimentFailed(GapCollapseError):
    """Experiment aborted before producing a complete report."""


class IoFailure(GapCollapseError):
    """Could not write a report, dump, or figure file."""
