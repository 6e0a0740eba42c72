"""Exception types shared across the package."""


class QBarrierError(Exception):
    """Base class for all errors raised by this package."""


class DegenerateEnergyError(QBarrierError):
    """eps**4 is too close to vq**2: the two exponential wave numbers collapse.

    The exponential basis inside the barrier degenerates, so the factor
    matrix G and the continuity system become singular.  The pure
    quaternionic (vq=1) and pure complex (vc=1) barriers at eps=1 have
    exact replacements in :mod:`qbarrier.critical`.
    """


class ThresholdEnergyError(QBarrierError):
    """alpha_minus is numerically zero (eps at the diffusion/tunneling threshold).

    The closed transmission formula divides by alpha_minus.  For vc=1 or
    vq=1 use :mod:`qbarrier.critical`; mixed potentials at the threshold
    have no analytic treatment here.
    """


class IllConditionedError(QBarrierError):
    """A matrix inversion cannot be trusted (1 - beta*gamma underflows)."""


class SingularDenominatorError(QBarrierError):
    """The inner denominator of the closed transmission formula vanished."""


class ConvergenceError(QBarrierError):
    """A fixed-step integration did not meet its self-consistency target."""
