"""Scattering off a one-dimensional quaternionic potential barrier.

The package computes reflection/transmission amplitudes for a particle
hitting a square barrier whose potential has both a complex (i) and a pure
quaternionic (j, k) part, through three mutually checking routes:

  * a closed transfer-matrix formula (:mod:`qbarrier.closed_form`),
  * a direct solve of the eight boundary-matching equations
    (:mod:`qbarrier.solver`),
  * a brute-force fixed-step integration of the interior equations
    (:mod:`qbarrier.ode_oracle`).

Resonance tables, the exact threshold (eps = 1) amplitudes and a CLI sit
on top.
"""

__version__ = "0.1.0"

from .barrier import (
    AdimensionalBarrier,
    BarrierSpec,
    WaveParams,
    adimensionalize,
    wave_params,
)
from .closed_form import (
    TransmissionResult,
    denominator,
    transmission,
    transmission_complex,
    transmission_probability_complex,
)
from .critical import (
    CriticalAmplitudes,
    CriticalZone2,
    asymptotic_moduli,
    critical_complex,
    critical_quaternionic,
    critical_zone2,
)
from .errors import (
    ConvergenceError,
    DegenerateEnergyError,
    IllConditionedError,
    QBarrierError,
    SingularDenominatorError,
    ThresholdEnergyError,
)
from .ode_oracle import PropagatedBasis, ZoneIISystem, oracle_amplitudes, propagate, split_ode
from .quaternion import Quaternion, qconj, qmul, qnorm
from .resonance import (
    ResonanceScan,
    complex_resonance_energies,
    complex_resonance_widths,
    min_transmission,
    scan_peaks,
)
from .solver import (
    ScatteringAmplitudes,
    ZoneWavefunction,
    current_density,
    probability_balance,
    solve,
    wavefunction,
)
from .transfer import TransferMatrix, build_factors, transfer_closed, transfer_numeric

__all__ = [
    "AdimensionalBarrier",
    "BarrierSpec",
    "ConvergenceError",
    "CriticalAmplitudes",
    "CriticalZone2",
    "DegenerateEnergyError",
    "IllConditionedError",
    "PropagatedBasis",
    "QBarrierError",
    "Quaternion",
    "ResonanceScan",
    "ScatteringAmplitudes",
    "SingularDenominatorError",
    "ThresholdEnergyError",
    "TransferMatrix",
    "TransmissionResult",
    "WaveParams",
    "ZoneIISystem",
    "ZoneWavefunction",
    "adimensionalize",
    "asymptotic_moduli",
    "build_factors",
    "complex_resonance_energies",
    "complex_resonance_widths",
    "critical_complex",
    "critical_quaternionic",
    "critical_zone2",
    "current_density",
    "denominator",
    "min_transmission",
    "oracle_amplitudes",
    "probability_balance",
    "propagate",
    "qconj",
    "qmul",
    "qnorm",
    "scan_peaks",
    "solve",
    "split_ode",
    "transfer_closed",
    "transfer_numeric",
    "transmission",
    "transmission_complex",
    "transmission_probability_complex",
    "wave_params",
    "wavefunction",
]
