"""Closed-form transmission amplitude T = 2*exp(-i*eps*lam) / D.

The denominator D is assembled verbatim from the transfer-matrix elements:

    D = M11 + M22 + i*(eps**2*M12 - am**2*M21)/(eps*am)
        - [M13 + i*M24 - (eps**2*M14 + i*am**2*M23)/(eps*am)]
          * [M31 - i*M42 + (i*eps**2*M32 - am**2*M41)/(eps*am)]
          / [M44 + M33 - (eps**2*M34 + am**2*M43)/(eps*am)]

with am = alpha_minus.  `transmission` evaluates an algebraically
identical factored regrouping of D (`denominator_factored`) that stays at
machine precision when the growing interior mode is large; `denominator`
keeps the element-table form.  The same amplitude is produced
independently by the full boundary-matching solve (:mod:`qbarrier.solver`),
which is the arbiter for any transcription doubt, and by the brute-force
integrator (:mod:`qbarrier.ode_oracle`).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .barrier import AdimensionalBarrier, WaveParams, wave_params
from .errors import SingularDenominatorError, ThresholdEnergyError
from .transfer import TransferMatrix

#: below this |alpha_minus| the closed formula degrades (eps at threshold)
ALPHA_MINUS_TOL = 1e-10


@dataclass(frozen=True)
class TransmissionResult:
    """Transmission amplitude t, probability |t|**2 and principal phase."""

    t: complex
    prob: float
    phase: float

    @classmethod
    def from_amplitude(cls, t: complex) -> "TransmissionResult":
        return cls(t=t, prob=abs(t) ** 2, phase=cmath.phase(t))


def denominator(m: TransferMatrix | np.ndarray, eps: float, alpha_minus: complex) -> complex:
    """Evaluate D from a transfer matrix.

    Raises:
        SingularDenominatorError: if the trailing fraction's denominator
            vanishes (reported with eps and alpha_minus).
    """
    mm = m.m if isinstance(m, TransferMatrix) else np.asarray(m)
    am = complex(alpha_minus)
    ea = eps * am
    lead = mm[0, 0] + mm[1, 1] + 1j * (eps**2 * mm[0, 1] - am**2 * mm[1, 0]) / ea
    upper = mm[0, 2] + 1j * mm[1, 3] - (eps**2 * mm[0, 3] + 1j * am**2 * mm[1, 2]) / ea
    lower_num = mm[2, 0] - 1j * mm[3, 1] + (1j * eps**2 * mm[2, 1] - am**2 * mm[3, 0]) / ea
    lower_den = mm[3, 3] + mm[2, 2] - (eps**2 * mm[2, 3] + am**2 * mm[3, 2]) / ea
    if abs(lower_den) < 1e-150:
        raise SingularDenominatorError(
            f"inner denominator vanished at eps={eps!r}, alpha_minus={am!r}"
        )
    return complex(lead - upper * lower_num / lower_den)


def denominator_factored(p: WaveParams, lam: float) -> complex:
    """D in a regrouped form that is stable against the growing interior mode.

    Expanding the element combination of `denominator` and cancelling the
    cosh**2 - sinh**2 products analytically gives the identical value

        D = [Dm*Ep + u**2*Dp*Em + 2i*u*P*Q - 4u] / [(1-u)*(Ep - u*Em)]

    with u = beta*gamma, hyperbolic one-mode factors

        Dm = 2*cosh(am*L) + i*(am**2-e2)/(e*am)*sinh(am*L)
        Dp = 2*cosh(ap*L) + i*(ap**2-e2)/(e*ap)*sinh(ap*L)
        Em = 2*cosh(am*L) +   (e2+am**2)/(e*am)*sinh(am*L)
        Ep = 2*cosh(ap*L) +   (e2+ap**2)/(e*ap)*sinh(ap*L)
        P  = (1+i)*cosh(am*L) + (e2+i*am**2)/(e*am)*sinh(am*L)
        Q  = (1+i)*cosh(ap*L) + (e2+i*ap**2)/(e*ap)*sinh(ap*L).

    The raw element combination subtracts exp(2*ap*L)-sized products down
    to an O(exp(ap*L)) result, losing |beta*gamma|*exp(ap*L)*ulp of
    absolute accuracy; here every surviving product mixes the two modes,
    so the evaluation stays at machine precision for any width.
    """
    eps = p.eps
    am, ap = p.alpha_minus, p.alpha_plus
    u = p.beta * p.gamma
    e2 = eps * eps
    cm, sm = cmath.cosh(am * lam), cmath.sinh(am * lam)
    cp, sp = cmath.cosh(ap * lam), cmath.sinh(ap * lam)
    dm = 2.0 * cm + 1j * (am * am - e2) / (eps * am) * sm
    dp = 2.0 * cp + 1j * (ap * ap - e2) / (eps * ap) * sp
    em = 2.0 * cm + (e2 + am * am) / (eps * am) * sm
    ep = 2.0 * cp + (e2 + ap * ap) / (eps * ap) * sp
    pm = (1.0 + 1j) * cm + (e2 + 1j * am * am) / (eps * am) * sm
    pp = (1.0 + 1j) * cp + (e2 + 1j * ap * ap) / (eps * ap) * sp
    num = dm * ep + u * u * dp * em + 2j * u * pm * pp - 4.0 * u
    den = (1.0 - u) * (ep - u * em)
    if abs(num) == 0.0:
        raise SingularDenominatorError(
            f"factored denominator vanished at eps={eps!r}, lam={lam!r}"
        )
    return complex(num / den)


def transmission(eps: float, b: AdimensionalBarrier) -> TransmissionResult:
    """Transmission amplitude through the barrier via the closed formula.

    Evaluates the factored form of D (see `denominator_factored`), which is
    algebraically identical to the element-table form but keeps full
    precision when exp(alpha_plus*lam) is large.

    Raises:
        DegenerateEnergyError: inside the eps**4 ~ vq**2 degeneracy band.
        ThresholdEnergyError: when alpha_minus ~ 0 (eps at the threshold);
            for vc=1 or vq=1 the critical module has the exact answer.
    """
    p = wave_params(eps, b)
    if abs(p.alpha_minus) <= ALPHA_MINUS_TOL:
        raise ThresholdEnergyError(
            f"alpha_minus = {p.alpha_minus!r} at eps={eps!r}: "
            "closed formula singular at the diffusion/tunneling threshold"
        )
    d = denominator_factored(p, b.lam)
    return TransmissionResult.from_amplitude(2.0 * cmath.exp(-1j * eps * b.lam) / d)


def transmission_complex(eps: float, lam: float) -> TransmissionResult:
    """Transmission for the purely complex barrier (vc=1, vq=0).

    Uses the single analytic expression

        T = exp(-i*eps*lam) / [cosh(a*lam) + i*(1-2*eps**2)/(2*eps*a) * sinh(a*lam)]

    with a = sqrt(1 - eps**2) taken on the principal branch, which reduces
    to the familiar cos/sin form for eps > 1.

    Raises:
        ThresholdEnergyError: at eps = 1 (use critical_complex instead).
    """
    if eps <= 0.0:
        raise ValueError("eps must be positive")
    if abs(eps - 1.0) < 1e-12:
        raise ThresholdEnergyError("eps = 1: use critical_complex for the exact limit")
    a = cmath.sqrt(complex(1.0 - eps * eps, 0.0))
    den = cmath.cosh(a * lam) + 1j * (1.0 - 2.0 * eps * eps) / (2.0 * eps * a) * cmath.sinh(a * lam)
    return TransmissionResult.from_amplitude(cmath.exp(-1j * eps * lam) / den)


def transmission_probability_complex(eps: float, lam: float) -> float:
    """|T|**2 for the complex barrier, written in the two textbook real forms."""
    if eps <= 0.0:
        raise ValueError("eps must be positive")
    if abs(eps - 1.0) < 1e-12:
        raise ThresholdEnergyError("eps = 1: use critical_complex for the exact limit")
    if eps > 1.0:
        k = math.sqrt(eps * eps - 1.0)
        return 1.0 / (1.0 + math.sin(k * lam) ** 2 / (4.0 * eps * eps * (eps * eps - 1.0)))
    k = math.sqrt(1.0 - eps * eps)
    return 1.0 / (1.0 + math.sinh(k * lam) ** 2 / (4.0 * eps * eps * (1.0 - eps * eps)))
