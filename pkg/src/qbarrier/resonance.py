"""Resonance locations: closed forms for the complex barrier, scans otherwise.

For the complex barrier (vc=1) the transmission probability reaches 1
exactly when sqrt(eps**2 - 1)*lam = n*pi, which gives closed expressions
for the resonance energies at fixed width and resonance widths at fixed
energy, together with their spacings and the interleaved minima.  For
quaternionic barriers the peaks shift and flatten; they are located
numerically by a coarse grid pass followed by golden-section refinement.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Callable

from .barrier import AdimensionalBarrier
from .closed_form import transmission

#: golden-section shrink factor
_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class ResonanceScan:
    """Extrema of |T|**2 found along one scan variable.

    peaks and valleys are lists of (location, probability), strictly
    increasing in location and interleaved.
    """

    variable: str  # "energy" or "width"
    fixed: float  # lam for an energy scan, eps for a width scan
    peaks: list[tuple[float, float]]
    valleys: list[tuple[float, float]]


def complex_resonance_energies(lambda0: float, n_max: int) -> list[tuple[float, float, float]]:
    """(eps_n, spacing to the next peak, offset of the following minimum) for n = 1..n_max.

    eps_n = sqrt(1 + n**2*pi**2/lambda0**2); the minimum between peaks n and
    n+1 sits at the half-integer condition.
    """
    if lambda0 <= 0.0:
        raise ValueError("lambda0 must be positive")
    if n_max < 1:
        raise ValueError("n_max must be at least 1")

    def eps_at(n: float) -> float:
        return math.sqrt(1.0 + (n * math.pi / lambda0) ** 2)

    out = []
    for n in range(1, n_max + 1):
        e = eps_at(n)
        out.append((e, eps_at(n + 1) - e, eps_at(n + 0.5) - e))
    return out


def complex_resonance_widths(
    eps0: float, n_max: int, *, include_fundamental: bool = False
) -> list[tuple[float, float, float]]:
    """(lam_n, peak spacing, minimum offset) at fixed eps0 > 1, tabulated order.

    Full transparency occurs at every lam = n*pi/sqrt(eps0**2 - 1); the
    spacing pi/sqrt(eps0**2 - 1) is independent of n and the minima sit
    halfway.  Width tables conventionally start one spacing above zero:
    the fundamental (n = 1) equals the spacing itself and serves as the
    scan origin, so the default sequence begins at n = 2 (at eps0 =
    sqrt(2) that is 2*pi, 3*pi, 4*pi, ...).  Pass include_fundamental=True
    to start at n = 1.
    """
    if eps0 <= 1.0:
        raise ValueError("eps0 must exceed 1 (no oscillatory regime below threshold)")
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    k = math.sqrt(eps0 * eps0 - 1.0)
    start = 1 if include_fundamental else 2
    return [
        (n * math.pi / k, math.pi / k, math.pi / (2.0 * k))
        for n in range(start, start + n_max)
    ]


def min_transmission(eps_tilde: float) -> float:
    """Transmission probability at a half-integer minimum of the complex barrier.

    Equals [1 + 1/(4*e**2*(e**2-1))]**-1 and tends to 1 as e grows.
    """
    if eps_tilde <= 1.0:
        raise ValueError("eps_tilde must exceed 1")
    e2 = eps_tilde * eps_tilde
    return 1.0 / (1.0 + 1.0 / (4.0 * e2 * (e2 - 1.0)))


def _golden_section(f: Callable[[float], float], a: float, b: float, tol: float) -> float:
    """Abscissa of the maximum of f on [a, b] for unimodal f, to within tol."""
    x1 = b - _INVPHI * (b - a)
    x2 = a + _INVPHI * (b - a)
    f1, f2 = f(x1), f(x2)
    while b - a > tol:
        if f1 < f2:
            a, x1, f1 = x1, x2, f2
            x2 = a + _INVPHI * (b - a)
            f2 = f(x2)
        else:
            b, x2, f2 = x2, x1, f1
            x1 = b - _INVPHI * (b - a)
            f1 = f(x1)
    return 0.5 * (a + b)


def scan_peaks(
    b: AdimensionalBarrier,
    variable: str,
    lo: float,
    hi: float,
    *,
    eps0: float | None = None,
    coarse_step: float = 1e-3,
    refine_tol: float = 1e-6,
) -> ResonanceScan:
    """Locate local maxima and minima of |T|**2 along one variable.

    variable "energy" scans eps in [lo, hi] at the barrier's own width;
    variable "width" scans lam in [lo, hi] at the given eps0.  A coarse
    grid pass brackets each interior extremum, then golden-section search
    refines its location to refine_tol.  An empty result is not an error.
    """
    if variable == "energy":
        fixed = b.lam

        def prob(x: float) -> float:
            return transmission(x, b).prob

    elif variable == "width":
        if eps0 is None:
            raise ValueError("width scans need eps0")
        fixed = eps0

        def prob(x: float) -> float:
            return transmission(eps0, replace(b, lam=x)).prob

    else:
        raise ValueError(f"unknown scan variable {variable!r}")
    if not lo < hi:
        raise ValueError("need lo < hi")

    n = int(math.floor((hi - lo) / coarse_step + 1e-9)) + 1
    xs = [lo + i * coarse_step for i in range(n)]
    ys = [prob(x) for x in xs]

    peaks: list[tuple[float, float]] = []
    valleys: list[tuple[float, float]] = []
    for i in range(1, n - 1):
        if ys[i - 1] < ys[i] >= ys[i + 1]:
            x = _golden_section(prob, xs[i - 1], xs[i + 1], refine_tol)
            peaks.append((x, prob(x)))
        elif ys[i - 1] > ys[i] <= ys[i + 1]:
            x = _golden_section(lambda u: -prob(u), xs[i - 1], xs[i + 1], refine_tol)
            valleys.append((x, prob(x)))
    return ResonanceScan(variable=variable, fixed=fixed, peaks=peaks, valleys=valleys)
