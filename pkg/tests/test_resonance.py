"""Resonance closed forms and the peak/valley scanner."""

import math

import pytest

from qbarrier import (
    AdimensionalBarrier,
    complex_resonance_energies,
    complex_resonance_widths,
    min_transmission,
    scan_peaks,
    transmission_complex,
)
from tests.conftest import FIVE_POTENTIALS

SQRT2 = math.sqrt(2.0)
PI = math.pi


class TestClosedForms:
    def test_energies_at_three_pi(self):
        rows = complex_resonance_energies(3.0 * PI, 3)
        eps = [r[0] for r in rows]
        assert eps[0] == pytest.approx(math.sqrt(10.0) / 3.0, abs=1e-14)
        assert eps[1] == pytest.approx(math.sqrt(13.0) / 3.0, abs=1e-14)
        assert eps[2] == pytest.approx(SQRT2, abs=1e-14)
        assert rows[0][1] == pytest.approx((math.sqrt(13.0) - math.sqrt(10.0)) / 3.0, abs=1e-14)
        assert rows[1][1] == pytest.approx(SQRT2 - math.sqrt(13.0) / 3.0, abs=1e-14)

    def test_minimum_offsets_sit_at_half_integer_condition(self):
        lam0 = 3.0 * PI
        rows = complex_resonance_energies(lam0, 2)
        for n, (eps_n, _, d_tilde) in enumerate(rows, start=1):
            probe = eps_n + d_tilde
            assert math.sqrt(probe**2 - 1.0) * lam0 == pytest.approx((n + 0.5) * PI, abs=1e-10)

    def test_spacings_vanish_for_wide_barriers(self):
        rows = complex_resonance_energies(1e4, 3)
        assert all(r[1] < 1e-3 for r in rows)

    def test_widths_at_sqrt2(self):
        rows = complex_resonance_widths(SQRT2, 3)
        assert rows[0][0] == pytest.approx(2.0 * PI, abs=1e-12)
        assert rows[1][0] == pytest.approx(3.0 * PI, abs=1e-12)
        assert rows[2][0] == pytest.approx(4.0 * PI, abs=1e-12)
        for lam_n, d_lam, d_tilde in rows:
            assert d_lam == pytest.approx(PI, abs=1e-12)
            assert d_tilde == pytest.approx(PI / 2.0, abs=1e-12)

    def test_fundamental_width_on_request(self):
        rows = complex_resonance_widths(SQRT2, 2, include_fundamental=True)
        assert rows[0][0] == pytest.approx(PI, abs=1e-12)
        assert rows[1][0] == pytest.approx(2.0 * PI, abs=1e-12)

    def test_width_spacing_diverges_at_threshold(self):
        rows = complex_resonance_widths(1.0 + 1e-6, 1)
        assert rows[0][0] > 1e3

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            complex_resonance_widths(0.9, 2)
        with pytest.raises(ValueError):
            complex_resonance_energies(-1.0, 2)
        with pytest.raises(ValueError):
            min_transmission(1.0)


class TestMinTransmission:
    def test_exact_rational_value(self):
        assert min_transmission(SQRT2) == pytest.approx(8.0 / 9.0, abs=1e-15)

    def test_near_threshold_value(self):
        # 1/(1 + 1/(4 * 1.21 * 0.21)), frozen from direct arithmetic
        assert min_transmission(1.1) == pytest.approx(0.5040666534417774, abs=1e-13)

    def test_monotone_to_one(self):
        values = [min_transmission(e) for e in (1.2, 1.5, 2.0, 4.0, 10.0, 1e3)]
        assert all(b > a for a, b in zip(values, values[1:]))
        assert values[-1] > 1.0 - 1e-5

    def test_matches_complex_formula_at_half_integer_condition(self):
        # at the half-integer energy the oscillation factor is exactly 1,
        # so |T|^2 there equals the closed minimum value; the true valley
        # of the eps-scan sits slightly below because the prefactor also
        # moves with eps
        lam0 = 2.0 * PI
        rows = complex_resonance_energies(lam0, 1)
        eps_half = rows[0][0] + rows[0][2]
        at_half = transmission_complex(eps_half, lam0).prob
        assert at_half == pytest.approx(min_transmission(eps_half), abs=1e-12)
        lo = eps_half - 1e-3
        scanned_min = min(transmission_complex(lo + i * 2e-6, lam0).prob
                          for i in range(1001))
        assert scanned_min <= at_half
        assert at_half - scanned_min < 3e-3


class TestScanPeaks:
    def test_complex_energy_scan_matches_closed_form(self):
        b = AdimensionalBarrier(vc=1.0, vq=0.0, theta=0.0, lam=3.0 * PI)
        scan = scan_peaks(b, "energy", 1.001, 1.5)
        closed = [r[0] for r in complex_resonance_energies(3.0 * PI, 3)]
        assert len(scan.peaks) >= 3
        for (found, prob), expected in zip(scan.peaks, closed):
            assert found == pytest.approx(expected, abs=5e-6)
            assert prob == pytest.approx(1.0, abs=1e-9)

    def test_pure_quaternionic_energy_scan(self):
        b = AdimensionalBarrier(vc=0.0, vq=1.0, theta=0.0, lam=3.0 * PI)
        scan = scan_peaks(b, "energy", 1.001, 1.3)
        locs = [x for x, _ in scan.peaks]
        assert locs[0] == pytest.approx(1.011, abs=5e-4)
        assert locs[1] == pytest.approx(1.077, abs=5e-4)
        assert locs[2] == pytest.approx(1.246, abs=5e-4)
        assert all(prob <= 1.0 + 1e-12 for _, prob in scan.peaks)

    def test_pure_quaternionic_width_scan(self):
        # tabulated peaks are the ones above the fundamental spacing (pi here)
        b = AdimensionalBarrier(vc=0.0, vq=1.0, theta=0.0, lam=1.0)
        scan = scan_peaks(b, "width", PI, 3.5 * PI, eps0=SQRT2)
        locs = [x / PI for x, _ in scan.peaks]
        assert locs[0] == pytest.approx(1.718, abs=5e-4)
        assert locs[1] == pytest.approx(2.478, abs=5e-4)
        assert locs[2] == pytest.approx(3.238, abs=5e-4)

    def test_sub_fundamental_peak_exists_but_is_not_tabulated(self):
        b = AdimensionalBarrier(vc=0.0, vq=1.0, theta=0.0, lam=1.0)
        scan = scan_peaks(b, "width", 0.5, 3.5 * PI, eps0=SQRT2)
        locs = [x / PI for x, _ in scan.peaks]
        assert locs[0] < 1.0  # a real peak below the fundamental
        assert locs[1] == pytest.approx(1.718, abs=5e-4)

    def test_scan_invariants(self):
        b = AdimensionalBarrier(vc=0.5, vq=math.sqrt(3.0) / 2.0, theta=0.9, lam=3.0 * PI)
        scan = scan_peaks(b, "energy", 1.001, 1.5)
        locs_p = [x for x, _ in scan.peaks]
        locs_v = [x for x, _ in scan.valleys]
        assert locs_p == sorted(locs_p)
        assert locs_v == sorted(locs_v)
        # interleave: between consecutive peaks there is exactly one valley
        for (x1, p1), (x2, p2) in zip(scan.peaks, scan.peaks[1:]):
            inside = [(v, pv) for v, pv in scan.valleys if x1 < v < x2]
            assert len(inside) == 1
            assert inside[0][1] <= p1 and inside[0][1] <= p2

    def test_quaternionic_width_spacing_constant(self):
        b = AdimensionalBarrier(vc=0.0, vq=1.0, theta=0.0, lam=1.0)
        scan = scan_peaks(b, "width", PI, 3.5 * PI, eps0=SQRT2)
        locs = [x for x, _ in scan.peaks]
        gaps = [y - x for x, y in zip(locs, locs[1:])]
        assert abs(gaps[1] - gaps[0]) < 5e-4 * PI

    def test_empty_range_is_not_an_error(self):
        b = AdimensionalBarrier(vc=1.0, vq=0.0, theta=0.0, lam=0.5)
        scan = scan_peaks(b, "energy", 1.05, 1.10)  # narrow barrier: no peak here
        assert scan.peaks == []

    def test_bad_arguments(self):
        b = AdimensionalBarrier(vc=1.0, vq=0.0, theta=0.0, lam=1.0)
        with pytest.raises(ValueError):
            scan_peaks(b, "width", 0.5, 2.0)  # missing eps0
        with pytest.raises(ValueError):
            scan_peaks(b, "frequency", 0.5, 2.0)
        with pytest.raises(ValueError):
            scan_peaks(b, "energy", 2.0, 1.0)


def test_peak_monotonicity_across_unit_circle():
    # increasing quaternionic weight pulls every location and spacing down
    lam0 = 3.0 * PI
    table = []
    for vc, vq in FIVE_POTENTIALS:
        if vq == 0.0:
            locs = [r[0] for r in complex_resonance_energies(lam0, 3)]
        else:
            b = AdimensionalBarrier(vc=vc, vq=vq, theta=0.0, lam=lam0)
            locs = [x for x, _ in scan_peaks(b, "energy", 1.001, 1.5).peaks[:3]]
        table.append(locs)
    for prev, cur in zip(table, table[1:]):
        assert all(c < p for p, c in zip(prev, cur))
        assert (cur[1] - cur[0]) < (prev[1] - prev[0])
