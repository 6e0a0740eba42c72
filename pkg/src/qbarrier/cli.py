"""Command-line front end.

Subcommands:

    point       one (eps, vc, vq, theta, lam) evaluation
    sweep       transmission tables over energy or width grids (csv/json)
    resonances  peak/spacing tables for a list of potentials
    critical    exact threshold amplitudes and their series
    verify      seeded self-check suite; exit code counts failed classes

Adimensional inputs are primary; `point --physical` accepts the raw
barrier data (V1 V2 V3 L mass hbar energy) instead.  Widths may be given
in units of pi with --lambda-pi.  Exit codes: 2 invalid parameters,
3 degenerate/threshold point, 4 unwritable output path.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass

from . import __version__
from .barrier import AdimensionalBarrier, BarrierSpec, adimensionalize
from .closed_form import transmission
from .critical import asymptotic_moduli, critical_complex, critical_quaternionic
from .errors import DegenerateEnergyError, QBarrierError, ThresholdEnergyError
from .resonance import complex_resonance_energies, complex_resonance_widths, scan_peaks
from .solver import probability_balance, solve
from .verify import run_all

#: the five reference potentials used throughout: pure complex to pure quaternionic
STANDARD_POTENTIALS = (
    (1.0, 0.0),
    (math.sqrt(3.0) / 2.0, 0.5),
    (1.0 / math.sqrt(2.0), 1.0 / math.sqrt(2.0)),
    (0.5, math.sqrt(3.0) / 2.0),
    (0.0, 1.0),
)

SWEEP_COLUMNS = ("variable", "vc", "vq", "t_sq", "re_t", "im_t", "phase")


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _parse_potentials(text: str) -> list[tuple[float, float, float]]:
    if text.strip() == "table":
        return [(vc, vq, 0.0) for vc, vq in STANDARD_POTENTIALS]
    rows = []
    for chunk in text.split(";"):
        parts = [p for p in chunk.strip().split(",") if p]
        if len(parts) not in (2, 3):
            raise ValueError(f"potential {chunk!r}: expected 'vc,vq[,theta]'")
        vc, vq = float(parts[0]), float(parts[1])
        theta = float(parts[2]) if len(parts) == 3 else 0.0
        if abs(vc * vc + vq * vq - 1.0) > 1e-9:
            raise ValueError(f"potential {chunk!r}: vc**2 + vq**2 must equal 1")
        rows.append((vc, vq, theta))
    if not rows:
        raise ValueError("empty potential list")
    return rows


def _resolve_lambda(args, required: bool = True) -> float | None:
    if getattr(args, "lam", None) is not None and getattr(args, "lam_pi", None) is not None:
        raise ValueError("give either --lambda or --lambda-pi, not both")
    if getattr(args, "lam", None) is not None:
        return args.lam
    if getattr(args, "lam_pi", None) is not None:
        return args.lam_pi * math.pi
    if required:
        raise ValueError("a width is required (--lambda or --lambda-pi)")
    return None


def _emit(text: str, out: str | None) -> int:
    if out is None or out == "-":
        sys.stdout.write(text)
        return 0
    try:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {out!r}: {exc}", file=sys.stderr)
        return 4
    return 0


def _csv_text(meta: dict, rows: list[tuple]) -> str:
    lines = [f"# qbarrier {__version__}"]
    for key, value in meta.items():
        lines.append(f"# {key}={value}")
    lines.append(",".join(SWEEP_COLUMNS))
    for row in rows:
        lines.append(",".join(_fmt(v) for v in row))
    return "\n".join(lines) + "\n"


def _json_text(meta: dict, rows: list[tuple]) -> str:
    payload = {
        "meta": {"tool": "qbarrier", "version": __version__, **meta,
                 "columns": list(SWEEP_COLUMNS)},
        "rows": [list(row) for row in rows],
    }
    return json.dumps(payload, sort_keys=True, indent=1) + "\n"


# ---------------------------------------------------------------- point

def cmd_point(args) -> int:
    if args.physical is not None:
        v1, v2, v3, length, mass, hbar, energy = args.physical
        barrier, eps = adimensionalize(
            BarrierSpec(v1=v1, v2=v2, v3=v3, length=length, mass=mass,
                        hbar=hbar, energy=energy)
        )
    else:
        if args.vc is None or args.vq is None or args.eps is None:
            raise ValueError("point needs --vc, --vq and --eps (or --physical)")
        lam = _resolve_lambda(args)
        barrier = AdimensionalBarrier(vc=args.vc, vq=args.vq, theta=args.theta, lam=lam)
        eps = args.eps

    if barrier.lam == 0.0:
        report = {
            "eps": eps, "vc": barrier.vc, "vq": barrier.vq,
            "theta": barrier.theta, "lambda": barrier.lam,
            "re_t": 1.0, "im_t": 0.0, "t_sq": 1.0, "phase": 0.0,
            "re_r": 0.0, "im_r": 0.0,
            "re_rt": 0.0, "im_rt": 0.0, "re_tt": 0.0, "im_tt": 0.0,
            "balance": 0.0,
        }
    else:
        result = transmission(eps, barrier)
        amps = solve(eps, barrier)
        report = {
            "eps": eps, "vc": barrier.vc, "vq": barrier.vq,
            "theta": barrier.theta, "lambda": barrier.lam,
            "re_t": result.t.real, "im_t": result.t.imag,
            "t_sq": result.prob, "phase": result.phase,
            "re_r": amps.r.real, "im_r": amps.r.imag,
            "re_rt": amps.rt.real, "im_rt": amps.rt.imag,
            "re_tt": amps.tt.real, "im_tt": amps.tt.imag,
            "balance": probability_balance(amps),
        }

    if args.format == "json":
        return _emit(json.dumps(report, sort_keys=True, indent=1) + "\n", args.out)
    lines = [
        f"eps     = {_fmt(report['eps'])}",
        f"vc, vq  = {_fmt(report['vc'])}, {_fmt(report['vq'])}",
        f"theta   = {_fmt(report['theta'])}",
        f"lambda  = {_fmt(report['lambda'])}",
        f"T       = {_fmt(report['re_t'])} {_fmt(report['im_t'])}j",
        f"|T|^2   = {_fmt(report['t_sq'])}",
        f"phase T = {_fmt(report['phase'])}",
        f"R       = {_fmt(report['re_r'])} {_fmt(report['im_r'])}j",
        f"R~      = {_fmt(report['re_rt'])} {_fmt(report['im_rt'])}j",
        f"T~      = {_fmt(report['re_tt'])} {_fmt(report['im_tt'])}j",
        f"1-|R|^2-|T|^2 = {report['balance']:.3e}",
    ]
    return _emit("\n".join(lines) + "\n", args.out)


# ---------------------------------------------------------------- sweep

@dataclass(frozen=True)
class SweepConfig:
    """One transmission sweep: variable, fixed parameter, grid, potentials."""

    mode: str  # "energy" or "width"
    fixed: float  # lam for energy mode, eps for width mode
    start: float
    stop: float
    step: float
    potentials: tuple[tuple[float, float, float], ...]

    def __post_init__(self):
        if self.mode not in ("energy", "width"):
            raise ValueError(f"unknown sweep mode {self.mode!r}")
        if self.step <= 0.0:
            raise ValueError("step must be positive")
        if self.start > self.stop:
            raise ValueError("start must not exceed stop")
        for vc, vq, _ in self.potentials:
            if abs(vc * vc + vq * vq - 1.0) > 1e-9:
                raise ValueError(f"potential ({vc}, {vq}) is off the unit circle")

    def grid(self) -> list[float]:
        if self.stop <= self.start:
            return []
        count = int(math.floor((self.stop - self.start) / self.step + 1e-9)) + 1
        return [self.start + k * self.step for k in range(count)]


def run_sweep(config: SweepConfig) -> list[tuple]:
    """Evaluate |T|^2 rows over the grid; potential-major, grid-ascending order."""
    rows = []
    for vc, vq, theta in config.potentials:
        for v in config.grid():
            if config.mode == "energy":
                barrier = AdimensionalBarrier(vc=vc, vq=vq, theta=theta, lam=config.fixed)
                result = transmission(v, barrier)
            else:
                barrier = AdimensionalBarrier(vc=vc, vq=vq, theta=theta, lam=v)
                result = transmission(config.fixed, barrier)
            rows.append((v, vc, vq, result.prob, result.t.real, result.t.imag, result.phase))
    return rows


def cmd_sweep(args) -> int:
    potentials = _parse_potentials(args.potentials)
    if args.fixed is not None and args.fixed_pi is not None:
        raise ValueError("give either --fixed or --fixed-pi, not both")
    if args.fixed is not None:
        fixed = args.fixed
    elif args.fixed_pi is not None:
        fixed = args.fixed_pi * math.pi
    else:
        raise ValueError("sweep needs --fixed or --fixed-pi")
    config = SweepConfig(mode=args.mode, fixed=fixed, start=args.start,
                         stop=args.stop, step=args.step, potentials=tuple(potentials))
    rows = run_sweep(config)
    meta = {
        "command": "sweep", "mode": config.mode, "fixed": _fmt(config.fixed),
        "start": _fmt(config.start), "stop": _fmt(config.stop), "step": _fmt(config.step),
        "potentials": ";".join(f"{vc:.9g},{vq:.9g},{th:.9g}" for vc, vq, th in potentials),
    }
    if args.format == "json":
        return _emit(_json_text(meta, rows), args.out)
    return _emit(_csv_text(meta, rows), args.out)


# ---------------------------------------------------------------- resonances

def _energy_table(lam0: float, potentials, n_peaks: int) -> list[dict]:
    closed = complex_resonance_energies(lam0, n_peaks)
    eps1_complex = closed[0][0]
    hi = math.sqrt(1.0 + ((n_peaks + 0.5) * math.pi / lam0) ** 2)
    lo = 1.0 + min(1e-3, (eps1_complex - 1.0) / 10.0)
    step = min(1e-3, (eps1_complex - 1.0) / 20.0)
    out = []
    for vc, vq, theta in potentials:
        if vq == 0.0:
            locs = [e for e, _, _ in closed]
        else:
            barrier = AdimensionalBarrier(vc=vc, vq=vq, theta=theta, lam=lam0)
            scan = scan_peaks(barrier, "energy", lo, hi, coarse_step=step)
            locs = [x for x, _ in scan.peaks[:n_peaks]]
        out.append({"vc": vc, "vq": vq, "locations": locs})
    return out


def _width_table(eps0: float, potentials, n_peaks: int) -> list[dict]:
    closed = complex_resonance_widths(eps0, n_peaks)
    spacing = closed[0][1]
    # scan from the fundamental (one spacing) upward: sub-fundamental peaks
    # are not tabulated
    lo, hi = spacing, closed[-1][0] + 0.6 * spacing
    out = []
    for vc, vq, theta in potentials:
        if vq == 0.0:
            locs = [l for l, _, _ in closed]
        else:
            barrier = AdimensionalBarrier(vc=vc, vq=vq, theta=theta, lam=1.0)
            scan = scan_peaks(barrier, "width", lo, hi, eps0=eps0)
            locs = [x for x, _ in scan.peaks[:n_peaks]]
        out.append({"vc": vc, "vq": vq, "locations": locs})
    return out


def cmd_resonances(args) -> int:
    potentials = _parse_potentials(args.potentials)
    n_peaks = args.n
    lam0 = _resolve_lambda(args, required=False)
    if (lam0 is None) == (args.eps0 is None):
        raise ValueError("give exactly one of --lambda/--lambda-pi or --eps0")
    if n_peaks < 1:
        raise ValueError("--n must be at least 1")
    if lam0 is not None:
        table = _energy_table(lam0, potentials, n_peaks)
        unit = 1.0
        head = _table_headers("eps", "", n_peaks)
    else:
        if args.eps0 <= 1.0:
            raise ValueError("--eps0 must exceed 1")
        table = _width_table(args.eps0, potentials, n_peaks)
        unit = math.pi
        head = _table_headers("lam", "_pi", n_peaks)

    lines = ["vc       vq       " + "  ".join(f"{h:>9}" for h in head)]
    payload = []
    for row in table:
        locs = [x / unit for x in row["locations"]]
        flat = _table_order(locs)
        payload.append({"vc": row["vc"], "vq": row["vq"], "values": flat})
        lines.append(
            f"{row['vc']:<8.6f} {row['vq']:<8.6f} "
            + "  ".join(f"{v:>9.3f}" for v in flat)
        )
    if args.format == "json":
        return _emit(json.dumps({"meta": {"tool": "qbarrier", "version": __version__},
                                 "rows": payload}, sort_keys=True, indent=1) + "\n", args.out)
    return _emit("\n".join(lines) + "\n", args.out)


def _table_order(locs: list[float]) -> list[float]:
    """Interleave locations and spacings: loc1, loc2, loc2-loc1, loc3, loc3-loc2, ..."""
    flat = [locs[0]]
    for i in range(1, len(locs)):
        flat.append(locs[i])
        flat.append(locs[i] - locs[i - 1])
    return flat


def _table_headers(stem: str, suffix: str, n_peaks: int) -> list[str]:
    head = [f"{stem}1{suffix}"]
    for i in range(2, n_peaks + 1):
        head.append(f"{stem}{i}{suffix}")
        head.append(f"d_{stem}{i - 1}{suffix}")
    return head


# ---------------------------------------------------------------- critical

def cmd_critical(args) -> int:
    lam = _resolve_lambda(args)
    if args.case in ("c", "complex"):
        amps = critical_complex(lam)
    elif args.case in ("q", "quaternionic"):
        amps = critical_quaternionic(lam, args.theta)
    else:
        raise ValueError(f"unknown case {args.case!r}")
    report = {
        "case": amps.case, "lambda": lam,
        "re_r": amps.r.real, "im_r": amps.r.imag, "abs_r": abs(amps.r),
        "re_t": amps.t.real, "im_t": amps.t.imag, "abs_t": abs(amps.t),
        "balance": 1.0 - abs(amps.r) ** 2 - abs(amps.t) ** 2,
    }
    if amps.rt is not None and amps.tt is not None:
        report.update({"re_rt": amps.rt.real, "im_rt": amps.rt.imag,
                       "re_tt": amps.tt.real, "im_tt": amps.tt.imag})
    if args.series:
        regime = "thin" if lam < 0.3 else ("thick" if lam > 10.0 else None)
        if regime is None:
            report["series"] = "no regime applies for 0.3 <= lambda <= 10"
        else:
            sr, st = asymptotic_moduli(lam, regime, amps.case)
            report.update({"series_regime": regime, "series_abs_r": sr, "series_abs_t": st})
    if args.format == "json":
        return _emit(json.dumps(report, sort_keys=True, indent=1) + "\n", args.out)
    lines = [f"{k} = {v}" for k, v in report.items()]
    return _emit("\n".join(lines) + "\n", args.out)


# ---------------------------------------------------------------- verify

def cmd_verify(args) -> int:
    reports = run_all(args.seed, args.samples)
    for report in reports:
        print(report.line())
    failures = sum(0 if r.passed else 1 for r in reports)
    print(f"{len(reports) - failures}/{len(reports)} check classes passed")
    return min(failures, 125)


# ---------------------------------------------------------------- parser

def _add_common(sub) -> None:
    sub.add_argument("--format", choices=("text", "csv", "json"), default=None)
    sub.add_argument("--out", default=None, help="output path ('-' for stdout)")
    sub.add_argument("--seed", type=int, default=42)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qbarrier",
        description="Transmission through a one-dimensional quaternionic potential barrier",
    )
    parser.add_argument("--version", action="version", version=f"qbarrier {__version__}")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("point", help="evaluate one parameter point")
    p.add_argument("--vc", type=float)
    p.add_argument("--vq", type=float)
    p.add_argument("--theta", type=float, default=0.0)
    p.add_argument("--eps", type=float)
    p.add_argument("--lambda", dest="lam", type=float)
    p.add_argument("--lambda-pi", dest="lam_pi", type=float)
    p.add_argument("--physical", nargs=7, type=float, metavar=("V1", "V2", "V3", "L", "M", "HBAR", "E"))
    _add_common(p)
    p.set_defaults(func=cmd_point)

    p = subs.add_parser("sweep", help="transmission over an energy or width grid")
    p.add_argument("--mode", choices=("energy", "width"), required=True)
    p.add_argument("--fixed", type=float, help="lam for energy mode, eps for width mode")
    p.add_argument("--fixed-pi", dest="fixed_pi", type=float, help="--fixed in units of pi")
    p.add_argument("--start", type=float, required=True)
    p.add_argument("--stop", type=float, required=True)
    p.add_argument("--step", type=float, required=True)
    p.add_argument("--potentials", default="table")
    _add_common(p)
    p.set_defaults(func=cmd_sweep)

    p = subs.add_parser("resonances", help="peak locations and spacings")
    p.add_argument("--lambda", dest="lam", type=float)
    p.add_argument("--lambda-pi", dest="lam_pi", type=float)
    p.add_argument("--eps0", type=float)
    p.add_argument("--n", type=int, default=3, help="number of peaks per row")
    p.add_argument("--potentials", default="table")
    _add_common(p)
    p.set_defaults(func=cmd_resonances)

    p = subs.add_parser("critical", help="exact threshold (eps=1) amplitudes")
    p.add_argument("--case", required=True, help="'c'/'complex' or 'q'/'quaternionic'")
    p.add_argument("--lambda", dest="lam", type=float)
    p.add_argument("--lambda-pi", dest="lam_pi", type=float)
    p.add_argument("--theta", type=float, default=0.0)
    p.add_argument("--series", action="store_true")
    _add_common(p)
    p.set_defaults(func=cmd_critical)

    p = subs.add_parser("verify", help="run the self-check suite")
    p.add_argument("--samples", type=int, default=500)
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "format", None) is None:
        args.format = "csv" if args.command == "sweep" else "text"
    try:
        return args.func(args)
    except (DegenerateEnergyError, ThresholdEnergyError) as exc:
        remedy = ""
        vc = getattr(args, "vc", None)
        vq = getattr(args, "vq", None)
        if vc is not None and vq is not None and (abs(vc - 1.0) < 1e-9 or abs(vq - 1.0) < 1e-9):
            case = "c" if abs(vc - 1.0) < 1e-9 else "q"
            remedy = f"; the 'critical' command (--case {case}) handles this point exactly"
        print(f"error: {exc}{remedy}", file=sys.stderr)
        return 3
    except (ValueError, QBarrierError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
