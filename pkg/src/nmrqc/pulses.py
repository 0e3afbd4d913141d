"""Sinusoidal-field pulse design for single-spin rotations.

A pulse must (a) be resonant with its target spin, (b) deliver power
duration*amplitude equal to the rotation angle, (c) return the spectator
spin to its initial state, and (d) leave no state-dependent phase from
the bare z-precession.  With the field ratio gamma = N/M rational, all
four are satisfied to good approximation by durations

    t1/2pi = 2 k M N^2   (spin-1 pulses)
    t2/2pi = 2 k M^3     (spin-2 pulses)

with the target amplitude fixed by the angle and the spectator channel
scaled by gamma.  The approximation quality grows with the margin
2 k N M (M - N); exactness is unreachable at finite duration, which is
the root of every deviation the result tables quantify.

Two field geometries are supported.  ``rotating`` drives both transverse
channels a quarter period apart, producing a circularly rotating field
that turns the target exactly.  ``static_axis`` drives a single channel;
only the co-rotating half of the field does work, so amplitudes double
and the counter-rotating half adds a small uncorrected wobble.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import numpy as np

from .errors import ConfigurationError
from .hamiltonian import DEFAULT_MACHINE, EOParams, MachineConfig
from .operators import TWO_PI, exp_i_dot_s

ROTATING = "rotating"
STATIC_AXIS = "static_axis"
_MODES = (ROTATING, STATIC_AXIS)

PULSE_DELTA = 0.01  # default integrator step (over 2*pi) for pulse EOs

# margin verdict thresholds for "much greater than one"
_MARGIN_POOR = 50
_MARGIN_GOOD = 500


@dataclass(frozen=True)
class RationalGamma:
    """Rational approximation N/M of the field ratio gamma."""

    n: int
    m: int

    def __post_init__(self):
        if not (isinstance(self.n, int) and isinstance(self.m, int)):
            raise ConfigurationError("N and M must be integers")
        if not 0 < self.n < self.m:
            raise ConfigurationError(f"need 0 < N < M, got N={self.n}, M={self.m}")

    @property
    def gamma(self) -> float:
        return self.n / self.m

    @classmethod
    def from_machine(cls, machine: MachineConfig,
                     max_denominator: int = 10 ** 6) -> "RationalGamma":
        frac = Fraction(machine.gamma).limit_denominator(max_denominator)
        return cls(frac.numerator, frac.denominator)


DEFAULT_GAMMA = RationalGamma(1, 4)


@dataclass(frozen=True)
class PulseDesign:
    """A fully determined pulse: schedule, amplitudes, frequency, phases."""

    target_spin: int
    angle: float           # radians, in [0, 4*pi)
    axis: str              # 'x' or 'y'
    direction: int         # +1 forward, -1 inverse
    mode: str
    k: int
    n: int
    m: int
    s: int                 # 2 k M N^2, the duration label of spin-1 pulses
    t_over_2pi: float
    amplitude_spin1: float
    amplitude_spin2: float
    omega: float
    phi_x: float
    phi_y: float
    h1z: float
    h2z: float
    margin: int


def parse_axis(axis: str) -> tuple[str, int]:
    """Accepts 'x', 'y', '-x', '-y', 'x-inverse', 'y-inverse'."""
    a = axis.strip().lower()
    direction = +1
    if a.startswith("-"):
        direction, a = -1, a[1:]
    if a.endswith("-inverse"):
        direction, a = -direction, a[: -len("-inverse")]
    if a not in ("x", "y"):
        raise ConfigurationError(f"axis must be x or y (optionally inverted), got {axis!r}")
    return a, direction


def commensurability_margin(gamma: RationalGamma, k: int):
    """The figure of merit 2 k N M (M - N) and a qualitative verdict.

    The design conditions hold only in the limit margin >> 1; the
    verdict thresholds (poor < 50 <= marginal < 500 <= good) are a
    package convention for flagging obviously short pulses.
    """
    value = 2 * k * gamma.n * gamma.m * (gamma.m - gamma.n)
    if value < _MARGIN_POOR:
        verdict = "poor"
    elif value < _MARGIN_GOOD:
        verdict = "marginal"
    else:
        verdict = "good"
    return value, verdict


def hypothetical_durations(gamma: RationalGamma, k: int) -> tuple[int, int]:
    """Pulse durations (t1, t2) over 2*pi for spin-1 and spin-2 rotations."""
    return 2 * k * gamma.m * gamma.n ** 2, 2 * k * gamma.m ** 3


def design_pulse(target_spin: int, angle: float, axis: str,
                 gamma: RationalGamma = DEFAULT_GAMMA, k: int = 1,
                 mode: str = ROTATING, direction: int | None = None,
                 machine: MachineConfig = DEFAULT_MACHINE,
                 label: str | None = None,
                 delta: float = PULSE_DELTA) -> tuple[PulseDesign, EOParams]:
    """Design the pulse rotating `target_spin` by `angle` about `axis`.

    Angles up to 4*pi are legal: a spin-1/2 returns to itself only after
    two full turns, and designs reduced modulo 2 turns (rather than 1)
    preserve the state-dependent sign.  The spectator-spin channel always
    carries gamma times the target amplitude, as the hardware dictates.

    Returns the design record plus the ready-to-integrate EOParams
    (machine z-fields and coupling stay on during the pulse).
    """
    axis, axis_dir = parse_axis(axis)
    direction = axis_dir if direction is None else direction * axis_dir
    if direction not in (-1, +1):
        raise ConfigurationError(f"direction must be +1 or -1, got {direction}")
    if not 0.0 <= angle <= 2.0 * TWO_PI + 1e-12:
        raise ConfigurationError(
            f"angle must lie in [0, 4*pi], got {angle!r}")
    if target_spin not in (1, 2):
        raise ConfigurationError(f"target_spin must be 1 or 2, got {target_spin}")
    if k < 1 or not isinstance(k, int):
        raise ConfigurationError(f"k must be a positive integer, got {k!r}")
    if mode not in _MODES:
        raise ConfigurationError(f"mode must be one of {_MODES}, got {mode!r}")
    if not 0.0 < machine.gamma < 1.0:
        raise ConfigurationError(
            f"machine field ratio {machine.gamma!r} outside (0, 1); no valid design")

    t1, t2 = hypothetical_durations(gamma, k)
    turns = angle / TWO_PI
    if target_spin == 1:
        t = float(t1)
        amp_target = turns / t1 * machine.h1z
        amp1, amp2 = amp_target, amp_target * machine.gamma
        omega = machine.h1z
    else:
        t = float(t2)
        amp_target = turns / t2 * machine.h1z
        amp1, amp2 = amp_target / machine.gamma, amp_target
        omega = machine.h2z

    # Channel signs and phases, fixed so that a rotating-mode x pulse
    # realizes exp(i*direction*angle*Sx) and a y pulse exp(i*direction*
    # angle*Sy); inverses simply negate both channel amplitudes.
    if axis == "x":
        sign = -direction
        phi_x, phi_y = -np.pi / 2.0, 0.0
    else:
        sign = +direction
        phi_x, phi_y = 0.0, np.pi / 2.0

    sf = {}
    if mode == ROTATING:
        sf["sf1x"] = sf["sf1y"] = sign * amp1
        sf["sf2x"] = sf["sf2y"] = sign * amp2
    else:
        # single-axis drive: x rotations via the y channel and vice
        # versa, at double amplitude (co-rotating half carries the power)
        phi_x = phi_y = 0.0
        channel = "y" if axis == "x" else "x"
        sf[f"sf1{channel}"] = 2.0 * sign * amp1
        sf[f"sf2{channel}"] = 2.0 * sign * amp2

    margin, _ = commensurability_margin(gamma, k)
    design = PulseDesign(
        target_spin=target_spin, angle=angle, axis=axis, direction=direction,
        mode=mode, k=k, n=gamma.n, m=gamma.m, s=t1, t_over_2pi=t,
        amplitude_spin1=amp1, amplitude_spin2=amp2, omega=omega,
        phi_x=phi_x, phi_y=phi_y, h1z=machine.h1z, h2z=machine.h2z,
        margin=margin)
    eo = EOParams(
        label=label or f"pulse(spin{target_spin},{'-' if direction < 0 else ''}{axis},"
                       f"{turns:g}turn,{mode},k={k})",
        tau=t, j=machine.coupling, h1z=machine.h1z, h2z=machine.h2z,
        omega=omega, phi_x=phi_x, phi_y=phi_y, delta=delta, **sf)
    return design, eo


def spectator_excess_angle(design: PulseDesign) -> float:
    """t*|v| modulo 4*pi for the spectator spin.

    v combines the spectator's detuning from the drive with its share of
    the transverse field; the spectator returns exactly when t*|v| is a
    multiple of 4*pi.
    """
    if design.target_spin == 1:
        amp_spec = design.amplitude_spin2
        detuning = design.h2z - design.h1z
    else:
        amp_spec = design.amplitude_spin1
        detuning = design.h1z - design.h2z
    t = design.t_over_2pi * TWO_PI
    phase = t * np.hypot(amp_spec, detuning)
    return float(phase % (2.0 * TWO_PI))


def spectator_residual(design: PulseDesign) -> float:
    """Operator distance from identity of the spectator's net rotation.

    Defined for rotating-mode designs, where the pulse's action on the
    spectator is exactly a rotation about v = (transverse share,
    detuning).  Returns the spectral norm ||U_spec - 1||; 0 means the
    spectator is perfectly restored, 2 is the antipodal worst case.
    """
    if design.mode != ROTATING:
        raise ConfigurationError("spectator_residual applies to rotating-mode designs")
    if design.target_spin == 1:
        amp_spec = design.amplitude_spin2
        detuning = design.h2z - design.h1z
    else:
        amp_spec = design.amplitude_spin1
        detuning = design.h1z - design.h2z
    t = design.t_over_2pi * TWO_PI
    cx = t * amp_spec if design.axis == "x" else 0.0
    cy = t * amp_spec if design.axis == "y" else 0.0
    u = exp_i_dot_s(cx, cy, t * detuning)
    return float(np.linalg.norm(u - np.eye(2), ord=2))


@dataclass(frozen=True)
class CommensurabilityReport:
    ok: bool
    k1: int | None
    constraints: tuple[str, ...]


def _as_fraction(value) -> Fraction:
    if isinstance(value, float):
        raise ConfigurationError(
            f"frequencies must be exact rationals (int, Fraction, str or "
            f"(num, den)); got float {value!r}")
    if isinstance(value, tuple):
        return Fraction(value[0], value[1])
    return Fraction(value)


def commensurability_check_n(frequencies) -> CommensurabilityReport:
    """Smallest k1 freezing the bare precession of every spin at once.

    Writing each ratio f_j/f_1 = N_j/M_j in lowest terms, pulse schedules
    exist only when k1 (M_j - N_j) = M_j n_j has integer solutions for
    all j, i.e. k1 must be a multiple of every M_j.  Equal frequencies
    impose no constraint.
    """
    fracs = [_as_fraction(f) for f in frequencies]
    if len(fracs) < 2:
        raise ConfigurationError("need at least two frequencies")
    base = fracs[0]
    if base <= 0:
        raise ConfigurationError("frequencies must be positive")
    k1 = 1
    constraints = []
    for jdx, f in enumerate(fracs[1:], start=2):
        ratio = f / base
        if ratio == 1:
            constraints.append(f"spin {jdx}: equal frequency, no constraint")
            continue
        m = ratio.denominator
        constraints.append(f"spin {jdx}: ratio {ratio}, k1 must be a multiple of {m}")
        k1 = k1 * m // gcd(k1, m)
    return CommensurabilityReport(ok=True, k1=k1, constraints=tuple(constraints))
