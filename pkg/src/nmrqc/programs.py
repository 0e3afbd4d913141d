"""Executable gate-sequence programs in three implementation styles.

``ideal`` realizes each gate as its idealized-hardware EO (one exactly
solvable evolution per gate), ``rotating_sf`` and ``static_sf`` replace
every single-spin gate by a designed pulse of the corresponding field
geometry.  The equal-z-field conditional evolution is not available on
hardware whose spins see different static fields, so all styles use the
machine-field phase evolution "Ip" plus compensating primed rotations.

A Program stores steps in application order (element 0 acts first).
Exact-matrix steps appear only where a construction is defined by a
matrix rather than an evolution (the conditional phase gate in ideal
style, and optionally the final readout rotation).
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from .errors import ConfigurationError
from .gates import canonical_name, gate_rotation, ideal_eo_params, ideal_gate
from .hamiltonian import DEFAULT_MACHINE, EOParams, MachineConfig
from .integrator import eo_propagator
from .operators import TWO_PI
from .pulses import (DEFAULT_GAMMA, PULSE_DELTA, ROTATING, STATIC_AXIS,
                     RationalGamma, design_pulse)
from .states import StateVector, apply_unitary, prepare_basis_state, prepare_singlet

IDEAL = "ideal"
STATIC_SF = "static_sf"
ROTATING_SF = "rotating_sf"
STYLES = (IDEAL, STATIC_SF, ROTATING_SF)

_STYLE_MODE = {STATIC_SF: STATIC_AXIS, ROTATING_SF: ROTATING}

INPUT_SPECS = ("00", "10", "01", "11", "singlet")

# Application-order gate lists (first entry acts first on the state).
#
# CNOT3 places X1 directly after Y2b: the grouping with X1 and Y2b
# interchanged is logically identical (they act on different spins) but
# shifts the short-pulse results by a few percent, and the benchmark
# values correspond to this grouping.
CNOT_SEQUENCES = {
    1: ("Y2", "Ip", "Y2b", "X2p", "Y1b", "X1p", "Y1"),
    2: ("Y2", "Ip", "Y2b", "Y1b", "X2p", "X1p", "Y1"),
    3: ("Y2", "Ip", "Y2b", "X1", "X2p", "Y1p", "X1b"),
}

# Conditional phase gate as an evolution: diagonal core plus the
# double-primed rotations absorbing the bare precession phases.
G_EXPANSION = ("Gcore", "Y1b", "X1pp", "Y1", "Y2b", "X2pp", "Y2")

# Search sequences U_item, written in operator-product order (rightmost
# acts first); 'G' expands per style in the builder.
_GROVER_MIDDLE = {
    0: ("X1", "Y1b", "X2", "Y2b"),
    1: ("X1", "Y1b", "X2b", "Y2b"),
    2: ("X1b", "Y1b", "X2", "Y2b"),
    3: ("X1b", "Y1b", "X2b", "Y2b"),
}


def grover_sequence(item: int) -> tuple[str, ...]:
    """U_item in operator-product order (apply right to left)."""
    if item not in _GROVER_MIDDLE:
        raise ConfigurationError(f"item must be 0..3, got {item!r}")
    return (("X1", "Y1b", "X2", "Y2b", "G") + _GROVER_MIDDLE[item]
            + ("G", "X1b", "X1b", "Y1b", "X2b", "X2b", "Y2b"))


@dataclass(frozen=True)
class GateImplStyle:
    style: str
    k: int = 1

    def __post_init__(self):
        if self.style not in STYLES:
            raise ConfigurationError(f"style must be one of {STYLES}, got {self.style!r}")
        if self.k < 1:
            raise ConfigurationError(f"k must be >= 1, got {self.k}")


@dataclass(frozen=True)
class EOStep:
    eo: EOParams

    @property
    def label(self) -> str:
        return self.eo.label


@dataclass(frozen=True)
class MatrixStep:
    label: str
    matrix: np.ndarray = field(repr=False)

    def __post_init__(self):
        m = np.array(self.matrix, dtype=complex)
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)


@dataclass(frozen=True)
class Program:
    name: str
    steps: tuple
    input_spec: str = "00"
    ideal_expectations: tuple[float, float] | None = None

    @property
    def eos(self) -> tuple[EOParams, ...]:
        return tuple(s.eo for s in self.steps if isinstance(s, EOStep))

    def durations(self) -> tuple[float, ...]:
        """tau/2pi of each EO step, in application order."""
        return tuple(eo.tau for eo in self.eos)


def prepare_input(spec: str) -> StateVector:
    if spec == "singlet":
        return prepare_singlet()
    if spec in INPUT_SPECS:
        return prepare_basis_state(2, [int(spec[0]), int(spec[1])])
    raise ConfigurationError(f"unknown input spec {spec!r}; expected one of {INPUT_SPECS}")


def _gate_step(name: str, style: GateImplStyle, machine: MachineConfig,
               gamma: RationalGamma, delta: float):
    """One program step realizing a named gate in the given style."""
    cname = canonical_name(name)
    if cname == "Gcore":
        eo = ideal_eo_params("Ip", machine).replace(label="Gcore", delta=1.0)
        return EOStep(eo)
    if cname == "Ip":
        return EOStep(ideal_eo_params("Ip", machine))
    if style.style == IDEAL:
        return EOStep(ideal_eo_params(cname, machine))
    spin, axis, direction, turns = gate_rotation(cname, machine)
    _, eo = design_pulse(spin, TWO_PI * turns, axis, gamma=gamma, k=style.k,
                         mode=_STYLE_MODE[style.style], direction=direction,
                         machine=machine, label=cname, delta=delta)
    return EOStep(eo)


def _expand(names, style, machine, gamma, delta):
    steps = []
    for name in names:
        if name == "G" and style.style == IDEAL:
            steps.append(MatrixStep("G", ideal_gate("G", machine).matrix))
        elif name == "G":
            steps.extend(_gate_step(n, style, machine, gamma, delta)
                         for n in G_EXPANSION)
        else:
            steps.append(_gate_step(name, style, machine, gamma, delta))
    return steps


def _coerce_style(style, k: int) -> GateImplStyle:
    if isinstance(style, GateImplStyle):
        return style
    return GateImplStyle(style=style, k=k)


def _ideal_output(steps_names: list[str], input_spec: str,
                  machine: MachineConfig) -> tuple[float, float]:
    state = prepare_input(input_spec)
    for name in steps_names:
        state = apply_unitary(state, ideal_gate(name, machine).matrix)
    weights = np.abs(state.amplitudes) ** 2
    return (float(weights[1] + weights[3]), float(weights[2] + weights[3]))


def build_cnot(variant: int, style, k: int = 1,
               machine: MachineConfig = DEFAULT_MACHINE,
               gamma: RationalGamma = DEFAULT_GAMMA,
               delta: float = PULSE_DELTA, input_spec: str = "00") -> Program:
    """One controlled-NOT realization (variant 1, 2 or 3)."""
    style = _coerce_style(style, k)
    if variant not in CNOT_SEQUENCES:
        raise ConfigurationError(f"variant must be 1, 2 or 3, got {variant!r}")
    names = list(CNOT_SEQUENCES[variant])
    steps = _expand(names, style, machine, gamma, delta)
    ideal_ab = _ideal_output(names, input_spec, machine)
    return Program(name=f"CNOT{variant}[{style.style},k={style.k}]",
                   steps=tuple(steps), input_spec=input_spec,
                   ideal_expectations=ideal_ab)


def build_qa(which, input_spec: str, cnot_variant: int = 1, style=IDEAL,
             k: int = 1, machine: MachineConfig = DEFAULT_MACHINE,
             gamma: RationalGamma = DEFAULT_GAMMA, delta: float = PULSE_DELTA,
             final_rotation_style: str = "program") -> Program:
    """The two five-fold CNOT test programs.

    QA1 runs (CNOT)^5 on a basis state.  QA2 runs (CNOT)^5 on the singlet
    followed by a pi/2 rotation of spin 1 that turns the surviving
    entangled state into a definite readout; by default that rotation is
    executed in the program's own style, `final_rotation_style="exact"`
    substitutes the exact matrix.
    """
    style = _coerce_style(style, k)
    qa = str(which).upper().lstrip("QA") or str(which)
    if qa not in ("1", "2"):
        raise ConfigurationError(f"which must be QA1 or QA2, got {which!r}")
    if final_rotation_style not in ("program", "exact"):
        raise ConfigurationError(
            f"final_rotation_style must be 'program' or 'exact', got {final_rotation_style!r}")
    if qa == "1" and input_spec == "singlet":
        raise ConfigurationError("QA1 takes a basis-state input")
    if qa == "2" and input_spec != "singlet":
        raise ConfigurationError("QA2 takes the singlet input")

    names = list(CNOT_SEQUENCES[cnot_variant]) * 5
    steps = _expand(names, style, machine, gamma, delta)
    if qa == "2":
        names.append("Y1")
        if final_rotation_style == "exact":
            steps.append(MatrixStep("Y1", ideal_gate("Y1", machine).matrix))
        else:
            steps.append(_gate_step("Y1", style, machine, gamma, delta))
    ideal_ab = _ideal_output(names, input_spec, machine)
    return Program(name=f"QA{qa}[CNOT{cnot_variant},{style.style},k={style.k}]",
                   steps=tuple(steps), input_spec=input_spec,
                   ideal_expectations=ideal_ab)


def build_grover(item: int, style=IDEAL, k: int = 1,
                 machine: MachineConfig = DEFAULT_MACHINE,
                 gamma: RationalGamma = DEFAULT_GAMMA,
                 delta: float = PULSE_DELTA) -> Program:
    """Four-item database search for the given item position; input |00>."""
    style = _coerce_style(style, k)
    names = list(reversed(grover_sequence(item)))  # application order
    steps = _expand(names, style, machine, gamma, delta)
    ideal_ab = _ideal_output(names, "00", machine)
    return Program(name=f"Grover{item}[{style.style},k={style.k}]",
                   steps=tuple(steps), input_spec="00",
                   ideal_expectations=ideal_ab)


def run_program(program: Program, input_state: StateVector | None = None,
                delta: float | None = None,
                sf_phase_continuity: bool = False) -> StateVector:
    """Evolve the declared (or given) input through every step in order.

    With sf_phase_continuity the sinusoidal fields of successive EOs run
    on one shared clock instead of restarting at phase phi each EO.
    """
    state = prepare_input(program.input_spec) if input_state is None else input_state
    t0 = 0.0
    for step in program.steps:
        if isinstance(step, MatrixStep):
            state = apply_unitary(state, step.matrix)
            continue
        eo = step.eo if delta is None else step.eo.replace(delta=delta)
        state = StateVector(
            eo_propagator(eo, t0=t0 if sf_phase_continuity else 0.0)
            @ state.amplitudes)
        if sf_phase_continuity:
            t0 += TWO_PI * eo.tau
    return state


def program_unitary(program: Program, delta: float | None = None,
                    sf_phase_continuity: bool = False) -> np.ndarray:
    """The full 4x4 matrix of the program (product of step propagators)."""
    u = np.eye(4, dtype=complex)
    t0 = 0.0
    for step in program.steps:
        if isinstance(step, MatrixStep):
            u = step.matrix @ u
            continue
        eo = step.eo if delta is None else step.eo.replace(delta=delta)
        u = eo_propagator(eo, t0=t0 if sf_phase_continuity else 0.0) @ u
        if sf_phase_continuity:
            t0 += TWO_PI * eo.tau
    return u


def with_duration_offset(program: Program, label: str, offset: float) -> Program:
    """Copy of the program with `offset` added to tau of every EO named `label`."""
    steps = []
    hits = 0
    for step in program.steps:
        if isinstance(step, EOStep) and step.eo.label == label:
            steps.append(EOStep(step.eo.replace(tau=step.eo.tau + offset)))
            hits += 1
        else:
            steps.append(step)
    if hits == 0:
        raise ConfigurationError(f"no EO labeled {label!r} in program {program.name}")
    return replace(program, steps=tuple(steps),
                   name=f"{program.name}(d{label}={offset:+g})")


def parse_program_text(text: str, style=IDEAL, k: int = 1,
                       machine: MachineConfig = DEFAULT_MACHINE,
                       gamma: RationalGamma = DEFAULT_GAMMA,
                       delta: float = PULSE_DELTA,
                       name: str = "custom") -> Program:
    """Parse the one-EO-per-line program format.

    Lines (blank lines and #-comments allowed):
        input <00|10|01|11|singlet>
        gate <name>                         # realized in `style`
        pulse <spin> <angle> <axis> <mode> <k>   # angle in radians
        diagonal <tau_over_2pi>             # machine-field z evolution
    """
    style = _coerce_style(style, k)
    steps = []
    input_spec = "00"
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        kind, args = tokens[0].lower(), tokens[1:]
        try:
            if kind == "input":
                input_spec = args[0]
                prepare_input(input_spec)
            elif kind == "gate":
                steps.append(_gate_step(args[0], style, machine, gamma, delta))
            elif kind == "pulse":
                spin, angle = int(args[0]), float(args[1])
                axis, mode, kk = args[2], args[3], int(args[4])
                _, eo = design_pulse(spin, angle, axis, gamma=gamma, k=kk,
                                     mode=mode, machine=machine, delta=delta)
                steps.append(EOStep(eo))
            elif kind == "diagonal":
                tau = float(args[0])
                eo = ideal_eo_params("Ip", machine).replace(
                    label=f"diagonal({tau:g})", tau=tau)
                steps.append(EOStep(eo))
            else:
                raise ConfigurationError(f"unknown directive {kind!r}")
        except (IndexError, ValueError) as exc:
            raise ConfigurationError(f"line {ln}: cannot parse {raw!r}: {exc}") from exc
    return Program(name=name, steps=tuple(steps), input_spec=input_spec)
