"""Two-qubit NMR-style quantum computer emulator.

The package integrates the time-dependent spin Hamiltonian of a
two-qubit register, designs the sinusoidal-field pulses that realize
single-spin rotations on such hardware, assembles gate-sequence
programs (controlled-NOT constructions, repeated-gate tests, a
four-item database search), and reproduces the benchmark result tables
showing that logically identical pulse sequences can compute different
answers on physical hardware.
"""

from .errors import (ConfigurationError, MachineValidationError, MethodError,
                     NumericalIntegrityError)
from .hamiltonian import (DEFAULT_MACHINE, EOParams, MachineConfig,
                          hamiltonian_at, machine_violations, validate_machine)
from .states import (QubitExpectation, StateVector, apply_unitary,
                     expectation_qubit, prepare_basis_state, prepare_singlet,
                     qubit_values)
from .integrator import (DENSE_MIDPOINT_ORACLE, EXACT_DIAGONAL, PRODUCT_FORMULA,
                         IntegratorConfig, convergence_report, eo_propagator,
                         evolve, evolve_reference)
from .gates import (GATE_NAMES, IdealGate, PrimedAngles, compose,
                    coupling_pi_duration, derive_primed_angles, ideal_eo_params,
                    ideal_gate, phase_gate)
from .pulses import (DEFAULT_GAMMA, ROTATING, STATIC_AXIS, CommensurabilityReport,
                     PulseDesign, RationalGamma, commensurability_check_n,
                     commensurability_margin, design_pulse, hypothetical_durations,
                     spectator_excess_angle, spectator_residual)
from .programs import (IDEAL, ROTATING_SF, STATIC_SF, STYLES, EOStep,
                       GateImplStyle, MatrixStep, Program, build_cnot,
                       build_grover, build_qa, grover_sequence, parse_program_text,
                       prepare_input, program_unitary, run_program,
                       with_duration_offset)
from .harness import (ExperimentSpec, ResultTable, canned_names, canned_spec,
                      emit_table, perturb_duration_study, round2, run_experiment,
                      verify_suite)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
