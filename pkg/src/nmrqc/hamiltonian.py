"""The spin Hamiltonian and its per-operation parameterization.

The register evolves under

    H(t) = -J S1z S2z - sum_j,a  h_j^a S_j^a
           - (hx1~ S1x + hx2~ S2x) sin(w t + phi_x)
           - (hy1~ S1y + hy2~ S2y) sin(w t + phi_y)

with hbar = 1 and all fields measured in units of the spin-1 static
z-field.  A program is a sequence of elementary operations (EOs); within
one EO every parameter is constant.  Durations and integrator steps are
stored divided by 2*pi so the benchmark parameter values transcribe
verbatim; time arguments of hamiltonian_at are plain (radian) time.
"""
from __future__ import annotations

import dataclasses
from dataclasses import dataclass

import numpy as np

from .errors import MachineValidationError
from .operators import S1X, S1Y, S1Z, S2X, S2Y, S2Z, SZZ


@dataclass(frozen=True)
class MachineConfig:
    """Fixed hardware parameters: coupling and static z-fields.

    Defaults model the two nuclear spins of carbon-13 labeled chloroform,
    rescaled by the spin-1 resonance frequency.
    """

    coupling: float = -0.43e-6
    h1z: float = 1.0
    h2z: float = 0.25

    @property
    def gamma(self) -> float:
        """Gyromagnetic ratio of spin 2 relative to spin 1."""
        return self.h2z / self.h1z

    def to_dict(self) -> dict:
        return {"coupling": self.coupling, "h1z": self.h1z, "h2z": self.h2z}

    @classmethod
    def from_dict(cls, d: dict) -> "MachineConfig":
        return cls(**d)


DEFAULT_MACHINE = MachineConfig()


@dataclass(frozen=True)
class EOParams:
    """All Hamiltonian parameters of one elementary operation.

    tau and delta are durations over 2*pi.  sf* are the sinusoidal-field
    amplitudes; omega and phi_x/phi_y their frequency and phases.  The
    instance is frozen (hashable), which lets propagators be cached.
    """

    label: str = "eo"
    tau: float = 0.0
    j: float = 0.0
    h1x: float = 0.0
    h1y: float = 0.0
    h1z: float = 0.0
    h2x: float = 0.0
    h2y: float = 0.0
    h2z: float = 0.0
    sf1x: float = 0.0
    sf1y: float = 0.0
    sf2x: float = 0.0
    sf2y: float = 0.0
    omega: float = 0.0
    phi_x: float = 0.0
    phi_y: float = 0.0
    delta: float = 0.01

    @property
    def is_diagonal(self) -> bool:
        """True when only S^z terms are present (exactly solvable)."""
        return not any((self.h1x, self.h1y, self.h2x, self.h2y,
                        self.sf1x, self.sf1y, self.sf2x, self.sf2y))

    def replace(self, **kw) -> "EOParams":
        return dataclasses.replace(self, **kw)

    def to_dict(self) -> dict:
        return dataclasses.asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "EOParams":
        return cls(**d)


def diagonal_energies(j: float, h1z: float, h2z: float) -> np.ndarray:
    """Eigenvalues of the diagonal part, ordered |00>, |10>, |01>, |11>.

    E(b1, b2) = -j s1 s2 - h1z s1 - h2z s2 with s = +1/2 for bit 0.
    """
    out = np.empty(4)
    for idx in range(4):
        s1 = 0.5 if (idx & 1) == 0 else -0.5
        s2 = 0.5 if (idx >> 1) == 0 else -0.5
        out[idx] = -j * s1 * s2 - h1z * s1 - h2z * s2
    return out


def hamiltonian_at(eo: EOParams, t: float) -> np.ndarray:
    """The 4x4 Hamiltonian matrix of an EO at (radian) time t."""
    sx = np.sin(eo.omega * t + eo.phi_x)
    sy = np.sin(eo.omega * t + eo.phi_y)
    h = (-eo.j * SZZ
         - eo.h1z * S1Z - eo.h2z * S2Z
         - (eo.h1x + eo.sf1x * sx) * S1X - (eo.h1y + eo.sf1y * sy) * S1Y
         - (eo.h2x + eo.sf2x * sx) * S2X - (eo.h2y + eo.sf2y * sy) * S2Y)
    return h


def machine_violations(eo: EOParams, machine: MachineConfig,
                       rel_tol: float = 1e-9) -> list[str]:
    """Check the single-gamma proportionality of all spin-2 fields.

    Physically both spins see the same applied fields scaled by the fixed
    ratio gamma, so h2^a = gamma h1^a and likewise for the sinusoidal
    amplitudes.  Returns a list of violation messages (empty = pass).
    """
    gamma = machine.gamma
    problems = []
    if not 0.0 < gamma < 1.0:
        problems.append(f"gamma {gamma!r} outside (0, 1)")
    pairs = [("h_x", eo.h1x, eo.h2x), ("h_y", eo.h1y, eo.h2y),
             ("h_z", eo.h1z, eo.h2z),
             ("sf_x", eo.sf1x, eo.sf2x), ("sf_y", eo.sf1y, eo.sf2y)]
    for name, f1, f2 in pairs:
        want = gamma * f1
        scale = max(abs(f1), abs(f2), 1e-30)
        if abs(f2 - want) > rel_tol * scale:
            problems.append(
                f"{name}: spin-2 value {f2!r} is not gamma*spin-1 ({want!r})")
    return problems


def validate_machine(eo: EOParams, machine: MachineConfig) -> list[str]:
    """Raise MachineValidationError if the EO violates the gamma constraint."""
    problems = machine_violations(eo, machine)
    if problems:
        raise MachineValidationError(problems)
    return problems
