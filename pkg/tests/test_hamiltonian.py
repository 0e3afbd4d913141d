import numpy as np
import pytest

from nmrqc import (DEFAULT_MACHINE, EOParams, MachineConfig,
                   MachineValidationError, hamiltonian_at, machine_violations,
                   validate_machine)
from nmrqc.hamiltonian import diagonal_energies

J = -0.43e-6


def test_default_machine_values():
    m = MachineConfig()
    assert m.coupling == pytest.approx(-0.43e-6)
    assert m.h1z == 1.0 and m.h2z == 0.25
    assert m.gamma == pytest.approx(0.25)


def test_ising_only_diagonal():
    eo = EOParams(label="ising", j=J)
    h = hamiltonian_at(eo, 0.3)
    want = np.diag([-J / 4, J / 4, J / 4, -J / 4])
    assert np.allclose(h, want, atol=1e-18)


def test_equal_z_fields_diagonal():
    # equal compensating field h on both spins gives the four phases of
    # the equal-field Ising construction: -J/4 - h, J/4, J/4, -J/4 + h
    hval = 0.37
    eo = EOParams(j=J, h1z=hval, h2z=hval)
    h = hamiltonian_at(eo, 0.0)
    want = np.diag([-J / 4 - hval, J / 4, J / 4, -J / 4 + hval])
    assert np.allclose(h, want, atol=1e-15)


def test_transverse_term_vanishes_at_zero_phase():
    eo = EOParams(sf1y=0.0625, omega=1.0, phi_y=0.0)
    h = hamiltonian_at(eo, 0.0)  # sin(0) = 0
    assert np.allclose(h, 0.0)


def test_hermitian_for_random_parameters():
    rng = np.random.default_rng(3)
    for _ in range(30):
        vals = rng.normal(size=13)
        eo = EOParams(j=vals[0], h1x=vals[1], h1y=vals[2], h1z=vals[3],
                      h2x=vals[4], h2y=vals[5], h2z=vals[6], sf1x=vals[7],
                      sf1y=vals[8], sf2x=vals[9], sf2y=vals[10],
                      omega=abs(vals[11]), phi_x=vals[12])
        h = hamiltonian_at(eo, rng.uniform(0, 50))
        assert np.max(np.abs(h - h.conj().T)) < 1e-14


def test_time_independent_without_sf():
    eo = EOParams(j=J, h1x=0.3, h2y=0.1, h1z=1.0, h2z=0.25)
    assert np.array_equal(hamiltonian_at(eo, 0.0), hamiltonian_at(eo, 17.3))


def test_linearity_in_each_field():
    # doubling a field parameter doubles its contribution
    base = EOParams()
    for name in ("h1x", "h2z", "sf2y"):
        one = EOParams(**{name: 1.0}, omega=0.7, phi_y=0.4, phi_x=0.4)
        two = EOParams(**{name: 2.0}, omega=0.7, phi_y=0.4, phi_x=0.4)
        t = 1.23
        h0 = hamiltonian_at(base.replace(omega=0.7, phi_x=0.4, phi_y=0.4), t)
        assert np.allclose(hamiltonian_at(two, t) - h0,
                           2 * (hamiltonian_at(one, t) - h0), atol=1e-15)


def test_diagonal_energy_ordering():
    e = diagonal_energies(J, 1.0, 0.25)
    assert e[0] == pytest.approx(-J / 4 - 0.625)
    assert e[1] == pytest.approx(J / 4 + 0.375)
    assert e[2] == pytest.approx(J / 4 - 0.375)
    assert e[3] == pytest.approx(-J / 4 + 0.625)


def test_validate_machine_passes_for_consistent_pulse():
    eo = EOParams(j=J, h1z=1.0, h2z=0.25,
                  sf1x=-0.03125, sf1y=-0.03125,
                  sf2x=-0.0078125, sf2y=-0.0078125,
                  omega=1.0, phi_x=-np.pi / 2)
    assert validate_machine(eo, DEFAULT_MACHINE) == []


def test_validate_machine_flags_bad_ratio():
    eo = EOParams(j=J, h1z=1.0, h2z=0.25, sf1x=0.03125, sf2x=0.03125)
    problems = machine_violations(eo, DEFAULT_MACHINE)
    assert any("sf_x" in p for p in problems)
    with pytest.raises(MachineValidationError):
        validate_machine(eo, DEFAULT_MACHINE)


def test_validate_machine_flags_gamma_out_of_range():
    machine = MachineConfig(coupling=J, h1z=1.0, h2z=1.5)
    eo = EOParams(j=J, h1z=1.0, h2z=1.5)
    problems = machine_violations(eo, machine)
    assert any("gamma" in p for p in problems)


def test_eoparams_json_round_trip():
    eo = EOParams(label="pulse", tau=8.0, j=J, h1z=1.0, h2z=0.25,
                  sf1x=0.03125, sf1y=0.03125, sf2x=0.0078125, sf2y=0.0078125,
                  omega=1.0, phi_x=0.0, phi_y=np.pi / 2, delta=0.01)
    assert EOParams.from_dict(eo.to_dict()) == eo


def test_is_diagonal_flag():
    assert EOParams(j=J, h1z=1.0, h2z=0.25).is_diagonal
    assert not EOParams(sf1x=0.1).is_diagonal
    assert not EOParams(h2y=0.1).is_diagonal
