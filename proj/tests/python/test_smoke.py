"""Smoke tests for the python bindings."""

import numpy as np
import pytest

import offdiag as od


def test_family_normalization_phase():
    rho = od.make_density(np.diag([0.5, 0.3, 0.2]).astype(complex))
    family = od.generate_family(rho)
    result = od.gamma_mixed(family.shift.conj().T, list(family.members))
    assert abs(result.raw_trace - 1.0) < 1e-10
    assert result.determinate
    assert abs(result.phase_factor - 1.0) < 1e-10


def test_qubit_traces_match_numpy():
    eta, alpha, lam1 = 0.8, 0.3, 0.7
    point = od.qubit_traces(eta, alpha, lam1)
    lam2 = 1.0 - lam1
    t1 = eta * (lam1 * np.exp(1j * alpha) + lam2 * np.exp(-1j * alpha))
    t12 = 2 * eta**2 * np.sqrt(lam1 * lam2) * np.cos(2 * alpha) - 1 + eta**2
    assert abs(point.t1 - t1) < 1e-14
    assert abs(point.t12 - t12) < 1e-14

    u = od.su2_unitary(eta, alpha, 0.9)
    rho = np.diag([lam1, lam2]).astype(complex)
    assert abs(np.trace(u @ rho) - point.t1) < 1e-13


def test_hermitian_eig_numpy_interop():
    rng = np.random.default_rng(12)
    g = rng.normal(size=(5, 5)) + 1j * rng.normal(size=(5, 5))
    h = (g + g.conj().T) / 2
    eig = od.hermitian_eig(h)
    rebuilt = eig.eigenvectors @ np.diag(eig.eigenvalues) @ eig.eigenvectors.conj().T
    assert np.max(np.abs(rebuilt - h)) < 1e-12
    assert np.all(np.diff(eig.eigenvalues) >= 0)


def test_two_photon_gamma2_closed_form():
    r, beta, theta = 0.5, 0.7, 0.4
    state = od.purify(od.make_ensemble(r))
    scan = od.run_fringe(state, od.recipe(od.RecipeTarget.gamma2, beta, theta), 64)
    expected = np.sqrt(1 - r * r) * np.cos(beta) ** 2 - np.sin(beta) ** 2
    assert abs(scan.fourier - expected) < 1e-9
    assert scan.extracted_arg is not None


def test_indeterminate_phase_and_errors():
    result = od.phi(1e-12 + 0j, 1e-9)
    assert not result.determinate

    with pytest.raises(od.OffdiagError):
        od.make_density(np.diag([0.7, 0.4]).astype(complex))

    with pytest.raises(od.OffdiagError):
        od.qubit_traces(1.5, 0.0, 0.5)


def test_transport_defect_of_rotation_path():
    path = od.transport_path(
        lambda s: np.array([[0, 0.8], [0.8, 0]], dtype=complex),
        np.eye(2, dtype=complex),
        1.0,
        512,
    )
    assert od.transport_defect(path, np.eye(2, dtype=complex)) < 1e-4
    assert np.max(np.abs(path.final_unitary - od.rotation_unitary(0.8, 0.0))) < 1e-10
