"""Binding smoke tests: library results surfaced through the python module."""

import math

import numpy as np
import pytest

import negabound as nb


def test_negativity_golden_values():
    assert nb.negativity_exact(nb.make_bell_like(0.5)) == pytest.approx(0.5, abs=1e-12)
    assert nb.negativity_exact(nb.make_noisy(0.5, 2.0 / 3.0)) == pytest.approx(0.25, abs=1e-10)
    assert nb.negativity_exact(nb.make_four_qubit([0.4, 0.1, 0.4, 0.1])) == pytest.approx(
        1.3, abs=1e-10
    )
    for n in (2, 4, 6):
        assert nb.negativity_exact(nb.make_max_entangled(n)) == pytest.approx(
            (n - 1) / 2, abs=1e-10
        )


def test_schmidt_decomposition_round_trip():
    psi = nb.make_bell_like(0.3)
    sd = nb.schmidt(psi)
    coeffs = np.asarray(sd.coefficients)
    assert coeffs.shape == (2,)
    assert coeffs[0] == pytest.approx(math.sqrt(0.7), abs=1e-12)
    assert coeffs[1] == pytest.approx(math.sqrt(0.3), abs=1e-12)
    assert np.max(np.abs(np.asarray(sd.reconstruct()) - np.asarray(psi.amplitudes))) < 1e-12
    assert nb.negativity_pure(sd) == pytest.approx(math.sqrt(0.21), abs=1e-12)


def test_numpy_interop():
    rho = np.asarray(nb.make_noisy(0.4, 0.9).rho)
    assert rho.shape == (4, 4)
    assert rho.trace() == pytest.approx(1.0, abs=1e-12)
    idx = nb.BipartiteIndex(2, 2)
    rebuilt = nb.BipartiteState.make(idx, rho)
    assert nb.negativity_exact(rebuilt) == pytest.approx(
        nb.negativity_exact(nb.make_noisy(0.4, 0.9)), abs=1e-12
    )
    pt = np.asarray(nb.partial_transpose(rho, idx))
    assert pt[1, 2] == rho[0, 3]


def test_conditions_and_bounds():
    rho = nb.make_bell_like(0.5).density()
    report = nb.kappa_first(rho, nb.sigma_minus_pair())
    assert report.condition == nb.Condition.first
    assert report.kappa == pytest.approx(0.25, abs=1e-12)
    assert report.consistent()
    assert report.a_diag == pytest.approx(0.0, abs=1e-12)

    cert = nb.bound_first_qubit(report.kappa)
    assert cert.applicable
    assert cert.lower_bound == pytest.approx(0.5 * (math.sqrt(2) - 1), abs=1e-12)
    assert cert.inputs["kappa"] == pytest.approx(0.25)

    zero_x = nb.bound_second_zero_x(report.kappa, 1.0)
    assert zero_x.lower_bound == pytest.approx(math.sqrt(5) - 2, abs=1e-12)

    off = nb.bound_first_qubit(-0.1)
    assert not off.applicable
    assert off.lower_bound == 0.0

    with pytest.raises(ValueError):
        nb.bound_second_method(0.25, -1.0, 1.0)


def test_certificate_equality_and_repr():
    a = nb.bound_first_qubit(0.25)
    b = nb.bound_first_qubit(0.25)
    assert a == b
    assert "first_qubit" in repr(a)


def test_search_is_deterministic_and_sound():
    rho = nb.make_bell_like(0.3).density()
    config = nb.SearchConfig()
    config.method = nb.BoundMethod.first_qubit
    config.restarts = 4
    config.seed = 9

    result = nb.optimize(rho, config)
    again = nb.optimize(rho, config)
    assert result.best_certificate == again.best_certificate
    assert list(result.restart_best) == list(again.restart_best)

    canonical = nb.evaluate_bound(rho, nb.sigma_minus_pair(), nb.BoundMethod.first_qubit)
    assert result.best_certificate.lower_bound >= canonical.lower_bound - 1e-12
    assert result.best_certificate.lower_bound <= nb.negativity_exact(rho) + 1e-9


def test_spin_boson_model():
    model = nb.DickeModel.make(0.5, 2, 1.0, 0.2)
    initial = nb.spin_field_basis_state(model, 1, 0)
    t = 3.7
    evolved = nb.evolve(model, initial, t)
    amp = np.asarray(evolved.amplitudes)
    pop = abs(amp[1 * model.field_dim() + 0]) ** 2
    assert pop == pytest.approx(math.cos(model.g * t) ** 2, abs=1e-9)

    big = nb.DickeModel.make(4.0, 4)
    c = 1 / math.sqrt(2)
    report = nb.schmidt_vector_check(big, c, c, 0, 4, 1.37)
    assert len(report.entries) == 3
    assert all(e.status != nb.SchmidtVectorStatus.failed for e in report.entries)

    result = nb.dicke_schmidt_bound(big, c, c, 0, 4, 1.37)
    if result.certificate.applicable:
        assert result.certificate.lower_bound <= nb.negativity_exact(result.check.evolved) + 1e-9


def test_verify_suite_hook():
    names = nb.suite_names()
    assert "golden" in names
    result = nb.run_suite("golden")
    assert result.passed()
    assert result.checks > 0
