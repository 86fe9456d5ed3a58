"""Closed-form levels, eigenfunctions, and spectrum reports."""

import math

import pytest

from sphere_twobody import (
    PhysicalParams,
    ValidationError,
    branch_residuals,
    closed_form_energy,
    coulomb_energy,
    oscillator_energy,
    radial_coefficients,
    radial_eigenfunction,
    spectrum,
    weyl_dim,
)

UNIT = {n: PhysicalParams(n, 2.0, 2.0, 1.0, 1.0) for n in (2, 3, 4, 5)}


def test_coulomb_free_series_n3():
    # a = b = c = 0, reduced mass = radius = coupling = 1:
    # E_k = (k^2 - 1)/2 - 1/(2 k^2)
    co = radial_coefficients(3, 1, 0)
    for k in (1, 2, 3, 5):
        want = (k * k - 1) / 2.0 - 1.0 / (2.0 * k * k)
        assert coulomb_energy(UNIT[3], co, k) == pytest.approx(want, abs=1e-14)


def test_oscillator_ground_state_n2():
    co = radial_coefficients(2, 1)
    want = 0.5 + math.sqrt(5.0) / 2.0
    assert oscillator_energy(UNIT[2], co, 0) == pytest.approx(want, abs=1e-14)


def test_oscillator_integer_level_unequal_masses():
    # n = 3, case 1, m_k = 1 with masses 1 and 3 lands exactly on 7
    p = PhysicalParams(3, 1.0, 3.0, 1.0, 1.0)
    co = radial_coefficients(3, 1, 1)
    assert oscillator_energy(p, co, 0) == pytest.approx(7.0, abs=1e-12)


def test_oscillator_spacing_strictly_increasing():
    co = radial_coefficients(4, 1, 2)
    E = [oscillator_energy(UNIT[4], co, k) for k in range(8)]
    gaps = [b - a for a, b in zip(E, E[1:])]
    assert all(g2 > g1 for g1, g2 in zip(gaps, gaps[1:]))


def test_oscillator_flat_space_limit():
    # R -> oo with a = 0: E_k -> (omega / (2 sqrt(m))) (4k + 2 + n - 2),
    # with corrections in even powers of 1/R; one Richardson step removes
    # the 1/R^2 term.
    n, w = 5, 0.9
    co = radial_coefficients(n, 1, 0)
    m = 0.5  # equal masses 1.0
    for k in (0, 1, 3):
        E1 = oscillator_energy(PhysicalParams(n, 1.0, 1.0, 100.0, w), co, k)
        E2 = oscillator_energy(PhysicalParams(n, 1.0, 1.0, 200.0, w), co, k)
        extrap = (4.0 * E2 - E1) / 3.0
        want = (w / (2.0 * math.sqrt(m))) * (4 * k + 2 + n - 2)
        assert extrap == pytest.approx(want, rel=1e-8)


@pytest.mark.parametrize("kind,k0", [("coulomb", 1), ("oscillator", 0)])
def test_branch_residuals_vanish_on_levels(kind, k0):
    for n in (2, 3, 5):
        mk = None if n == 2 else 2
        co = radial_coefficients(n, 1, mk)
        for k in (k0, k0 + 2):
            res = branch_residuals(kind, UNIT[n], co, k)
            assert max(res.values()) < 1e-9, res


def test_branch_residuals_detect_off_eigenvalue_energy():
    co = radial_coefficients(3, 1, 1)
    E = closed_form_energy("oscillator", UNIT[3], co, 1)
    res = branch_residuals("oscillator", UNIT[3], co, 1, energy=E + 0.05)
    assert res["stated_branch"] > 1e-3


@pytest.mark.parametrize("kind,k0", [("coulomb", 1), ("oscillator", 0)])
def test_eigenfunction_ode_residual(kind, k0):
    pts = (0.2, 0.45, 0.7, 0.9) if kind == "oscillator" else (0.3, 0.8, 1.7, 4.0)
    for n, mk in ((2, None), (4, 2)):
        co = radial_coefficients(n, 1, mk)
        for k in (k0, k0 + 1, k0 + 2):
            fn = radial_eigenfunction(kind, UNIT[n], co, k)
            for r in pts:
                assert fn.ode_residual(r) < 1e-9


@pytest.mark.parametrize("kind,k0", [("coulomb", 1), ("oscillator", 0)])
def test_eigenfunction_dual_evaluation(kind, k0):
    r = 0.6 if kind == "oscillator" else 1.4
    co = radial_coefficients(5, 4, 2)
    for k in (k0, k0 + 2):
        fn = radial_eigenfunction(kind, UNIT[5], co, k)
        direct = fn(r)
        via = fn.hypergeometric_value(r)
        assert abs(direct - via) <= 1e-10 * max(1.0, abs(direct))


def test_jet_matches_value_and_finite_differences():
    co = radial_coefficients(3, 1, 1)
    fn = radial_eigenfunction("oscillator", UNIT[3], co, 2)
    r, h = 0.55, 1e-6
    f, df, d2f = fn.jet(r)
    assert f == pytest.approx(fn(r), rel=1e-12)
    fd1 = (fn(r + h) - fn(r - h)) / (2 * h)
    assert df == pytest.approx(fd1, rel=1e-8)


def test_coulomb_first_level_prefactor_only():
    # k = 1: the terminating sum has a single term, so f divided by the
    # prefactor is the same constant at every radius
    co = radial_coefficients(4, 1, 1)
    fn = radial_eigenfunction("coulomb", UNIT[4], co, 1)
    A, u, alpha, beta, gam, rho0, rho_i = fn._data

    def pre(r):
        return r ** rho0 * (r - 1j) ** rho_i * (r + 1j) ** (-(2.0 * rho0 + rho_i))

    vals = [fn(r) / pre(r) for r in (0.4, 1.1, 2.7)]
    assert vals[0] == pytest.approx(vals[1], rel=1e-12)
    assert vals[1] == pytest.approx(vals[2], rel=1e-12)


def test_oscillator_values_real_up_to_phase():
    co = radial_coefficients(2, 5)
    fn = radial_eigenfunction("oscillator", UNIT[2], co, 2)
    base = fn(0.37)
    for r in (0.2, 0.52, 0.81):
        ratio = fn(r) / base
        assert abs(ratio.imag) < 1e-12 * max(1.0, abs(ratio))


def test_coulomb_complex_parameters_cancel_on_level():
    # the 2F1 data are genuinely complex (coupling enters as i m R g), yet
    # on a level the value is real up to a constant global phase
    co = radial_coefficients(3, 1, 1)
    fn = radial_eigenfunction("coulomb", UNIT[3], co, 2)
    A, u, alpha, beta, gam, rho0, rho_i = fn._data
    assert abs(u.imag) > 0.1
    assert abs(rho_i.imag) > 0.1
    base = fn(0.9)
    for r in (0.3, 1.3, 3.2):
        ratio = fn(r) / base
        assert abs(ratio.imag) < 1e-10 * max(1.0, abs(ratio))


def test_norm_squared_quadrature_stable():
    for kind, k in (("coulomb", 2), ("oscillator", 1)):
        co = radial_coefficients(3, 1, 1)
        fn = radial_eigenfunction(kind, UNIT[3], co, k)
        lo, hi = fn.norm_squared(nodes=240), fn.norm_squared(nodes=480)
        assert lo > 0
        assert abs(hi - lo) <= 1e-8 * abs(lo)


def test_spectrum_report_multiplicities_and_checks():
    co = radial_coefficients(5, 4, 2)
    rep = spectrum("oscillator", UNIT[5], co, 0, 3)
    assert not rep.numeric_only
    assert [lv.k for lv in rep.levels] == [0, 1, 2, 3]
    mult = weyl_dim(co.carrier.algebra, co.carrier)
    assert all(lv.multiplicity == mult for lv in rep.levels)
    assert all(lv.branch_check for lv in rep.levels)
    doc = rep.to_dict()
    assert doc["kind"] == "oscillator"
    assert doc["case"] == 4
    assert doc["mk"] == 2
    assert doc["numeric_only"] is False
    assert [lv["k"] for lv in doc["levels"]] == [0, 1, 2, 3]
    assert all(lv["verified"] is True for lv in doc["levels"])


def test_spectrum_asymmetric_is_numeric_only():
    co = radial_coefficients(4, 2, 2)
    rep = spectrum("coulomb", UNIT[4], co, 1, 3)
    assert rep.numeric_only
    assert rep.levels == ()
    assert rep.to_dict()["levels"] == []


def test_level_index_validation():
    co = radial_coefficients(3, 1, 0)
    with pytest.raises(ValidationError):
        coulomb_energy(UNIT[3], co, 0)
    with pytest.raises(ValidationError):
        oscillator_energy(UNIT[3], co, -1)
    with pytest.raises(ValidationError):
        closed_form_energy("coulomb", UNIT[3], co, 1.5)
    with pytest.raises(ValidationError):
        spectrum("coulomb", UNIT[3], co, 3, 1)


def test_closed_form_requires_symmetric_coefficients():
    asym = radial_coefficients(3, 2, 1)
    with pytest.raises(ValidationError):
        coulomb_energy(UNIT[3], asym, 1)
    with pytest.raises(ValidationError):
        radial_eigenfunction("oscillator", UNIT[3], asym, 0)
    with pytest.raises(ValidationError):
        branch_residuals("coulomb", UNIT[3], asym, 1)


def test_equal_mass_cases_reject_unequal_masses():
    asym_masses = PhysicalParams(3, 1.0, 2.0, 1.0, 1.0)
    co = radial_coefficients(3, 4, 2)  # equal-mass-only eigenvector
    with pytest.raises(ValidationError):
        spectrum("oscillator", asym_masses, co, 0, 2)
