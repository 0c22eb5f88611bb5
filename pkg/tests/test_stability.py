"""Tests for the equilibrium classification and the Jacobian checks."""

import numpy as np
import pytest
from numpy.testing import assert_allclose

from src.algorithms import (
    StabilityClass,
    boundary_flow,
    classify_equilibrium,
    eigen_full_at_equilibrium,
    equilibrium_scan,
    jacobian_fd_check,
    probe_equilibrium,
    threshold_sigma,
)
from src.exceptions import DomainError, InvalidParamsError
from src.models import ModelId, Params, jacobian3, jacobian3_printed


def interior_points(count, seed=11):
    rng = np.random.default_rng(seed)
    return rng.dirichlet(np.ones(3), size=count)


class TestThreshold:
    @pytest.mark.parametrize('rates, expected', [((0.4, 0.8), 1.0 / 3.0), ((0.1, 0.9), 0.1), ((0.6, 0.6), 0.5)])
    def test_sigma(self, rates, expected):
        assert threshold_sigma(Params(*rates)) == pytest.approx(expected, abs=1e-15)

    def test_sigma_ignores_mu(self):
        assert threshold_sigma(Params(0.4, 0.8, 3.0)) == threshold_sigma(Params(0.4, 0.8, 1.0))


class TestClassification:
    def test_stable_below_sigma(self, fig2_params):
        assert classify_equilibrium(fig2_params, 0.05).stability_class is StabilityClass.STABLE

    def test_marginal_at_sigma(self):
        p = Params(0.5, 0.5)
        report = classify_equilibrium(p, 0.5)
        assert report.stability_class is StabilityClass.MARGINAL
        assert report.tau == 0.0

    def test_unstable_example(self, demo_params):
        report = classify_equilibrium(demo_params, 0.5)
        assert report.stability_class is StabilityClass.UNSTABLE
        assert report.tau == pytest.approx(0.2, abs=1e-12)
        assert report.eigen_planar[0] == 0.0

    def test_outside_unit_interval(self, demo_params):
        with pytest.raises(DomainError):
            classify_equilibrium(demo_params, 1.5)
        with pytest.raises(DomainError):
            eigen_full_at_equilibrium(demo_params, -0.1)

    def test_only_three_classes(self):
        assert {c.value for c in StabilityClass} == {'Stable', 'Unstable', 'Marginal'}

    def test_sign_equivalence(self):
        rng = np.random.default_rng(5)
        for rho1, rho2, mu in rng.uniform(0.05, 1.0, size=(50, 3)):
            p = Params(rho1, rho2, mu)
            for i in rng.uniform(0.0, 1.0, size=10):
                if abs(i - p.sigma) < 1e-9:
                    continue
                report = classify_equilibrium(p, i)
                expected = StabilityClass.STABLE if i < p.sigma else StabilityClass.UNSTABLE
                assert report.stability_class is expected


class TestScan:
    def test_eleven_points(self, demo_params):
        reports = equilibrium_scan(demo_params, 11)
        classes = [r.stability_class for r in reports]
        assert classes[:4] == [StabilityClass.STABLE] * 4
        assert classes[4:] == [StabilityClass.UNSTABLE] * 7

    def test_two_points(self):
        for p in (Params(0.1, 0.9), Params(0.9, 0.1, 2.0)):
            first, last = equilibrium_scan(p, 2)
            assert first.stability_class is StabilityClass.STABLE
            assert last.stability_class is StabilityClass.UNSTABLE

    def test_tau_strictly_increasing_and_single_flip(self, fig2_params):
        reports = equilibrium_scan(fig2_params, 101)
        taus = [r.tau for r in reports]
        assert np.all(np.diff(taus) > 0)
        classes = [r.stability_class for r in reports if r.stability_class is not StabilityClass.MARGINAL]
        flips = sum(1 for a, b in zip(classes, classes[1:]) if a is not b)
        assert flips == 1

    def test_mu_scales_tau_only(self, demo_params):
        base = equilibrium_scan(demo_params, 11)
        scaled = equilibrium_scan(demo_params.with_mu(2.5), 11)
        for a, b in zip(base, scaled):
            assert b.tau == pytest.approx(2.5 * a.tau, abs=1e-15)
            assert a.stability_class is b.stability_class

    def test_rejects_short_scan(self, demo_params):
        with pytest.raises(InvalidParamsError):
            equilibrium_scan(demo_params, 1)


class TestSpectrum:
    def test_example(self, fig2_params):
        assert eigen_full_at_equilibrium(fig2_params, 0.5) == pytest.approx((0.0, 0.0, 0.32), abs=1e-12)

    def test_zero_at_sigma(self, fig2_params):
        assert eigen_full_at_equilibrium(fig2_params, fig2_params.sigma) == pytest.approx((0.0, 0.0, 0.0), abs=1e-15)

    @pytest.mark.parametrize('i_star', [0.0, 0.05, 0.3, 0.5, 0.9, 1.0])
    def test_matches_numerical_spectrum(self, fig2_params, i_star):
        numerical = np.sort(np.linalg.eigvals(jacobian3(fig2_params, (i_star, 0.0, 1.0 - i_star))).real)
        closed_form = np.sort(eigen_full_at_equilibrium(fig2_params, i_star))
        assert_allclose(numerical, closed_form, atol=1e-9)

    def test_full_and_planar_agree(self, demo_params):
        for i in np.linspace(0.0, 1.0, 21):
            report = classify_equilibrium(demo_params, i)
            assert eigen_full_at_equilibrium(demo_params, i)[2] == pytest.approx(report.tau, abs=1e-12)


class TestJacobianCheck:
    def test_full_system_interior(self, fig2_params):
        for triple in interior_points(100):
            assert jacobian_fd_check(ModelId.PIQUEIRA3, fig2_params, triple) <= 1e-6

    def test_planar_interior(self, demo_params):
        for triple in interior_points(100, seed=12):
            assert jacobian_fd_check(ModelId.PIQUEIRA_PLANAR, demo_params, (triple[2], triple[0])) <= 1e-6

    def test_equilibria(self, demo_params):
        for i in (0.0, 0.2, 0.7, 1.0):
            assert jacobian_fd_check(ModelId.PIQUEIRA3, demo_params, (i, 0.0, 1.0 - i)) <= 1e-6
            assert jacobian_fd_check(ModelId.PIQUEIRA_PLANAR, demo_params, (1.0 - i, i)) <= 1e-6

    def test_belen_pearce(self):
        for triple in interior_points(20, seed=13):
            assert jacobian_fd_check(ModelId.BELEN_PEARCE3, None, triple) <= 1e-6
            assert jacobian_fd_check(ModelId.BELEN_PEARCE_PLANAR, None, triple[:2]) <= 1e-6

    def test_detects_perturbed_entry(self, fig2_params):
        point = np.array([0.3, 0.3, 0.4])
        perturbed = jacobian3(fig2_params, point)
        perturbed[1, 2] += 0.1
        assert jacobian_fd_check(ModelId.PIQUEIRA3, fig2_params, point, analytic=perturbed) >= 0.01

    def test_detects_printed_matrix(self, fig2_params):
        point = np.array([0.4, 0.5, 0.1])
        printed = jacobian3_printed(fig2_params, point)
        assert jacobian_fd_check(ModelId.PIQUEIRA3, fig2_params, point, analytic=printed) >= 0.01


class TestDynamics:
    def test_boundary_points_inward(self, demo_params):
        report = boundary_flow(demo_params)
        assert report.inward
        assert report.max_rate_segment == 0.0

    def test_stable_equilibrium_stays_close(self, demo_params):
        assert probe_equilibrium(demo_params, 0.1) <= 0.1

    def test_unstable_equilibrium_escapes(self, demo_params):
        assert probe_equilibrium(demo_params, 0.8) > 0.1
