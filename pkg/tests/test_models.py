"""Tests for rates, states, vector fields and Jacobians."""

import numpy as np
import pytest
from numpy.testing import assert_allclose

from src.exceptions import (
    DomainError,
    InvalidParamsError,
    InvalidStateError,
    ParameterRangeWarning,
    RenormalizationWarning,
)
from src.models import (
    ModelId,
    Params,
    State2,
    State3,
    StopReason,
    Trajectory,
    belen_pearce_field,
    belen_pearce_planar,
    field_for,
    jacobian2,
    jacobian3,
    jacobian3_printed,
    lift,
    piqueira_field,
    planar_field,
    reduce,
)


def random_simplex_points(count, seed=1):
    rng = np.random.default_rng(seed)
    return rng.dirichlet(np.ones(3), size=count)


class TestParams:
    def test_sigma(self):
        assert Params(0.4, 0.8).sigma == pytest.approx(1.0 / 3.0, abs=1e-15)
        assert Params(0.1, 0.9).sigma == pytest.approx(0.1, abs=1e-15)
        assert Params(0.3, 0.3).sigma == 0.5

    @pytest.mark.parametrize('rates', [(0.0, 0.5, 1.0), (0.5, -0.1, 1.0), (0.5, 0.5, 0.0),
                                       (float('nan'), 0.5, 1.0), (0.5, float('inf'), 1.0)])
    def test_rejects_invalid_rates(self, rates):
        with pytest.raises(InvalidParamsError):
            Params(*rates)

    def test_warns_above_one(self):
        with pytest.warns(ParameterRangeWarning):
            Params(1.5, 0.5)

    def test_model_id_parse(self):
        assert ModelId.parse('piqueira-planar') is ModelId.PIQUEIRA_PLANAR
        with pytest.raises(InvalidParamsError):
            ModelId.parse('sir')


class TestStates:
    def test_lift_and_reduce(self):
        x = lift(State2(0.1, 0.4))
        assert (x.i, x.s, x.r) == pytest.approx((0.4, 0.5, 0.1))
        assert reduce(x) == State2(0.1, 0.4)

    def test_lift_outside_omega(self):
        with pytest.raises(DomainError):
            lift(State2(0.6, 0.6))

    def test_reduce_drops_spreaders(self):
        y = reduce(State3(0.84, 0.05, 0.11))
        assert (y.r, y.i) == (0.11, 0.84)

    def test_boundary_roundoff_is_clamped(self):
        x = State3(0.5, -1e-13, 0.5 + 1e-13)
        assert x.s == 0.0

    def test_rejects_off_simplex(self):
        with pytest.raises(DomainError):
            State3(0.5, 0.5, 0.1)
        with pytest.raises(DomainError):
            State3(1.1, -0.1, 0.0)

    def test_rejects_non_finite(self):
        with pytest.raises(InvalidStateError):
            State3(float('nan'), 0.5, 0.5)

    def test_normalized_warns_and_rescales(self):
        with pytest.warns(RenormalizationWarning):
            x = State3.normalized(0.84, 0.05, 0.1)
        assert x.i + x.s + x.r == pytest.approx(1.0, abs=1e-15)
        assert x.i == pytest.approx(0.84 / 0.99)

    def test_reduce_lift_identity(self):
        for triple in random_simplex_points(50):
            y = reduce(State3.from_array(triple))
            assert reduce(lift(y)) == y


class TestVectorFields:
    def test_piqueira_field_example(self, fig2_params):
        assert_allclose(piqueira_field(fig2_params, (0.4, 0.5, 0.1)), [-0.144, 0.12, 0.024], atol=1e-15)
        assert_allclose(piqueira_field(Params(0.4, 0.8), (0.5, 0.25, 0.25)), [-0.1, 0.05, 0.05], atol=1e-15)

    def test_planar_field_example(self):
        assert_allclose(planar_field(Params(0.4, 0.8), (0.1, 0.5)), [0.08, -0.16], atol=1e-15)

    def test_belen_pearce_examples(self):
        assert_allclose(belen_pearce_field((0.25, 0.2, 0.55)), [-0.05, -0.1, 0.15], atol=1e-15)
        assert_allclose(belen_pearce_planar((0.25, 0.2)), [-0.05, -0.1], atol=1e-15)
        assert belen_pearce_planar((0.5, 0.7))[1] == 0.0

    def test_fields_vanish_on_equilibrium_segment(self, demo_params):
        for i in np.linspace(0.0, 1.0, 11):
            assert np.all(piqueira_field(demo_params, (i, 0.0, 1.0 - i)) == 0.0)
            assert_allclose(planar_field(demo_params, (1.0 - i, i)), [0.0, 0.0], atol=1e-15)
            assert np.all(belen_pearce_field((i, 0.0, 1.0 - i)) == 0.0)

    def test_population_conservation(self, fig2_params):
        for triple in random_simplex_points(1000):
            assert abs(piqueira_field(fig2_params, triple).sum()) <= 1e-15
            assert abs(belen_pearce_field(triple).sum()) <= 1e-15

    def test_mu_scaling_is_exact(self):
        scaled, unit = Params(0.3, 0.6, 0.8), Params(0.3, 0.6, 1.0)
        for triple in random_simplex_points(50):
            assert np.array_equal(piqueira_field(scaled, triple), 0.8 * piqueira_field(unit, triple))

    def test_planar_is_reduced_piqueira(self, fig2_params):
        for triple in random_simplex_points(50):
            di, _, dr = piqueira_field(fig2_params, triple)
            assert_allclose(planar_field(fig2_params, (triple[2], triple[0])), [dr, di], atol=1e-15)

    def test_non_finite_input(self, fig2_params):
        with pytest.raises(InvalidStateError):
            piqueira_field(fig2_params, (np.nan, 0.5, 0.5))
        with pytest.raises(InvalidStateError):
            planar_field(fig2_params, (0.1, np.inf))

    def test_field_registry(self, fig2_params):
        field = field_for(ModelId.PIQUEIRA_PLANAR, fig2_params)
        assert field.dimension == 2
        assert_allclose(field.to_triple(field.to_coordinates(np.array([0.4, 0.5, 0.1]))), [0.4, 0.5, 0.1])
        assert field_for(ModelId.BELEN_PEARCE3, fig2_params).params is None
        with pytest.raises(InvalidParamsError):
            field_for(ModelId.PIQUEIRA3)


class TestJacobians:
    def test_columns_sum_to_zero(self, fig2_params):
        for triple in random_simplex_points(1000, seed=7):
            assert np.all(np.abs(jacobian3(fig2_params, triple).sum(axis=0)) <= 1e-15)

    def test_jacobian3_at_equilibrium(self, demo_params):
        matrix = jacobian3(demo_params, (0.7, 0.0, 0.3))
        assert np.all(matrix[:, 0] == 0.0) and np.all(matrix[:, 2] == 0.0)
        eigenvalues = np.sort(np.linalg.eigvals(matrix).real)
        assert_allclose(eigenvalues, [0.0, 0.0, 0.8 * 0.7 - 0.4 * 0.3], atol=1e-12)

    def test_jacobian2_general_point(self):
        p = Params(0.4, 0.8)
        assert_allclose(jacobian2(p, (0.5, 0.5)), [[-0.2, -0.2], [0.4, 0.4]], atol=1e-15)

    def test_jacobian2_on_segment_matches_reduced_form(self, demo_params):
        for i in (0.1, 0.5, 0.9):
            rho1, rho2 = demo_params.rho1, demo_params.rho2
            expected = [[rho1 * i - rho1, rho1 * i - rho1], [rho2 * i, rho2 * i]]
            assert_allclose(jacobian2(demo_params, (1.0 - i, i)), expected, atol=1e-15)

    def test_jacobian2_spectrum_on_segment(self, demo_params):
        i = 0.6
        eigenvalues = np.sort(np.linalg.eigvals(jacobian2(demo_params, (1.0 - i, i))).real)
        assert_allclose(eigenvalues, [0.0, 1.2 * i - 0.4], atol=1e-12)

    def test_printed_matrix_differs(self, fig2_params):
        point = (0.4, 0.5, 0.1)
        assert not np.allclose(jacobian3_printed(fig2_params, point), jacobian3(fig2_params, point))


class TestTrajectory:
    def test_rejects_mismatched_states(self):
        with pytest.raises(InvalidStateError):
            Trajectory(np.array([0.0, 0.1]), np.zeros((3, 3)), None, StopReason.HORIZON_REACHED, ModelId.PIQUEIRA3)

    def test_rejects_mismatched_integral_values(self):
        states = np.array([[0.4, 0.5, 0.1], [0.3, 0.5, 0.2]])
        with pytest.raises(InvalidStateError):
            Trajectory(np.array([0.0, 0.1]), states, np.zeros(3), StopReason.HORIZON_REACHED, ModelId.PIQUEIRA3)

    def test_arrays_are_read_only(self):
        states = np.array([[0.4, 0.5, 0.1]])
        trajectory = Trajectory(np.array([0.0]), states, None, StopReason.SPREADER_EXTINCT, ModelId.PIQUEIRA3)
        with pytest.raises(ValueError):
            trajectory.states[0, 0] = 1.0
