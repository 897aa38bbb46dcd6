"""Momentum inversion, Lagrangian forms, actions along sampled paths."""

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from gupmech.algebra import DeformationParameters, DomainError
from gupmech.dynamics import Hamiltonian, Potential, integrate, PhaseState
from gupmech.frames import Event
from gupmech.legendre import (
    Lagrangian,
    PathSample,
    action_along_path,
    dynamical_lagrangian,
    euclidean_interval,
    lagrangian_from_hamiltonian,
    lagrangian_value,
    legendre_roundtrip_residual,
    momentum_from_velocity_exact,
    momentum_from_velocity_first_order,
    rest_term,
)


def params_of(beta, mass=1.0):
    return DeformationParameters(beta=beta, mass=mass)


class TestFirstOrderInversion:
    def test_direct_value(self):
        got = momentum_from_velocity_first_order(0.5, params_of(0.01))
        assert got == pytest.approx(0.49833333333333335, rel=1e-15)

    def test_beta_zero_is_linear(self):
        assert momentum_from_velocity_first_order(0.7, params_of(0.0)) == 0.7

    def test_rest_maps_to_rest(self):
        assert momentum_from_velocity_first_order(0.0, params_of(0.05)) == 0.0

    def test_3d_uses_the_vector_coefficient(self):
        v = np.array([0.5, 0.0, 0.0])
        got = momentum_from_velocity_first_order(v, params_of(0.01))
        expect = 0.5 * (1.0 - 2.0 * 0.01 * 0.25)
        np.testing.assert_allclose(got, [expect, 0.0, 0.0], rtol=1e-15)

    def test_warns_outside_small_deformation_regime(self):
        with pytest.warns(RuntimeWarning, match="small-deformation"):
            momentum_from_velocity_first_order(4.0, params_of(0.01))

    def test_silent_inside_the_regime(self):
        import warnings
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            momentum_from_velocity_first_order(3.0, params_of(0.01))


class TestExactInversion:
    def test_rest_maps_to_rest(self):
        kind = Hamiltonian.exact_1d(params_of(0.01))
        assert momentum_from_velocity_exact(0.0, kind) == 0.0

    def test_tan_branch_value(self):
        kind = Hamiltonian.exact_1d(params_of(0.01))
        got = momentum_from_velocity_exact(0.5, kind)
        assert got == pytest.approx(0.49834632593727346, rel=1e-12)
        # first-order formula agrees to the beta^2 scale
        first = momentum_from_velocity_first_order(0.5, params_of(0.01))
        assert abs(got - first) < 1.0 * 0.01 ** 2

    def test_beta_zero_is_linear(self):
        kind = Hamiltonian.first_order_1d(params_of(0.0))
        assert momentum_from_velocity_exact(0.8, kind) == \
            pytest.approx(0.8, rel=1e-12)

    def test_odd_in_velocity(self):
        kind = Hamiltonian.exact_1d(params_of(0.01))
        plus = momentum_from_velocity_exact(0.5, kind)
        minus = momentum_from_velocity_exact(-0.5, kind)
        assert minus == -plus

    def test_residual_meets_the_advertised_tolerance(self):
        kind = Hamiltonian.exact_1d(params_of(0.01))
        from gupmech.dynamics import radial_velocity
        for s in (0.1, 0.5, 2.0, 7.0):
            q = momentum_from_velocity_exact(s, kind)
            assert abs(radial_velocity(kind, q) - s) <= 1e-12 * max(1.0, s)

    def test_3d_momentum_is_parallel_to_velocity(self):
        kind = Hamiltonian.exact_3d(params_of(0.01))
        v = np.array([0.3, 0.4, 0.0])
        p = momentum_from_velocity_exact(v, kind)
        np.testing.assert_allclose(np.cross(v, p), np.zeros(3), atol=1e-15)
        assert np.linalg.norm(p) < 1.0 * np.linalg.norm(v)

    def test_relativistic_speed_ceiling(self):
        kind = Hamiltonian.relativistic_first_order_1d(params_of(1e-4), 10.0)
        from gupmech.dynamics import speed_limit
        with pytest.raises(DomainError):
            momentum_from_velocity_exact(speed_limit(kind) * 1.01, kind)

    def test_sqrt_plus_supremum_unattained(self):
        kind = Hamiltonian.effective_sqrt(params_of(0.01), scale_velocity=2.0,
                                          sign=+1)
        with pytest.raises(DomainError):
            momentum_from_velocity_exact(2.0, kind)
        assert math.isfinite(momentum_from_velocity_exact(1.99, kind))

    @given(st.floats(min_value=-3.0, max_value=3.0))
    @settings(max_examples=50, deadline=None)
    def test_round_trips_through_the_velocity_relation(self, s):
        kind = Hamiltonian.exact_1d(params_of(0.01))
        from gupmech.dynamics import radial_velocity
        q = momentum_from_velocity_exact(s, kind)
        back = math.copysign(radial_velocity(kind, abs(q)), q) if q else 0.0
        assert back == pytest.approx(s, abs=1e-11)


class TestLagrangianValue:
    def test_undeformed_quadratic(self):
        kind = Lagrangian.first_order_1d(params_of(0.0))
        assert lagrangian_value(kind, 0.0, 1.0) == 0.5

    def test_first_order_quartic_correction(self):
        kind = Lagrangian.first_order_1d(params_of(0.01))
        got = lagrangian_value(kind, 0.0, 1.0)
        assert got == pytest.approx(0.49666666666666665, rel=1e-15)

    def test_sqrt_form_and_its_gap_to_first_order(self):
        # u^2 = 3/(8 beta m^2) makes the two forms agree through O(beta).
        u = math.sqrt(3.0 / (8.0 * 0.01))
        kind = Lagrangian.sqrt_1d(params_of(0.01), u)
        got = lagrangian_value(kind, 0.0, 1.0)
        assert got == pytest.approx(0.4967103839266601, rel=1e-14)
        gap = got - 0.49666666666666665
        assert gap == pytest.approx(4.371725999346987e-05, rel=1e-9)

    def test_potential_enters_with_a_minus_sign(self):
        kind = Lagrangian.first_order_1d(params_of(0.0),
                                         Potential.harmonic(2.0))
        assert lagrangian_value(kind, 1.0, 0.0) == -1.0

    def test_first_order_3d(self):
        kind = Lagrangian.first_order_3d(params_of(0.01))
        v = np.array([1.0, 0.0, 0.0])
        got = lagrangian_value(kind, np.zeros(3), v)
        assert got == pytest.approx(0.5 - 0.005, rel=1e-15)

    def test_relativistic_rest_term(self):
        kind = Lagrangian.relativistic(params_of(1e-4), 10.0)
        assert rest_term(kind) == -100.0
        assert lagrangian_value(kind, 0.0, 0.0) == -100.0
        assert dynamical_lagrangian(kind, 0.0, 0.0) == 0.0

    def test_relativistic_speed_domain(self):
        kind = Lagrangian.relativistic(params_of(1e-4), 10.0)
        with pytest.raises(DomainError):
            lagrangian_value(kind, 0.0, 10.0)

    def test_unknown_model_rejected(self):
        with pytest.raises(ValueError):
            Lagrangian("quartic", params_of(0.01))
        with pytest.raises(ValueError):
            Lagrangian.sqrt_1d(params_of(0.01), 0.0)


class TestLegendreRoundtrip:
    def test_undeformed_pair_closes(self):
        lag = Lagrangian.first_order_1d(params_of(0.0))
        ham = Hamiltonian.first_order_1d(params_of(0.0))
        assert legendre_roundtrip_residual(lag, ham, 0.9) < 1e-12

    def test_transform_of_the_hamiltonian_is_tautological(self):
        ham = Hamiltonian.exact_1d(params_of(0.01))
        lag = lagrangian_from_hamiltonian(ham)
        assert legendre_roundtrip_residual(lag, ham, 0.5) < 1e-12

    def test_first_order_mismatch_is_second_order_small(self):
        beta = 0.01
        resid = legendre_roundtrip_residual(
            Lagrangian.first_order_1d(params_of(beta)),
            Hamiltonian.exact_1d(params_of(beta)), 0.5)
        assert resid <= 5.0 * beta ** 2 * 0.5 ** 6

    def test_mismatch_drops_fourfold_per_beta_halving(self):
        def resid(beta):
            return legendre_roundtrip_residual(
                Lagrangian.first_order_1d(params_of(beta)),
                Hamiltonian.exact_1d(params_of(beta)), 0.5)

        ratio = resid(0.01) / resid(0.005)
        assert 3.2 < ratio < 4.8


class TestPathSample:
    def test_velocities_derived_when_absent(self):
        t = np.linspace(0.0, 1.0, 11)
        path = PathSample(t, 2.0 * t)
        np.testing.assert_allclose(path.velocities[:, 0], 2.0, rtol=1e-12)

    def test_too_short_rejected(self):
        with pytest.raises(ValueError):
            PathSample(np.array([0.0]), np.array([1.0]))

    def test_unsorted_times_rejected(self):
        with pytest.raises(ValueError):
            PathSample(np.array([0.0, 2.0, 1.0]), np.zeros(3))

    def test_two_component_positions_rejected(self):
        with pytest.raises(ValueError):
            PathSample(np.array([0.0, 1.0]), np.zeros((2, 2)))

    def test_split_shares_the_joint_sample(self):
        t = np.linspace(0.0, 1.0, 5)
        path = PathSample(t, np.sin(t))
        left, right = path.split(2)
        assert left.times[-1] == right.times[0]
        assert left.velocities[-1, 0] == right.velocities[0, 0]
        with pytest.raises(ValueError):
            path.split(4)

    def test_from_trajectory(self):
        kind = Hamiltonian.first_order_1d(params_of(0.0))
        traj = integrate(kind, PhaseState.of(0.0, 1.0), t_end=1.0, dt=0.1)
        path = PathSample.from_trajectory(traj)
        assert len(path) == len(traj)
        np.testing.assert_allclose(path.velocities[:, 0], 1.0, rtol=1e-9)


class TestActionAlongPath:
    def test_static_path_contributes_nothing(self):
        u = math.sqrt(37.5)
        kind = Lagrangian.sqrt_1d(params_of(0.01), u)
        t = np.linspace(0.0, 3.0, 31)
        path = PathSample(t, np.full_like(t, 1.25))
        assert action_along_path(kind, path) == pytest.approx(0.0, abs=1e-12)

    def test_uniform_motion_closed_form(self):
        u = math.sqrt(37.5)
        V, T = 1.0, 3.0
        kind = Lagrangian.sqrt_1d(params_of(0.01), u)
        t = np.linspace(0.0, T, 61)
        path = PathSample(t, V * t)
        expect = T * (u * u * (math.sqrt(1.0 + V * V / (u * u)) - 1.0))
        assert action_along_path(kind, path) == pytest.approx(expect, rel=1e-12)

    def test_quadrature_is_second_order(self):
        kind = Lagrangian.first_order_1d(params_of(0.01),
                                         Potential.harmonic(1.0))

        def act(n):
            t = np.linspace(0.0, 2.0, n)
            return action_along_path(kind, PathSample(t, np.cos(t), -np.sin(t)))

        ref = act(20001)
        ratio = abs(act(101) - ref) / abs(act(201) - ref)
        assert 3.0 < ratio < 5.5

    def test_additive_across_a_split(self):
        kind = Lagrangian.first_order_1d(params_of(0.01),
                                         Potential.harmonic(1.0))
        t = np.linspace(0.0, 2.0, 1001)
        path = PathSample(t, np.cos(t), -np.sin(t))
        left, right = path.split(517)
        whole = action_along_path(kind, path)
        parts = action_along_path(kind, left) + action_along_path(kind, right)
        assert parts == pytest.approx(whole, abs=1e-12)

    def test_dimension_mismatch_rejected(self):
        kind = Lagrangian.first_order_3d(params_of(0.01))
        t = np.linspace(0.0, 1.0, 5)
        with pytest.raises(ValueError):
            action_along_path(kind, PathSample(t, t))


class TestEuclideanInterval:
    def test_coincident_events(self):
        e = Event.of(1.0, 2.0)
        assert euclidean_interval(e, e, 3.0) == 0.0

    def test_pure_time_separation(self):
        got = euclidean_interval(Event.of(0.0, 0.0), Event.of(1.0, 0.0), 2.0)
        assert got == 4.0

    def test_unit_cube_diagonal(self):
        got = euclidean_interval(Event.of(0.0, [0.0, 0.0, 0.0]),
                                 Event.of(1.0, [1.0, 1.0, 1.0]), 1.0)
        assert got == 4.0

    def test_scale_must_be_positive(self):
        with pytest.raises(ValueError):
            euclidean_interval(Event.of(0.0, 0.0), Event.of(1.0, 1.0), 0.0)

    def test_dimension_mismatch_rejected(self):
        with pytest.raises(ValueError):
            euclidean_interval(Event.of(0.0, 0.0),
                               Event.of(1.0, [1.0, 0.0, 0.0]), 1.0)

    def test_free_sqrt_action_is_an_arc_length(self):
        # Straight free path: dynamical action = m u (arc in (ut, x)) - m u^2 T.
        u = 5.0
        V, T = 2.0, 1.5
        kind = Lagrangian.sqrt_1d(params_of(0.01), u)
        t = np.linspace(0.0, T, 201)
        action = action_along_path(kind, PathSample(t, V * t))
        arc = math.sqrt(euclidean_interval(Event.of(0.0, 0.0),
                                           Event.of(T, V * T), u))
        assert action == pytest.approx(u * arc - u * u * T, rel=1e-12)
