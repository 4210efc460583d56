import math

import numpy as np
import pytest

from boostcap.errors import DomainError, SingularConfigurationError
from boostcap.lorentz import (METRIC, STANDARD_MOMENTUM, aberrated_angle,
                              boost_z, little_group, metric_residual,
                              null_momentum, rotation, standard_boost)


def reconstruct_little_group(a1: float, a2: float, angle: float) -> np.ndarray:
    """Brute-force oracle: rebuild the translation-times-rotation matrix."""
    asq = a1 * a1 + a2 * a2
    t = np.array([
        [1 + asq / 2, a1, a2, -asq / 2],
        [a1, 1.0, 0.0, -a1],
        [a2, 0.0, 1.0, -a2],
        [asq / 2, a1, a2, 1 - asq / 2],
    ])
    r = np.eye(4)
    r[1, 1] = r[2, 2] = math.cos(angle)
    r[1, 2] = -math.sin(angle)
    r[2, 1] = math.sin(angle)
    return t @ r


class TestBoost:
    def test_identity_at_zero(self):
        np.testing.assert_allclose(boost_z(0.0), np.eye(4), atol=1e-15)

    def test_one_parameter_subgroup(self, rng):
        for _ in range(20):
            a, b = rng.uniform(-2, 2, 2)
            np.testing.assert_allclose(boost_z(a) @ boost_z(b), boost_z(a + b),
                                       atol=1e-12)

    def test_inverse_action_on_photon(self, rng):
        # the inverse boost's time component is k0 (cosh z + sinh z cos t)
        for _ in range(20):
            z = rng.uniform(-2, 2)
            th, ph = rng.uniform(0, math.pi), rng.uniform(0, 2 * math.pi)
            w = rng.uniform(0.1, 4.0)
            k = null_momentum(w, th, ph)
            tilde = boost_z(-z) @ k
            assert tilde[0] == pytest.approx(
                w * (math.cosh(z) + math.sinh(z) * math.cos(th)), rel=1e-12)

    def test_metric_preserved(self, rng):
        for z in rng.uniform(-3, 3, 10):
            assert metric_residual(boost_z(z)) < 1e-12


class TestRotation:
    def test_identity(self):
        np.testing.assert_allclose(rotation("z", 0.0), np.eye(4), atol=1e-15)

    def test_axis_permutation(self):
        out = rotation("y", math.pi / 2) @ np.array([1.0, 0.0, 0.0, 1.0])
        np.testing.assert_allclose(out, [1.0, 1.0, 0.0, 0.0], atol=1e-15)

    def test_composition(self, rng):
        for _ in range(10):
            a, b = rng.uniform(0, 2 * math.pi, 2)
            np.testing.assert_allclose(rotation("z", a) @ rotation("z", b),
                                       rotation("z", a + b), atol=1e-12)

    def test_bad_axis(self):
        with pytest.raises(DomainError):
            rotation("x", 0.5)


class TestStandardBoost:
    def test_fixes_standard_vector(self):
        np.testing.assert_allclose(standard_boost(STANDARD_MOMENTUM), np.eye(4),
                                   atol=1e-14)

    def test_pure_boost_case(self):
        p = np.array([2.0, 0.0, 0.0, 2.0])
        lp = standard_boost(p)
        np.testing.assert_allclose(lp @ STANDARD_MOMENTUM, p, atol=1e-14)
        np.testing.assert_allclose(lp, boost_z(-math.log(2.0)), atol=1e-14)

    def test_oblique_direction(self):
        p = null_momentum(1.0, math.pi / 3, 0.0)
        np.testing.assert_allclose(standard_boost(p) @ STANDARD_MOMENTUM, p,
                                   atol=1e-12)

    def test_random_directions(self, rng):
        for _ in range(30):
            p = null_momentum(rng.uniform(0.2, 5), rng.uniform(0, math.pi),
                              rng.uniform(0, 2 * math.pi))
            lp = standard_boost(p)
            np.testing.assert_allclose(lp @ STANDARD_MOMENTUM, p,
                                       rtol=1e-12, atol=1e-14)
            assert metric_residual(lp) < 1e-12

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            standard_boost(np.array([1.0, 0.0, 0.0, 0.5]))   # not null
        with pytest.raises(DomainError):
            standard_boost(np.array([-1.0, 0.0, 0.0, -1.0]))  # negative energy


class TestLittleGroup:
    def test_identity_transformation(self):
        dec = little_group(np.eye(4), null_momentum(1.0, 0.7, 0.3))
        assert abs(dec.wigner_angle) < 1e-14
        assert abs(dec.a1) < 1e-14 and abs(dec.a2) < 1e-14
        assert dec.residual < 1e-14

    def test_boost_with_known_translation(self):
        z, th = 1.0, math.pi / 4
        p = null_momentum(1.0, th, 0.0)
        dec = little_group(boost_z(z), p)
        a1_expected = math.sin(th) / (1.0 / math.tanh(z) - math.cos(th))
        assert abs(dec.wigner_angle) < 1e-12
        assert abs(dec.a2) < 1e-12
        assert dec.a1 == pytest.approx(a1_expected, rel=1e-12)

    def test_vanishing_rotation_sweep(self, rng):
        # vanishing rotation part for boosts along the propagation axis
        for _ in range(100):
            z = rng.uniform(-3, 3)
            th = rng.uniform(0.01, math.pi - 0.01)
            ph = rng.uniform(0, 2 * math.pi)
            w = rng.uniform(0.2, 5.0)
            p = null_momentum(w, th, ph)
            dec = little_group(boost_z(z), p)
            xi = -math.log(w)
            a1_theory = (math.exp(xi) * math.sin(th)
                         / (1.0 / math.tanh(z) - math.cos(th))) if z else 0.0
            assert abs(dec.wigner_angle) < 1e-10
            assert abs(dec.a2) < 1e-10
            assert abs(dec.a1 - a1_theory) < 1e-10
            assert dec.residual < 1e-10

    def test_general_transformation_reconstruction(self, rng):
        for _ in range(30):
            lam = rotation("y", rng.uniform(0, 1.2)) @ boost_z(rng.uniform(-2, 2))
            p = null_momentum(rng.uniform(0.3, 3), rng.uniform(0.05, 3.0),
                              rng.uniform(0, 2 * math.pi))
            dec = little_group(lam, p)
            w = (np.linalg.inv(standard_boost(lam @ p)) @ lam @ standard_boost(p))
            rebuilt = reconstruct_little_group(dec.a1, dec.a2, dec.wigner_angle)
            assert np.abs(rebuilt - w).max() < 1e-10
            assert dec.residual < 1e-10
            # little-group elements fix the standard momentum
            assert np.abs(w @ STANDARD_MOMENTUM - STANDARD_MOMENTUM).max() < 1e-10

    def test_rejects_non_lorentz(self):
        with pytest.raises(DomainError):
            little_group(np.eye(4) * 1.5, STANDARD_MOMENTUM)

    def test_singular_energy(self):
        p = null_momentum(1e-290, 0.0, 0.0)
        with pytest.raises(SingularConfigurationError):
            little_group(boost_z(30.0), p)


class TestAberratedAngle:
    def test_no_boost(self):
        for th in (0.0, 0.4, math.pi / 2, 2.8, math.pi):
            assert aberrated_angle(th, 0.0) == pytest.approx(th, abs=1e-14)

    def test_cutoff_maps_to_right_angle(self):
        # the inverse statement: at theta_c = arccos(-tanh z) the image is pi/2
        for z in (-2.0, -0.5, 0.7, 1.5):
            tc = math.acos(-math.tanh(z))
            assert aberrated_angle(tc, z) == pytest.approx(math.pi / 2, abs=1e-12)

    def test_golden_value(self):
        # frozen from direct high-precision evaluation with branch correction
        assert aberrated_angle(0.3, -1.0) == pytest.approx(0.7796119368357973,
                                                           abs=1e-14)

    def test_branch_endpoints(self):
        assert aberrated_angle(0.0, 1.3) == 0.0
        assert aberrated_angle(math.pi, 1.3) == pytest.approx(math.pi)

    def test_continuity_across_cutoff(self):
        z = 0.8
        tc = math.acos(-math.tanh(z))
        vals = [aberrated_angle(tc + d, z) for d in (-1e-6, 0.0, 1e-6)]
        assert vals[0] < vals[1] < vals[2]
        assert vals[2] - vals[0] < 1e-4

    def test_domain(self):
        with pytest.raises(DomainError):
            aberrated_angle(-0.1, 0.0)
        with pytest.raises(DomainError):
            aberrated_angle(3.2, 0.0)


def test_metric_constant():
    np.testing.assert_allclose(METRIC, np.diag([1.0, -1.0, -1.0, -1.0]))
