import math

import numpy as np
import pytest

from glsobolev.errors import InputError
from glsobolev.profiles import (
    Compact,
    Decaying,
    RadialProfile,
    bump,
    dilate,
    gaussian,
    generator_names,
    make_profile,
    power_tail,
    smoothed_step,
    step,
    tent,
)


class TestDerivativeCheck:
    def test_wrong_derivative_is_caught(self):
        with pytest.raises(InputError, match="disagrees"):
            RadialProfile(
                value=lambda r: np.exp(-np.asarray(r) ** 2),
                derivative=lambda r: -np.asarray(r) * np.exp(-np.asarray(r) ** 2),  # missing 2
                support=Decaying(tail_exponent=8.0, radius=2.0),
                name="broken",
            )

    def test_sign_flip_is_caught(self):
        with pytest.raises(InputError):
            RadialProfile(
                value=lambda r: np.exp(-np.asarray(r)),
                derivative=lambda r: np.exp(-np.asarray(r)),
                support=Decaying(tail_exponent=4.0, radius=1.0),
            )

    def test_check_can_be_disabled(self):
        p = RadialProfile(
            value=lambda r: np.ones_like(np.asarray(r, dtype=float)),
            derivative=lambda r: np.ones_like(np.asarray(r, dtype=float)),  # wrong on purpose
            support=Compact(1.0),
            check=False,
        )
        assert p.value(0.5) == 1.0


class TestSupports:
    def test_compact_validation(self):
        with pytest.raises(InputError):
            Compact(0.0)
        with pytest.raises(InputError):
            Compact(-1.0)

    def test_decaying_validation(self):
        with pytest.raises(InputError):
            Decaying(tail_exponent=0.0)
        with pytest.raises(InputError):
            Decaying(tail_exponent=2.0, radius=0.0)


class TestFactories:
    @pytest.mark.parametrize("name", generator_names())
    def test_vectorized_and_scalar_calls(self, name):
        u = make_profile(name)
        r = np.linspace(0.0, 3.0, 17)
        vals = u.value(r)
        assert vals.shape == r.shape
        assert isinstance(u.value(1.1), float)
        assert isinstance(u.derivative(1.1), float)

    def test_bump_vanishes_outside(self):
        u = bump(1.0, 2.0)
        assert u.value(1.0) == 0.0
        assert u.value(5.0) == 0.0
        assert u.derivative(1.5) == 0.0
        assert u.value(0.0) == pytest.approx(1.0)

    def test_bump_near_edge_underflows_cleanly(self):
        u = bump(1.0, 1.0)
        vals = u.value(np.array([0.999999999, 1.0 - 1e-15]))
        assert np.all(np.isfinite(vals))
        assert np.all(vals >= 0.0)

    def test_gaussian_values(self):
        u = gaussian(2.0)
        assert u.value(2.0) == pytest.approx(math.exp(-1.0))
        assert u.derivative(2.0) == pytest.approx(-math.exp(-1.0))

    def test_tent_kink(self):
        u = tent(2.0)
        assert u.value(1.0) == pytest.approx(0.5)
        assert u.derivative(1.0) == pytest.approx(-0.5)
        assert u.value(3.0) == 0.0
        assert u.derivative(3.0) == 0.0

    def test_step_indicator(self):
        u = step(1.5)
        assert u.value(1.0) == 1.0
        assert u.value(2.0) == 0.0

    def test_smoothed_step_is_c1(self):
        u = smoothed_step(1.0, 0.25)
        assert u.value(0.5) == 1.0
        assert u.value(1.0) == pytest.approx(0.0, abs=1e-15)
        assert u.derivative(0.74) == 0.0
        assert u.derivative(0.875) == pytest.approx(-math.pi / 0.5, rel=1e-12)

    def test_power_tail_asymptotics(self):
        u = power_tail(3.0, 1.0)
        big = 1e6
        assert u.value(big) * big**3 == pytest.approx(1.0, rel=1e-6)

    def test_make_profile_errors(self):
        with pytest.raises(InputError):
            make_profile("nope")
        with pytest.raises(InputError):
            make_profile("bump", 1.0, 2.0, 3.0, 4.0)

    @pytest.mark.parametrize(
        "args",
        [("bump", -1.0), ("gaussian", 0.0), ("tent", -2.0), ("power_tail", 0.0)],
    )
    def test_factory_parameter_validation(self, args):
        with pytest.raises(InputError):
            make_profile(*args)


class TestDilation:
    def test_values_transform(self):
        u = bump(1.0, 1.0)
        v = dilate(u, 2.0)
        r = np.linspace(0.0, 0.49, 9)
        assert np.allclose(v.value(r), u.value(2.0 * r))
        assert np.allclose(v.derivative(r), 2.0 * u.derivative(2.0 * r))

    def test_support_shrinks(self):
        v = dilate(bump(1.0, 1.0), 4.0)
        assert isinstance(v.support, Compact)
        assert v.support.radius == pytest.approx(0.25)

    def test_decaying_support_radius(self):
        v = dilate(gaussian(1.0), 0.5)
        assert isinstance(v.support, Decaying)
        assert v.support.radius == pytest.approx(6.0)
        assert v.support.tail_exponent == gaussian(1.0).support.tail_exponent

    def test_bad_factor(self):
        with pytest.raises(InputError):
            dilate(bump(), 0.0)
        with pytest.raises(InputError):
            dilate(bump(), math.inf)
