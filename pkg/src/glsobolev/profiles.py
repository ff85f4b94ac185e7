"""Radial test profiles u(|x|) with analytic derivatives.

A profile bundles vectorized callables for u and u' together with a support
descriptor used by the quadrature layer: ``Compact(radius)`` means u
vanishes beyond the radius, ``Decaying(tail_exponent, radius)`` means
|u(rho)| <= c rho^{-tail_exponent} beyond the radius.  On construction the
derivative is spot-checked against central differences at 32 points so a
mistyped formula fails loudly instead of skewing every norm downstream.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Callable, Union

import numpy as np

from .errors import InputError

_FD_POINTS = 32
_FD_RTOL = 1e-4


@dataclass(frozen=True)
class Compact:
    radius: float

    def __post_init__(self):
        if not (self.radius > 0.0 and math.isfinite(self.radius)):
            raise InputError(f"compact support radius must be positive, got {self.radius}")


@dataclass(frozen=True)
class Decaying:
    tail_exponent: float
    radius: float = 1.0

    def __post_init__(self):
        if not (self.tail_exponent > 0.0):
            raise InputError(f"tail exponent must be positive, got {self.tail_exponent}")
        if not (self.radius > 0.0 and math.isfinite(self.radius)):
            raise InputError(f"decay radius must be positive, got {self.radius}")


Support = Union[Compact, Decaying]


def _as_radial(fn: Callable) -> Callable:
    """Wrap a 1-d vectorized function so scalars come back as floats."""

    def wrapped(r):
        arr = np.atleast_1d(np.asarray(r, dtype=float))
        out = np.asarray(fn(arr), dtype=float)
        if np.ndim(r) == 0:
            return float(out[0])
        return out.reshape(np.shape(r))

    return wrapped


@dataclass(frozen=True)
class RadialProfile:
    """u(rho) and u'(rho) on [0, inf) with a declared support."""

    value: Callable = field(compare=False)
    derivative: Callable = field(compare=False)
    support: Support
    name: str = "profile"
    check: bool = field(default=True, repr=False, compare=False)

    def __post_init__(self):
        if self.check:
            self._check_derivative()

    def _check_derivative(self):
        if isinstance(self.support, Compact):
            r_hi = self.support.radius
        else:
            r_hi = 4.0 * self.support.radius
        rho = np.linspace(r_hi / _FD_POINTS, r_hi * (1.0 - 1.0 / (2 * _FD_POINTS)), _FD_POINTS)
        h = 1e-6 * (1.0 + rho)
        fd = (self.value(rho + h) - self.value(rho - h)) / (2.0 * h)
        dv = self.derivative(rho)
        scale = np.maximum(np.abs(dv), 1e-3 * np.max(np.abs(dv)) + 1e-12)
        bad = np.abs(fd - dv) > _FD_RTOL * scale
        if np.any(bad):
            i = int(np.argmax(np.abs(fd - dv) / scale))
            raise InputError(
                f"derivative of profile '{self.name}' disagrees with central "
                f"differences at rho = {rho[i]:.6g}: analytic {dv[i]:.6g}, "
                f"numeric {fd[i]:.6g}"
            )

    def dilated(self, lam: float) -> "RadialProfile":
        """Profile rho -> u(lam * rho)."""
        if not (lam > 0.0 and math.isfinite(lam)):
            raise InputError(f"dilation factor must be positive, got {lam}")
        u, du = self.value, self.derivative
        if isinstance(self.support, Compact):
            support: Support = Compact(self.support.radius / lam)
        else:
            support = replace(self.support, radius=self.support.radius / lam)
        return RadialProfile(
            value=_as_radial(lambda r: u(lam * r)),
            derivative=_as_radial(lambda r: lam * du(lam * r)),
            support=support,
            name=f"{self.name}|dilate({lam:g})",
            check=False,
        )


def dilate(profile: RadialProfile, lam: float) -> RadialProfile:
    return profile.dilated(lam)


def bump(radius: float = 1.0, sharpness: float = 1.0) -> RadialProfile:
    """Smooth compactly supported bump exp(k (1 - 1/(1 - t^2))), t = rho/R."""
    if radius <= 0.0 or sharpness <= 0.0:
        raise InputError("bump radius and sharpness must be positive")
    R, k = float(radius), float(sharpness)

    def u(r):
        t = r / R
        out = np.zeros_like(t)
        m = t < 1.0
        s = 1.0 - t[m] ** 2
        out[m] = np.exp(k * (1.0 - 1.0 / s))
        return out

    def du(r):
        t = r / R
        out = np.zeros_like(t)
        m = t < 1.0
        s = 1.0 - t[m] ** 2
        out[m] = np.exp(k * (1.0 - 1.0 / s)) * (-2.0 * k * t[m] / s**2) / R
        return out

    return RadialProfile(
        value=_as_radial(u),
        derivative=_as_radial(du),
        support=Compact(R),
        name=f"bump(R={R:g},k={k:g})",
    )


def gaussian(scale: float = 1.0) -> RadialProfile:
    """exp(-(rho/s)^2); decays faster than any declared power tail."""
    if scale <= 0.0:
        raise InputError("gaussian scale must be positive")
    s = float(scale)

    def u(r):
        return np.exp(-((r / s) ** 2))

    def du(r):
        return -2.0 * r / s**2 * np.exp(-((r / s) ** 2))

    return RadialProfile(
        value=_as_radial(u),
        derivative=_as_radial(du),
        support=Decaying(tail_exponent=16.0, radius=3.0 * s),
        name=f"gaussian(s={s:g})",
    )


def tent(radius: float = 1.0) -> RadialProfile:
    """Piecewise linear max(1 - rho/R, 0); kink at R, so no derivative check."""
    if radius <= 0.0:
        raise InputError("tent radius must be positive")
    R = float(radius)

    def u(r):
        return np.maximum(1.0 - r / R, 0.0)

    def du(r):
        return np.where(r < R, -1.0 / R, 0.0)

    return RadialProfile(
        value=_as_radial(u),
        derivative=_as_radial(du),
        support=Compact(R),
        name=f"tent(R={R:g})",
        check=False,
    )


def step(radius: float = 1.0) -> RadialProfile:
    """Indicator of the ball; derivative identically 0 away from the jump."""
    if radius <= 0.0:
        raise InputError("step radius must be positive")
    R = float(radius)

    def u(r):
        return np.where(r < R, 1.0, 0.0)

    def du(r):
        return np.zeros_like(np.asarray(r, dtype=float))

    return RadialProfile(
        value=_as_radial(u),
        derivative=_as_radial(du),
        support=Compact(R),
        name=f"step(R={R:g})",
        check=False,
    )


def smoothed_step(radius: float = 1.0, width: float = 0.25) -> RadialProfile:
    """1 on [0, R - w], cosine ramp down to 0 at R; C^1 everywhere."""
    if radius <= 0.0 or not (0.0 < width <= radius):
        raise InputError("need radius > 0 and 0 < width <= radius")
    R, w = float(radius), float(width)

    def u(r):
        out = np.ones_like(r)
        out[r >= R] = 0.0
        m = (r > R - w) & (r < R)
        out[m] = 0.5 * (1.0 + np.cos(math.pi * (r[m] - (R - w)) / w))
        return out

    def du(r):
        out = np.zeros_like(r)
        m = (r > R - w) & (r < R)
        out[m] = -0.5 * math.pi / w * np.sin(math.pi * (r[m] - (R - w)) / w)
        return out

    return RadialProfile(
        value=_as_radial(u),
        derivative=_as_radial(du),
        support=Compact(R),
        name=f"smoothed_step(R={R:g},w={w:g})",
    )


def power_tail(exponent: float = 3.0, scale: float = 1.0) -> RadialProfile:
    """(1 + (rho/s)^2)^(-exponent/2), asymptotically rho^-exponent.

    Useful for exercising tail truncation and divergence detection: the
    weighted p-norm with effective dimension D is finite iff exponent * p > D.
    """
    if exponent <= 0.0 or scale <= 0.0:
        raise InputError("power_tail exponent and scale must be positive")
    s, e = float(scale), float(exponent)

    def u(r):
        return (1.0 + (r / s) ** 2) ** (-e / 2.0)

    def du(r):
        return -e * (r / s**2) * (1.0 + (r / s) ** 2) ** (-e / 2.0 - 1.0)

    return RadialProfile(
        value=_as_radial(u),
        derivative=_as_radial(du),
        support=Decaying(tail_exponent=e, radius=s),
        name=f"power_tail(e={e:g},s={s:g})",
    )


_GENERATORS = {
    "bump": bump,
    "gaussian": gaussian,
    "tent": tent,
    "step": step,
    "smoothed_step": smoothed_step,
    "power_tail": power_tail,
}


def make_profile(generator: str, *params: float) -> RadialProfile:
    """Build a named profile; see ``generator_names()`` for the registry."""
    if generator not in _GENERATORS:
        raise InputError(
            f"unknown profile generator '{generator}'; "
            f"known: {', '.join(sorted(_GENERATORS))}"
        )
    try:
        return _GENERATORS[generator](*params)
    except TypeError as exc:
        raise InputError(f"bad parameters for profile '{generator}': {exc}") from None


def generator_names() -> tuple[str, ...]:
    return tuple(sorted(_GENERATORS))
