"""Weighted Lebesgue norms of radial functions.

For a monomial weight with exponent tuple A and effective dimension
D = len(A) + sum(A), the norm of a radial u reduces to a one-dimensional
integral,

    ||u||_{p, A} = ( sigma_A * int_0^inf rho^(D-1) |u(rho)|^p d rho )^(1/p),

where sigma_A = 2 prod Gamma((a_i + 1)/2) / Gamma(D/2) is the weighted
surface mass of the unit sphere.  For radial u the gradient norm uses
|u'(rho)| in place of |u(rho)|.

Large p is handled in log space: |u|^p is rescaled by its maximum so the
quadrature only ever sees O(1) integrands, and the peak is pre-seeded with
geometrically shrinking panel edges so it cannot slip between Kronrod
nodes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DomainError
from .exponents import ExponentTuple, as_exponent_tuple
from .gammafn import log_gamma
from .profiles import Compact, RadialProfile
from .quadrature import (
    DEFAULT_REL_TOL,
    QuadratureDiagnostics,
    extend_tail,
    integrate_power_weighted,
)

_SEED_P_THRESHOLD = 128.0
_SCAN_POINTS = 2049


@lru_cache(maxsize=256)
def _log_angular_mass(entries: tuple) -> float:
    A = ExponentTuple(entries)
    D = A.effective_dimension
    return (
        math.log(2.0)
        + sum(log_gamma((a + 1.0) / 2.0) for a in A)
        - log_gamma(D / 2.0)
    )


def angular_mass(A) -> float:
    """Weighted measure of the unit sphere, sigma_A."""
    A = as_exponent_tuple(A)
    return math.exp(_log_angular_mass(A.entries))


@dataclass(frozen=True)
class WeightedMeasure:
    """The measure x^A dx on R^len(A), with its radial reduction data."""

    A: ExponentTuple

    def __post_init__(self):
        object.__setattr__(self, "A", as_exponent_tuple(self.A))

    @property
    def effective_dimension(self) -> float:
        return self.A.effective_dimension

    @property
    def angular_mass(self) -> float:
        return angular_mass(self.A)

    def ball_mass(self, radius: float) -> float:
        """Measure of the centered ball of the given radius."""
        if radius < 0.0:
            raise DomainError(f"radius must be nonnegative, got {radius}")
        D = self.effective_dimension
        return self.angular_mass * radius**D / D

    def lp_norm(self, u: RadialProfile, p: float, **kw) -> float:
        return weighted_lp_norm(u, self.A, p, **kw)


def _scan_grid(profile: RadialProfile) -> np.ndarray:
    if isinstance(profile.support, Compact):
        return np.linspace(0.0, profile.support.radius, _SCAN_POINTS)
    return np.linspace(0.0, 4.0 * profile.support.radius, _SCAN_POINTS)


def _peak_edges(rho_star: float, span: float) -> list[float]:
    """Panel edges accumulating geometrically onto the peak from both sides."""
    edges = []
    for k in range(1, 41):
        off = span * 2.0**-k
        edges.append(rho_star - off)
        edges.append(rho_star + off)
    return [e for e in edges if e > 0.0]


def radial_integral(
    fn,
    gamma_exp: float,
    profile: RadialProfile,
    *,
    rel_tol: float = DEFAULT_REL_TOL,
    initial_edges=None,
) -> tuple[float, QuadratureDiagnostics]:
    """int_0^inf rho^gamma_exp fn(rho) d rho over the profile's support.

    ``fn`` is any vectorized function derived from the profile (the caller
    owns the pointwise transform); the support descriptor decides whether a
    geometric tail extension is appended.
    """
    support = profile.support
    if isinstance(support, Compact):
        return integrate_power_weighted(
            fn,
            gamma_exp,
            support.radius,
            rel_tol=rel_tol,
            initial_edges=initial_edges,
        )
    start = support.radius
    if initial_edges is not None:
        seeded_max = max((x for x in initial_edges if math.isfinite(x)), default=0.0)
        start = max(start, 2.0 * seeded_max)
    head, diag = integrate_power_weighted(
        fn,
        gamma_exp,
        start,
        rel_tol=rel_tol,
        initial_edges=initial_edges,
    )

    def weighted(t):
        t = np.asarray(t, dtype=float)
        return t**gamma_exp * np.asarray(fn(t), dtype=float)

    tail, tdiag = extend_tail(
        weighted,
        start,
        rel_tol=rel_tol,
        base_value=head,
    )
    diag.merge(tdiag)
    return head + tail, diag


def _norm_from_values(
    values_fn,
    profile: RadialProfile,
    A: ExponentTuple,
    p: float,
    rel_tol: float,
) -> tuple[float, QuadratureDiagnostics]:
    D = A.effective_dimension
    grid = _scan_grid(profile)
    sample = np.abs(np.asarray(values_fn(grid), dtype=float))
    peak = float(np.max(sample))
    if peak == 0.0 or not np.isfinite(peak):
        if peak == 0.0:
            return 0.0, QuadratureDiagnostics()
        raise DomainError("profile takes non-finite values on its support")
    rho_star = float(grid[int(np.argmax(sample))])

    def g(r):
        return (np.abs(np.asarray(values_fn(r), dtype=float)) / peak) ** p

    edges = None
    if p >= _SEED_P_THRESHOLD:
        span = grid[-1] if rho_star > 0.0 else grid[-1] * 0.5
        edges = _peak_edges(max(rho_star, grid[1]), span)
    integral, diag = radial_integral(g, D - 1.0, profile, rel_tol=rel_tol, initial_edges=edges)
    if integral <= 0.0:
        return 0.0, diag
    log_norm = math.log(peak) + (_log_angular_mass(A.entries) + math.log(integral)) / p
    return math.exp(log_norm), diag


def weighted_lp_norm(
    u: RadialProfile,
    A,
    p: float,
    *,
    rel_tol: float = DEFAULT_REL_TOL,
    details: bool = False,
):
    """||u||_{p, A} for a radial profile u.

    Parameters
    ----------
    u : RadialProfile
        Radial function with declared support.
    A : exponent tuple or sequence
        Monomial weight exponents, all nonnegative.
    p : float
        Lebesgue exponent, p >= 1.
    rel_tol : float, optional
        Relative tolerance requested from the quadrature.
    details : bool, optional
        When true, return ``(value, diagnostics)``.

    Returns
    -------
    float or (float, QuadratureDiagnostics)

    Raises
    ------
    DivergentIntegralError
        If the tail blocks stop decaying (the norm is infinite or nearly so).
    QuadratureError
        If the requested tolerance cannot be certified.
    """
    A = as_exponent_tuple(A)
    if not (p >= 1.0 and math.isfinite(p)):
        raise DomainError(f"norm exponent p must satisfy 1 <= p < inf, got {p}")
    value, diag = _norm_from_values(u.value, u, A, p, rel_tol)
    return (value, diag) if details else value


def weighted_gradient_norm(
    u: RadialProfile,
    A,
    p: float,
    *,
    rel_tol: float = DEFAULT_REL_TOL,
    details: bool = False,
):
    """|| |grad u| ||_{p, A}; for radial u this is the norm of |u'(rho)|."""
    A = as_exponent_tuple(A)
    if not (p >= 1.0 and math.isfinite(p)):
        raise DomainError(f"norm exponent p must satisfy 1 <= p < inf, got {p}")
    value, diag = _norm_from_values(u.derivative, u, A, p, rel_tol)
    return (value, diag) if details else value


def sup_norm(u: RadialProfile) -> float:
    """Grid-scanned supremum of |u| (refined once around the peak)."""
    grid = _scan_grid(u)
    vals = np.abs(np.asarray(u.value(grid), dtype=float))
    i = int(np.argmax(vals))
    lo = grid[max(i - 1, 0)]
    hi = grid[min(i + 1, len(grid) - 1)]
    fine = np.linspace(lo, hi, 513)
    return float(max(np.max(vals), np.max(np.abs(np.asarray(u.value(fine), dtype=float)))))
