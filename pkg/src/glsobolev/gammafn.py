"""Lanczos evaluation of log Gamma on the positive half line.

The kernel is the 14-term rational series with g = 607/128, which keeps the
absolute error of log Gamma within a few ulp of the scale of the result
(relative error of Gamma itself a few times 1e-13 at worst on (0, 200]).
Everything downstream that needs Gamma factors goes through
:func:`log_gamma` so ratios of large Gamma values can be assembled in log
space without overflow.
"""

from __future__ import annotations

import math

from .errors import DomainError

_LANCZOS_G = 4.7421875  # 607/128
_SQRT_2PI = 2.5066282746310005
_SER0 = 0.999999999999997092
_COEFFS = (
    57.1562356658629235,
    -59.5979603554754912,
    14.1360979747417471,
    -0.491913816097620199,
    0.339946499848118887e-4,
    0.465236289270485756e-4,
    -0.983744753048795646e-4,
    0.158088703224912494e-3,
    -0.210264441724104883e-3,
    0.217439618115212643e-3,
    -0.164318106536763890e-3,
    0.844182239838527433e-4,
    -0.261908384015814087e-4,
    0.368991826595316234e-5,
)


def log_gamma(x: float) -> float:
    """Natural log of Gamma(x) for x > 0.

    Parameters
    ----------
    x : float
        Strictly positive argument.

    Returns
    -------
    float

    Raises
    ------
    DomainError
        If x <= 0 or x is not finite.
    """
    x = float(x)
    if not math.isfinite(x) or x <= 0.0:
        raise DomainError(f"log_gamma requires x > 0, got {x}")
    tmp = x + _LANCZOS_G + 0.5
    tmp = (x + 0.5) * math.log(tmp) - tmp
    ser = _SER0
    y = x
    for c in _COEFFS:
        y += 1.0
        ser += c / y
    return tmp + math.log(_SQRT_2PI * ser / x)


def gamma(x: float) -> float:
    """Gamma(x) for x > 0, via exp(log_gamma(x))."""
    return math.exp(log_gamma(x))
