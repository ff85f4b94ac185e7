"""Monomial weights and the exponent algebra of the weighted Sobolev embedding.

A monomial weight on R^m is x |-> prod_i |x_i|^{A(i)} with all A(i) >= 0
(convention 0^0 = 1).  Its effective dimension is

    D(A) = m + sum_i A(i),

which plays the role of the space dimension everywhere: the embedding
exponent law reads q = D(B) * p / (D(A) - p) for 1 <= p < D(A).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, InputError

#: exponents closer to a domain endpoint than this are rejected
ENDPOINT_GUARD = 1e-12

#: relative tolerance for the computed validity flag on SobolevFour
FOUR_VALID_RTOL = 1e-14


@dataclass(frozen=True)
class ExponentTuple:
    """Non-negative exponents of a monomial weight on R^m.

    Parameters
    ----------
    entries : tuple of float
        The exponents A(1), ..., A(m); m >= 1, every entry finite and >= 0.
    """

    entries: tuple[float, ...]

    def __post_init__(self):
        entries = tuple(float(a) for a in self.entries)
        if len(entries) < 1:
            raise DomainError("exponent tuple needs at least one entry")
        for a in entries:
            if not math.isfinite(a) or a < 0:
                raise DomainError(f"exponent entries must be finite and >= 0, got {a}")
        object.__setattr__(self, "entries", entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def dimension(self) -> int:
        """Ambient dimension m."""
        return len(self.entries)

    @property
    def effective_dimension(self) -> float:
        """D(A) = m + sum_i A(i)."""
        return len(self.entries) + float(sum(self.entries))

    @property
    def positive_count(self) -> int:
        """Number of strictly positive entries."""
        return sum(1 for a in self.entries if a > 0)

    def to_json(self) -> str:
        """Serialize as a JSON array of numbers."""
        return json.dumps(list(self.entries))

    @classmethod
    def from_json(cls, text: str) -> "ExponentTuple":
        data = json.loads(text)
        if not isinstance(data, list):
            raise InputError("exponent tuple JSON must be an array")
        return cls(tuple(data))


def as_exponent_tuple(A) -> ExponentTuple:
    """Coerce a sequence of numbers (or an ExponentTuple) to ExponentTuple."""
    if isinstance(A, ExponentTuple):
        return A
    return ExponentTuple(tuple(A))


def effective_dimension(A) -> float:
    """Effective dimension D(A) = m + sum_i A(i)."""
    return as_exponent_tuple(A).effective_dimension


def monomial_weight(A, x) -> np.ndarray | float:
    """Evaluate prod_i |x_i|^{A(i)} with the 0^0 = 1 convention.

    Parameters
    ----------
    A : ExponentTuple or sequence of float
    x : array_like, shape (m,) or (n, m)

    Returns
    -------
    float or ndarray of shape (n,)
    """
    A = as_exponent_tuple(A)
    x = np.asarray(x, dtype=float)
    single = x.ndim == 1
    pts = np.atleast_2d(x)
    if pts.shape[1] != A.dimension:
        raise DomainError(
            f"point dimension {pts.shape[1]} does not match weight dimension {A.dimension}"
        )
    out = np.ones(pts.shape[0])
    for i, a in enumerate(A.entries):
        if a == 0.0:
            continue  # |x_i|^0 == 1 even at x_i == 0
        out *= np.abs(pts[:, i]) ** a
    return float(out[0]) if single else out


def _check_p_interior(p: float, lo: float, hi: float) -> float:
    p = float(p)
    if not math.isfinite(p):
        raise DomainError(f"exponent p must be finite, got {p}")
    if p < lo - ENDPOINT_GUARD or p > hi + ENDPOINT_GUARD:
        raise DomainError(f"p = {p} outside [{lo}, {hi}]")
    if abs(p - lo) < ENDPOINT_GUARD and p != lo:
        raise DomainError(f"p = {p} within {ENDPOINT_GUARD} of endpoint {lo}")
    if hi - p < ENDPOINT_GUARD:
        raise DomainError(f"p = {p} within {ENDPOINT_GUARD} of endpoint {hi}")
    return p


def sobolev_exponent(A, B, p: float) -> float:
    """Embedding exponent q = D(B) * p / (D(A) - p).

    Requires 1 <= p < D(A) and D(A) > 1.  With B = A this is the exponent
    for which the weighted Sobolev inequality is scale balanced; for B != A
    the value is returned without any validity claim.
    """
    A = as_exponent_tuple(A)
    B = as_exponent_tuple(B)
    DA = A.effective_dimension
    DB = B.effective_dimension
    if DA <= 1.0:
        raise DomainError(f"effective dimension D(A) = {DA} must exceed 1")
    p = _check_p_interior(p, 1.0, DA)
    if p < 1.0:
        raise DomainError(f"p = {p} must be >= 1")
    return DB * p / (DA - p)


def sobolev_exponent_inverse(A, q: float) -> float:
    """Inverse exponent law p(q) = q * D / (q + D) for the B = A case.

    Maps (D/(D-1), inf) back onto (1, D); q at or below D/(D-1) is rejected.
    """
    A = as_exponent_tuple(A)
    D = A.effective_dimension
    if D <= 1.0:
        raise DomainError(f"effective dimension D(A) = {D} must exceed 1")
    q = float(q)
    if q == math.inf:
        return D
    q_lo = D / (D - 1.0)
    if q <= q_lo + ENDPOINT_GUARD:
        raise DomainError(f"q = {q} must exceed D/(D-1) = {q_lo}")
    return q * D / (q + D)


def trace_exponent(A, B, r: int, p: float) -> float:
    """Trace embedding exponent q = D_r(B) * p / (D(A) - p).

    A lives on R^d, B on the r-dimensional trace subspace (so B has r
    entries and D_r(B) = r + sum B(i)).  r = d is admitted and reproduces
    sobolev_exponent; r > d is rejected.
    """
    A = as_exponent_tuple(A)
    B = as_exponent_tuple(B)
    d = A.dimension
    r = int(r)
    if r < 1 or r > d:
        raise InputError(f"trace dimension r = {r} must satisfy 1 <= r <= d = {d}")
    if B.dimension != r:
        raise InputError(
            f"trace exponent tuple has {B.dimension} entries, expected r = {r}"
        )
    DA = A.effective_dimension
    if DA <= 1.0:
        raise DomainError(f"effective dimension D(A) = {DA} must exceed 1")
    p = _check_p_interior(p, 1.0, DA)
    return B.effective_dimension * p / (DA - p)


@dataclass(frozen=True)
class SobolevFour:
    """An admissible quadruple (A, B, p, q) of the embedding.

    The ``valid`` flag is computed, never user-set: it records whether q
    matches the exponent law D(B) * p / (D(A) - p) to relative tolerance
    1e-14.  Construction rejects p >= D(A) outright.
    """

    A: ExponentTuple
    B: ExponentTuple
    p: float
    q: float
    valid: bool = field(init=False)

    def __post_init__(self):
        A = as_exponent_tuple(self.A)
        B = as_exponent_tuple(self.B)
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)
        p = float(self.p)
        q = float(self.q)
        if p >= A.effective_dimension:
            raise DomainError(
                f"p = {p} must lie below D(A) = {A.effective_dimension}"
            )
        if p < 1.0:
            raise DomainError(f"p = {p} must be >= 1")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        q_law = sobolev_exponent(A, B, p) if p >= 1.0 else math.nan
        ok = math.isfinite(q) and abs(q - q_law) <= FOUR_VALID_RTOL * abs(q_law)
        object.__setattr__(self, "valid", ok)

    @classmethod
    def from_p(cls, A, B, p: float) -> "SobolevFour":
        """Construct with q supplied by the exponent law."""
        q = sobolev_exponent(A, B, p)
        return cls(as_exponent_tuple(A), as_exponent_tuple(B), p, q)

    def to_json(self) -> str:
        return json.dumps(
            {
                "A": list(self.A.entries),
                "B": list(self.B.entries),
                "p": self.p,
                "q": self.q,
                "valid": self.valid,
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "SobolevFour":
        data = json.loads(text)
        try:
            return cls(
                ExponentTuple(tuple(data["A"])),
                ExponentTuple(tuple(data["B"])),
                float(data["p"]),
                float(data["q"]),
            )
        except KeyError as exc:
            raise InputError(f"missing field in SobolevFour JSON: {exc}") from exc
