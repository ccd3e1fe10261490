"""Exact bound-state wavefunctions: envelope-times-polynomial form.

Every bound state of the family is

    U(x) = cos^kappa(wx) * P(sin wx),

with kappa > 1 and P a real polynomial of definite parity.  Level n
(n = 2*n_s + s, s in {0,1}) has kappa = k and P of degree n obtained
from the terminating Gauss series

    sin^s(wx) * F(-n_s, k+s+n_s; s+1/2; sin^2 wx).

Coefficients are extracted exactly from the term recurrence (never by
sampling and fitting), normalization is numerical quadrature over D.

Sign convention: the highest-order coefficient of P is positive.  The
series itself fixes degree and parity but not the overall sign; this
choice makes the lowering/raising maps hold with positive square-root
factors along the whole hierarchy, so ladder identities are sign-free.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as npoly

from .model import ModelParams
from .numeric import log_gamma, quadrature

__all__ = [
    "MAX_LEVEL",
    "Wavefunction",
    "hypergeometric_terminating",
    "hypergeometric_coefficients",
    "build_eigenfunction",
    "ground_state",
    "evaluate",
    "evaluate_envelope_form",
    "inner_product",
]

# Above this level the exact coefficients risk double-precision overflow;
# rejected rather than silently degraded.
MAX_LEVEL = 64


@dataclass(frozen=True)
class Wavefunction:
    """Immutable envelope-times-polynomial wavefunction.

    coeffs holds c_0..c_d of P(s) = sum c_j s^j ascending, s = sin(wx);
    trailing zeros are trimmed so c_d != 0.  An empty coeffs array is the
    zero function (the result of annihilating a ground state).
    """

    params: ModelParams
    kappa: float
    coeffs: np.ndarray

    def __post_init__(self):
        if not self.kappa > 1.0:
            raise ValueError("kappa must exceed 1")
        c = np.atleast_1d(np.asarray(self.coeffs, dtype=float))
        if c.size and not np.all(np.isfinite(c)):
            raise ValueError("coefficients must be finite")
        nz = np.nonzero(c)[0]
        c = c[: nz[-1] + 1] if nz.size else np.empty(0)
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @property
    def is_zero(self) -> bool:
        return self.coeffs.size == 0

    @property
    def degree(self) -> int:
        """Polynomial degree; -1 for the zero function."""
        return self.coeffs.size - 1

    def __call__(self, x):
        return evaluate(self, x)


def hypergeometric_terminating(n_s: int, b: float, c: float, z):
    """Terminating series F(-n_s, b; c; z) = sum_{j<=n_s} of
    (-n_s)_j (b)_j / ((c)_j j!) * z^j, summed by the term recurrence.

    Exact polynomial in z, no truncation beyond rounding.  c must not be
    a nonpositive integer.  z may be a scalar or ndarray.
    """
    _check_series_args(n_s, c)
    z = np.asarray(z, dtype=float)
    total = np.ones_like(z)
    term = np.ones_like(z)
    for j in range(n_s):
        term = term * ((j - n_s) * (b + j)) / ((c + j) * (j + 1.0)) * z
        total = total + term
    return total if total.ndim else float(total)


def hypergeometric_coefficients(n_s: int, b: float, c: float) -> np.ndarray:
    """Coefficients a_0..a_{n_s} of F(-n_s, b; c; z) as a polynomial in z."""
    _check_series_args(n_s, c)
    a = np.empty(n_s + 1)
    a[0] = 1.0
    for j in range(n_s):
        a[j + 1] = a[j] * ((j - n_s) * (b + j)) / ((c + j) * (j + 1.0))
    return a


def _check_series_args(n_s: int, c: float):
    if n_s != int(n_s) or n_s < 0:
        raise ValueError("series order n_s must be a nonnegative integer")
    if c <= 0.0 and c == int(c):
        raise ValueError("lower parameter c must not be a nonpositive integer")


def build_eigenfunction(params: ModelParams, n: int) -> Wavefunction:
    """Normalized level-n eigenfunction U_{k,n} with kappa = params.k.

    Parity s = n mod 2, series order n_s = (n - s)/2; the polynomial part
    is sin^s * F(-n_s, k+s+n_s; s+1/2; sin^2), expanded exactly into
    monomial coefficients.  Unit L2 norm by quadrature; highest-order
    coefficient positive.
    """
    n = _check_build_level(n)
    s = n % 2
    n_s = (n - s) // 2
    series = hypergeometric_coefficients(n_s, params.k + s + n_s, s + 0.5)
    coeffs = np.zeros(n + 1)
    coeffs[s::2] = series
    raw = Wavefunction(params, params.k, coeffs)
    scale = 1.0 / math.sqrt(inner_product(raw, raw))
    if raw.coeffs[-1] < 0.0:
        scale = -scale
    return Wavefunction(params, params.k, raw.coeffs * scale)


def ground_state(params: ModelParams, k_level: float | None = None) -> Wavefunction:
    """Closed-form normalized ground state at hierarchy level k_level
    (default params.k):

        U(x) = (w^2/pi)^(1/4) * sqrt(Gamma(k+1)/Gamma(k+1/2)) * cos^k(wx).

    The gamma ratio is evaluated in log space.
    """
    k = params.k if k_level is None else float(k_level)
    if not k > 1.0:
        raise ValueError("k_level must exceed 1")
    norm = (params.hat_omega ** 2 / math.pi) ** 0.25 * math.exp(
        0.5 * (log_gamma(k + 1.0) - log_gamma(k + 0.5))
    )
    return Wavefunction(params, k, np.array([norm]))


def evaluate(wf: Wavefunction, x):
    """U(x) = cos^kappa(wx) * P(sin wx); Horner for P.

    Defined on the closed domain: |x| <= half_width, exactly 0 at the
    endpoints (kappa > 1 beats the polynomial there).
    """
    x = np.asarray(x, dtype=float)
    d = wf.params.half_width
    if np.any(np.abs(x) > d):
        raise ValueError("x must satisfy |x| <= half_width")
    out = evaluate_envelope_form(wf.params, wf.kappa, wf.coeffs, x)
    return out if out.ndim else float(out)


def evaluate_envelope_form(params: ModelParams, kappa: float, coeffs, x) -> np.ndarray:
    """cos^kappa(wx) * P(sin wx) for an arbitrary real exponent and
    coefficient array; no domain or kappa checks.

    Used by the operator algebra, where intermediate terms may carry
    exponents outside the bound-state range.  Points exactly at the
    boundary get envelope 0 by branch rather than via cos(pi/2) rounding.
    """
    shape = np.shape(x)
    x = np.atleast_1d(np.asarray(x, dtype=float))
    coeffs = np.asarray(coeffs, dtype=float)
    if coeffs.size == 0:
        return np.zeros(shape)
    w = params.hat_omega
    boundary = np.abs(x) == params.half_width
    # clamp: w*x can round a hair past pi/2 just inside the boundary
    c = np.maximum(np.cos(w * x), 0.0)
    envelope = np.where(boundary, 0.0, c ** kappa)
    vals = envelope * npoly.polyval(np.sin(w * x), coeffs)
    return vals.reshape(shape)


def inner_product(f: Wavefunction, g: Wavefunction, panels: int | None = None) -> float:
    """L2 scalar product over D by composite Gauss-Legendre quadrature.

    Both functions must live on the same domain (equal hat_omega).  The
    default panel count grows with the combined polynomial degree and
    holds absolute error below ~1e-12 up to combined degree 64.
    """
    if f.params.hat_omega != g.params.hat_omega:
        raise ValueError("wavefunctions live on different domains (hat_omega differs)")
    if f.is_zero or g.is_zero:
        return 0.0
    if panels is None:
        panels = 48 + (f.degree + g.degree) // 2
    d = f.params.half_width
    return quadrature(lambda x: evaluate(f, x) * evaluate(g, x), -d, d, panels)


def _check_build_level(n) -> int:
    if n != int(n) or n < 0:
        raise ValueError("level index n must be a nonnegative integer")
    if n > MAX_LEVEL:
        raise ValueError(f"level index n must not exceed {MAX_LEVEL}")
    return int(n)
