"""Lowering/raising operators, the rescaled second-order operator, and
the shape-invariance hierarchy.

On envelope-times-polynomial functions U = cos^kappa(wx) P(sin wx) the
first-order operators

    A_k   = (1/w) d/dx + k tan(wx)
    A_k^+ = -(1/w) d/dx + k tan(wx)

act exactly as polynomial maps.  With s = sin(wx):

    A_k   (cos^kappa P) = cos^(kappa-1) [ (k-kappa) s P + (1-s^2) P' ]
    A_k^+ (cos^kappa P) = cos^(kappa-1) [ (k+kappa) s P - (1-s^2) P' ]

For the matched envelope kappa = k the lowering rule collapses to
cos^(k+1) P', and for kappa = k+1 the raising rule gives
cos^k [ (2k+1) s P - (1-s^2) P' ].  The public lower/raise_ operations
implement those matched rules; the general forms back the commutator
check.  Operators act on exact coefficients (polynomial calculus);
finite differences exist only as a test oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as npoly

from .model import ModelParams
from .numeric import log_gamma
from .wavefun import Wavefunction, evaluate_envelope_form, ground_state

__all__ = [
    "LadderContext",
    "lower",
    "raise_",
    "apply_delta",
    "factorization_residual",
    "commutator_check",
    "build_from_ground",
]

_ONE_MINUS_S2 = np.array([1.0, 0.0, -1.0])


@dataclass(frozen=True)
class LadderContext:
    """Operator pair (A_k, A_k^+) at hierarchy level k_level; the level
    runs over k0, k0+1, k0+2, ... along a hierarchy."""

    params: ModelParams
    k_level: float

    def __post_init__(self):
        if not self.k_level > 1.0:
            raise ValueError("k_level must exceed 1")


def lower(ctx: LadderContext, wf: Wavefunction) -> Wavefunction:
    """A_k applied to a matched-envelope function: cos^k P -> cos^(k+1) P'.

    Annihilates the ground state (constant P).  On a normalized level-n
    eigenfunction the result is sqrt(n(n+2k)) * U_{k+1,n-1}.
    """
    _check_envelope(wf, ctx.k_level, "lower")
    if wf.is_zero or wf.degree == 0:
        return Wavefunction(wf.params, ctx.k_level + 1.0, np.empty(0))
    return Wavefunction(wf.params, ctx.k_level + 1.0, npoly.polyder(wf.coeffs))


def raise_(ctx: LadderContext, wf: Wavefunction) -> Wavefunction:
    """A_k^+ applied to a kappa = k+1 function:
    cos^(k+1) Q -> cos^k [ (2k+1) s Q - (1-s^2) Q' ].

    Degree goes up by exactly one.  On a normalized U_{k+1,n-1} the
    result is sqrt(n(n+2k)) * U_{k,n}.
    """
    _check_envelope(wf, ctx.k_level + 1.0, "raise_")
    if wf.is_zero:
        return Wavefunction(wf.params, ctx.k_level, np.empty(0))
    q = wf.coeffs
    out = npoly.polysub(
        npoly.polymul([0.0, 2.0 * ctx.k_level + 1.0], q),
        npoly.polymul(_ONE_MINUS_S2, npoly.polyder(q)) if q.size > 1 else [0.0],
    )
    return Wavefunction(wf.params, ctx.k_level, out)


def _check_envelope(wf: Wavefunction, expected: float, op: str):
    if wf.kappa != expected:
        raise ValueError(
            f"{op} expects envelope exponent {expected:g}, got {wf.kappa:g}"
        )


def apply_delta(params: ModelParams, kind: str, k_pot: float, wf: Wavefunction, x) -> np.ndarray:
    """Samples of (-(1/w^2) d^2/dx^2 + V) U at interior points x, with
    V = V_-(k_pot) ("minus") or V_+(k_pot) ("plus").

    The second derivative is taken analytically on the representation.
    Collecting powers of cos, with P evaluated at s = sin(wx):

        [kp(kp-+1) - kappa(kappa-1)] cos^(kappa-2) s^2 P
        + (kappa -+ kp) cos^kappa P
        + (2 kappa + 1) s cos^kappa P' - cos^(kappa+2) P''

    (upper signs for "minus", lower for "plus").  The leading bracket
    vanishes identically for the matched envelope, which avoids the
    near-boundary cancellation of the raw -U''/w^2 + V U form.
    """
    if kind == "minus":
        lead = k_pot * (k_pot - 1.0)
        mid = wf.kappa - k_pot
    elif kind == "plus":
        lead = k_pot * (k_pot + 1.0)
        mid = wf.kappa + k_pot
    else:
        raise ValueError(f"unknown potential kind {kind!r}")

    x = np.asarray(x, dtype=float)
    if np.any(np.abs(x) >= params.half_width):
        raise ValueError("x must be strictly interior")
    if wf.is_zero:
        return np.zeros(x.shape)

    kappa = wf.kappa
    p = wf.coeffs
    dp = npoly.polyder(p) if p.size > 1 else np.zeros(1)
    ddp = npoly.polyder(p, 2) if p.size > 2 else np.zeros(1)
    s = np.sin(params.hat_omega * x)
    c = np.cos(params.hat_omega * x)
    c2 = c * c
    c_kappa = c ** kappa
    pv = npoly.polyval(s, p)
    out = (
        (lead - kappa * (kappa - 1.0)) * c ** (kappa - 2.0) * s * s * pv
        + mid * c_kappa * pv
        + (2.0 * kappa + 1.0) * s * c_kappa * npoly.polyval(s, dp)
        - c_kappa * c2 * npoly.polyval(s, ddp)
    )
    return out


def factorization_residual(params: ModelParams, k: float, wf: Wavefunction, x=None) -> float:
    """Sup-norm residual of the factorization identities on a grid.

    For kappa = k checks (A_k^+ A_k) wf against the "minus" operator
    samples; for kappa = k+1 checks (A_k A_k^+) wf against "plus".  Both
    sides are exact, so the residual is rounding noise for polynomial
    inputs of moderate degree.
    """
    x = _default_grid(params) if x is None else np.asarray(x, dtype=float)
    ctx = LadderContext(params, k)
    if wf.kappa == k:
        composed = raise_(ctx, lower(ctx, wf))
        direct = apply_delta(params, "minus", k, wf, x)
    elif wf.kappa == k + 1.0:
        composed = lower(ctx, raise_(ctx, wf))
        direct = apply_delta(params, "plus", k, wf, x)
    else:
        raise ValueError("wf.kappa must equal k or k+1")
    lhs = evaluate_envelope_form(params, composed.kappa, composed.coeffs, x)
    return float(np.max(np.abs(lhs - direct), initial=0.0))


def commutator_check(params: ModelParams, k: float, test_fn: Wavefunction, x=None) -> float:
    """Scale-relative residual of [A_k, A_k^+] = 2k + (1/2k)(A_k + A_k^+)^2.

    A_k + A_k^+ multiplies by 2 W = 2k tan(wx), so the right side is
    multiplication by 2k (1 + tan^2 wx).  The left side is built from the
    general-envelope operator rules; intermediate exponents fall below
    the bound-state range, so raw (kappa, coeffs) pairs are used.
    """
    x = _default_grid(params) if x is None else np.asarray(x, dtype=float)
    if np.any(np.abs(x) >= params.half_width):
        raise ValueError("x must be strictly interior")
    kappa, p = test_fn.kappa, test_fn.coeffs
    if p.size == 0:
        return 0.0
    up_down = _general_lower(k, *_general_raise(k, kappa, p))
    down_up = _general_raise(k, *_general_lower(k, kappa, p))
    lhs = evaluate_envelope_form(params, up_down[0], up_down[1], x) - evaluate_envelope_form(
        params, down_up[0], down_up[1], x
    )
    t = np.tan(params.hat_omega * x)
    rhs = 2.0 * k * (1.0 + t * t) * evaluate_envelope_form(params, kappa, p, x)
    return float(np.max(np.abs(lhs - rhs) / (1.0 + np.abs(rhs))))


def _general_lower(k: float, kappa: float, p: np.ndarray):
    """A_k on cos^kappa P for arbitrary kappa: exponent drops by one."""
    dp = npoly.polyder(p) if p.size > 1 else [0.0]
    out = npoly.polyadd(
        npoly.polymul([0.0, k - kappa], p), npoly.polymul(_ONE_MINUS_S2, dp)
    )
    return kappa - 1.0, out


def _general_raise(k: float, kappa: float, p: np.ndarray):
    """A_k^+ on cos^kappa P for arbitrary kappa: exponent drops by one."""
    dp = npoly.polyder(p) if p.size > 1 else [0.0]
    out = npoly.polysub(
        npoly.polymul([0.0, k + kappa], p), npoly.polymul(_ONE_MINUS_S2, dp)
    )
    return kappa - 1.0, out


def build_from_ground(params: ModelParams, n: int, k_level: float | None = None) -> Wavefunction:
    """Level-n eigenfunction assembled by n raising steps from the
    closed-form ground state at level k+n:

        U_{k,n} = (1/sqrt(n!)) sqrt(Gamma(n+2k)/Gamma(2n+2k))
                  A_k^+ A_{k+1}^+ ... A_{k+n-1}^+ U_{k+n,0}.

    The gamma prefactor is evaluated in log space so levels up to the
    supported maximum cannot overflow.  Result matches
    build_eigenfunction up to rounding.
    """
    if n != int(n) or n < 0:
        raise ValueError("level index n must be a nonnegative integer")
    n = int(n)
    if n > 64:
        raise ValueError("level index n must not exceed 64")
    k = params.k if k_level is None else float(k_level)
    wf = ground_state(params, k + n)
    for j in range(n - 1, -1, -1):
        wf = raise_(LadderContext(params, k + j), wf)
    if n == 0:
        return wf
    log_pref = 0.5 * (
        log_gamma(n + 2.0 * k) - log_gamma(2.0 * n + 2.0 * k) - log_gamma(n + 1.0)
    )
    return Wavefunction(params, k, wf.coeffs * math.exp(log_pref))


def _default_grid(params: ModelParams, n: int = 10_000) -> np.ndarray:
    d = params.half_width
    h = 2.0 * d / (n + 1)
    return -d + h * np.arange(1, n + 1)
