"""Parametrization, energy levels, and potentials of the deformed
trigonometric Poschl-Teller oscillator family.

Each member of the family lives on the open interval
D = (-pi/2w, pi/2w) with w = epsilon*omega, and is labelled by the
envelope exponent k > 1, the positive root of

    k(k-1) = m^2 / (epsilon^2 w^2).

All supersymmetry formulas are stated in k, so k is the stored
parameter and the mass m is derived.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "K_MAX",
    "ModelParams",
    "Level",
    "Spectrum",
    "k_from_mass",
    "mass_from_k",
    "energy_squared",
    "energy",
    "delta_eigenvalue",
    "spectrum",
    "v_pt",
    "v_minus",
    "v_plus",
    "superpotential",
]

# Upper end of the admitted k range; values near 1 are allowed for limit
# studies even though they correspond to m -> 0.
K_MAX = 1.0e8


@dataclass(frozen=True)
class ModelParams:
    """The triple (omega, epsilon, k) fixing one member of the family.

    omega   -- oscillator frequency recovered in the large-k limit (> 0)
    epsilon -- metric deformation parameter (> 0); epsilon = 1 is the
               anti-de Sitter oscillator with equidistant spectrum
    k       -- envelope exponent (> 1); controls the cos^k boundary decay
    """

    omega: float
    epsilon: float
    k: float

    def __post_init__(self):
        if not self.omega > 0.0:
            raise ValueError("omega must be positive")
        if not self.epsilon > 0.0:
            raise ValueError("epsilon must be positive")
        if not self.k > 1.0:
            raise ValueError("k must exceed 1")
        if self.k > K_MAX:
            raise ValueError(f"k must not exceed {K_MAX:g}")

    @property
    def hat_omega(self) -> float:
        """Scaled frequency w = epsilon*omega setting the domain size."""
        return self.epsilon * self.omega

    @property
    def half_width(self) -> float:
        """Half width pi/(2w) of the open domain D."""
        return math.pi / (2.0 * self.hat_omega)

    def with_k(self, k: float) -> "ModelParams":
        """Same (omega, epsilon) at another hierarchy level k."""
        return dataclasses.replace(self, k=k)


@dataclass(frozen=True)
class Level:
    n: int
    e_squared: float
    delta_eig: float


@dataclass(frozen=True)
class Spectrum:
    """Energy-squared levels E_n^2 with the matching dimensionless
    eigenvalues n(n+2k) of the rescaled operator."""

    params: ModelParams
    levels: tuple[Level, ...]


def k_from_mass(m: float, omega: float, epsilon: float) -> float:
    """Envelope exponent k = (1 + sqrt(1 + 4 m^2/(eps^2 w^2)))/2.

    The positive root of k(k-1) = m^2/(eps^2 w^2); always > 1 for m > 0.
    m <= 0 is rejected because k would degenerate to 1.
    """
    if not m > 0.0:
        raise ValueError("mass must be positive (k degenerates to 1 as m -> 0)")
    if not omega > 0.0:
        raise ValueError("omega must be positive")
    if not epsilon > 0.0:
        raise ValueError("epsilon must be positive")
    hat_omega = epsilon * omega
    ratio = m / (epsilon * hat_omega)
    # hypot keeps full precision in sqrt(1 + 4*ratio^2)
    return 0.5 * (1.0 + math.hypot(1.0, 2.0 * ratio))


def mass_from_k(params: ModelParams) -> float:
    """Mass m = sqrt(k(k-1)) * epsilon * w of the model."""
    return math.sqrt(params.k * (params.k - 1.0)) * params.epsilon * params.hat_omega


def energy_squared(params: ModelParams, n: int) -> float:
    """E_n^2 = w^2 [(n+k)^2 + (eps^2 - 1) k(k-1)] for level n >= 0."""
    n = _check_level(n)
    k = params.k
    w2 = params.hat_omega ** 2
    return w2 * ((n + k) ** 2 + (params.epsilon ** 2 - 1.0) * k * (k - 1.0))


def energy(params: ModelParams, n: int) -> float:
    """Positive branch E_n = sqrt(E_n^2)."""
    return math.sqrt(energy_squared(params, n))


def delta_eigenvalue(params: ModelParams, n: int) -> float:
    """Eigenvalue n(n+2k) of the rescaled operator, = (E_n^2 - E_0^2)/w^2."""
    n = _check_level(n)
    return n * (n + 2.0 * params.k)


def spectrum(params: ModelParams, n_max: int) -> Spectrum:
    """Levels n = 0..n_max as a Spectrum record."""
    n_max = _check_level(n_max)
    levels = tuple(
        Level(n, energy_squared(params, n), delta_eigenvalue(params, n))
        for n in range(n_max + 1)
    )
    return Spectrum(params, levels)


def v_pt(params: ModelParams, x):
    """Trigonometric Poschl-Teller potential k(k-1) w^2 tan^2(wx)."""
    t2 = _tan_sq(params, x)
    k = params.k
    return k * (k - 1.0) * params.hat_omega ** 2 * t2


def v_minus(params: ModelParams, x):
    """Dimensionless potential V_-(k,x) = k(k-1) tan^2(wx) - k.

    The rescaled operator -(1/w^2) d^2/dx^2 + V_-(k) has spectrum n(n+2k).
    """
    t2 = _tan_sq(params, x)
    k = params.k
    return k * (k - 1.0) * t2 - k


def v_plus(params: ModelParams, x):
    """Supersymmetric partner V_+(k,x) = k(k+1) tan^2(wx) + k.

    Satisfies V_+ = -V_- + 2 W^2 pointwise and the shape-invariance
    relation V_+(k,x) = V_-(k+1,x) + 2k + 1.
    """
    t2 = _tan_sq(params, x)
    k = params.k
    return k * (k + 1.0) * t2 + k


def superpotential(params: ModelParams, x):
    """Superpotential W(k,x) = k tan(wx), the negative log-derivative of
    the ground state in units of w."""
    x = _check_interior(params, x)
    w = params.hat_omega
    out = params.k * np.tan(w * x)
    return out if out.ndim else float(out)


def _check_level(n) -> int:
    if n != int(n) or n < 0:
        raise ValueError("level index n must be a nonnegative integer")
    return int(n)


def _check_interior(params: ModelParams, x) -> np.ndarray:
    """Positions must stay strictly inside D; the potentials are singular
    at the boundary."""
    x = np.asarray(x, dtype=float)
    if np.any(np.abs(x) >= params.half_width):
        raise ValueError("x must satisfy |x| < half_width (potential singular at boundary)")
    return x


def _tan_sq(params: ModelParams, x):
    x = _check_interior(params, x)
    t = np.tan(params.hat_omega * x)
    out = t * t
    return out if out.ndim else float(out)
