"""Property suites tying the closed-form results to the numerical oracle,
with a machine-readable report.

Each suite measures a worst residual against a contractual tolerance;
a suite passes iff worst residual <= tolerance.  Suites are deterministic
given their inputs (random test polynomials use a fixed seed).
"""

from __future__ import annotations

import concurrent.futures
import datetime
import json
import math
from dataclasses import dataclass, field

import numpy as np

from . import model
from .ladder import (
    LadderContext,
    build_from_ground,
    commutator_check,
    factorization_residual,
    lower,
    raise_,
    apply_delta,
)
from .model import ModelParams, delta_eigenvalue, energy, mass_from_k, v_minus, v_plus
from .numeric import delta_eigenvalues_fd, interior_grid
from .wavefun import Wavefunction, build_eigenfunction, evaluate, inner_product

__all__ = [
    "DEFAULT_BATTERY",
    "SUITE_NAMES",
    "SuiteResult",
    "VerificationReport",
    "run_all",
    "run_nonrel_limit",
]

# Test fixtures spanning sub/super anti-de Sitter deformations and
# non-integer k; not physics claims.
DEFAULT_BATTERY = tuple(
    ModelParams(1.0, eps, k) for eps in (0.5, 1.0, 2.0) for k in (1.5, 2.0, 3.7, 10.0)
)

_TEST_FN_SEED = 20260809
_NONREL_KS = (1.0e2, 1.0e3, 1.0e4, 1.0e6)


@dataclass(frozen=True)
class SuiteResult:
    name: str
    status: str
    worst_residual: float
    tolerance: float
    params: tuple

    @staticmethod
    def make(name, worst, tol, params_used) -> "SuiteResult":
        status = "pass" if worst <= tol else "fail"
        return SuiteResult(name, status, float(worst), float(tol), tuple(params_used))


@dataclass(frozen=True)
class VerificationReport:
    suites: tuple[SuiteResult, ...]
    meta: dict = field(default_factory=dict)

    @property
    def all_passed(self) -> bool:
        return all(s.status == "pass" for s in self.suites)

    def to_dict(self) -> dict:
        return {
            "suites": [
                {
                    "name": s.name,
                    "status": s.status,
                    "worst_residual": s.worst_residual,
                    "tolerance": s.tolerance,
                    "params": [_params_dict(p) for p in s.params],
                }
                for s in self.suites
            ],
            "meta": self.meta,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        lines = [f"{'suite':<24} {'status':<6} {'worst residual':>14} {'tolerance':>10}"]
        for s in self.suites:
            lines.append(
                f"{s.name:<24} {s.status:<6} {s.worst_residual:>14.3e} {s.tolerance:>10.1e}"
            )
        lines.append("overall: " + ("all suites pass" if self.all_passed else "FAILURES present"))
        return "\n".join(lines)


def _params_dict(p: ModelParams) -> dict:
    return {"omega": p.omega, "epsilon": p.epsilon, "k": p.k}


# ----------------------------------------------------------------------
# individual suites
# ----------------------------------------------------------------------

def _suite_orthonormality(battery, n_max, grid_n, corr):
    worst = 0.0
    for p in battery:
        fns = [build_eigenfunction(p, n) for n in range(8)]
        for i in range(8):
            for j in range(i, 8):
                g = inner_product(fns[i], fns[j])
                worst = max(worst, abs(g - (1.0 if i == j else 0.0)))
    return worst, 1e-8


def _eigen_residual(p, kind, k_pot, wf, lam, x):
    vals = apply_delta(p, kind, k_pot, wf, x)
    ref = lam * evaluate(wf, x)
    return float(np.max(np.abs(vals - ref))) / (1.0 + lam)


def _suite_eigen_residual(battery, n_max, grid_n, corr):
    worst = 0.0
    for p in battery:
        x = interior_grid(p, 2001).points
        for n in range(n_max + 1):
            wf = build_eigenfunction(p, n)
            worst = max(worst, _eigen_residual(p, "minus", p.k, wf, delta_eigenvalue(p, n), x))
    return worst, 1e-8


def _suite_partner_eigen_residual(battery, n_max, grid_n, corr):
    worst = 0.0
    for p in battery:
        x = interior_grid(p, 2001).points
        up = p.with_k(p.k + 1.0)
        for n in range(1, n_max + 1):
            wf = build_eigenfunction(up, n - 1)
            lam = n * (n + 2.0 * p.k)
            worst = max(worst, _eigen_residual(p, "plus", p.k, wf, lam, x))
    return worst, 1e-8


def _suite_ladder(battery, n_max, grid_n, corr):
    worst = 0.0
    for p in battery:
        x = interior_grid(p, 2001).points
        ctx = LadderContext(p, p.k)
        up = p.with_k(p.k + 1.0)
        for n in range(1, n_max + 1):
            u_n = build_eigenfunction(p, n)
            u_down = build_eigenfunction(up, n - 1)
            factor = math.sqrt(n * (n + 2.0 * (p.k + corr)))
            lowered = lower(ctx, u_n)
            res = np.abs(evaluate(lowered, x) - factor * evaluate(u_down, x))
            worst = max(worst, float(np.max(res)))
            raised = raise_(ctx, u_down)
            res = np.abs(evaluate(raised, x) - factor * evaluate(u_n, x))
            worst = max(worst, float(np.max(res)))
    return worst, 1e-8


def _suite_shape_invariance(battery, n_max, grid_n, corr):
    worst = 0.0
    for p in battery:
        x = interior_grid(p, 10_000).points
        ref = v_minus(p.with_k(p.k + 1.0), x)
        res = np.abs(v_plus(p, x) - ref - (2.0 * p.k + 1.0)) / (1.0 + np.abs(ref))
        worst = max(worst, float(np.max(res)))
    return worst, 1e-10


def _random_test_fns(count=20, max_degree=8):
    rng = np.random.default_rng(_TEST_FN_SEED)
    fns = []
    for _ in range(count):
        deg = int(rng.integers(1, max_degree + 1))
        coeffs = rng.uniform(-1.0, 1.0, deg + 1)
        coeffs[-1] = coeffs[-1] or 1.0
        fns.append(coeffs)
    return fns


def _suite_factorization(battery, n_max, grid_n, corr):
    worst = 0.0
    for p in battery:
        x = interior_grid(p, 2001).points
        for coeffs in _random_test_fns():
            for kappa in (p.k, p.k + 1.0):
                wf = Wavefunction(p, kappa, coeffs)
                scale = 1.0 + float(np.max(np.abs(evaluate(wf, x))))
                worst = max(worst, factorization_residual(p, p.k, wf, x) / scale)
    return worst, 1e-8


def _suite_commutator(battery, n_max, grid_n, corr):
    worst = 0.0
    for p in battery:
        x = interior_grid(p, 2001).points
        for coeffs in _random_test_fns():
            wf = Wavefunction(p, p.k, coeffs)
            worst = max(worst, commutator_check(p, p.k, wf, x))
    return worst, 1e-8


def _suite_build_up(battery, n_max, grid_n, corr):
    worst = 0.0
    for p in battery:
        x = interior_grid(p, 2001).points
        for n in range(min(n_max, 16) + 1):
            direct = build_eigenfunction(p, n)
            chained = build_from_ground(p, n)
            res = np.abs(evaluate(chained, x) - evaluate(direct, x))
            worst = max(worst, float(np.max(res)))
    return worst, 1e-8


def _suite_numeric_cross_check(battery, n_max, grid_n, corr, richardson=False):
    worst = 0.0
    # eigenvalues n(n+2k) carry no omega/epsilon dependence, so one run
    # per distinct k covers the battery
    for k in sorted({p.k for p in battery}):
        p = ModelParams(1.0, 1.0, k)
        lam = delta_eigenvalues_fd(p, "minus", 5, grid_n, richardson=richardson)
        for n, lam_hat in enumerate(lam):
            exact = n * (n + 2.0 * k)
            worst = max(worst, abs(lam_hat - exact) / (1.0 + exact))
    return worst, (1e-6 if richardson else 1e-3)


def _suite_equidistance(battery, n_max, grid_n, corr):
    worst = 0.0
    for p in battery:
        q = p if p.epsilon == 1.0 else ModelParams(p.omega, 1.0, p.k)
        for n in range(17):
            worst = max(worst, abs(energy(q, n + 1) - energy(q, n) - q.omega))
    return worst, 1e-12


def _suite_nonrel_limit(battery, n_max, grid_n, corr):
    rows = run_nonrel_limit(1.0, 1.0, _NONREL_KS)
    worst = rows[-1].residuals[0]
    for n in range(6):
        seq = [row.residuals[n] for row in rows]
        if any(b >= a for a, b in zip(seq, seq[1:])):
            worst = math.inf
    return worst, 1e-5


_SUITES = (
    ("orthonormality", _suite_orthonormality),
    ("eigen_residual", _suite_eigen_residual),
    ("partner_eigen_residual", _suite_partner_eigen_residual),
    ("ladder", _suite_ladder),
    ("shape_invariance", _suite_shape_invariance),
    ("factorization", _suite_factorization),
    ("commutator", _suite_commutator),
    ("build_up", _suite_build_up),
    ("numeric_cross_check", _suite_numeric_cross_check),
    ("equidistance", _suite_equidistance),
    ("nonrel_limit", _suite_nonrel_limit),
)

SUITE_NAMES = tuple(name for name, _ in _SUITES)


# ----------------------------------------------------------------------
# orchestration
# ----------------------------------------------------------------------

def run_all(
    params_set=None,
    n_max: int = 16,
    grid_n: int = 4096,
    suites=None,
    richardson: bool = False,
    k_corruption: float = 0.0,
    max_workers: int = 1,
) -> VerificationReport:
    """Run the property suites and assemble a VerificationReport.

    params_set defaults to the fixture battery.  suites optionally
    selects a subset by name.  richardson sharpens the numeric
    cross-check from 1e-3 to 1e-6 at roughly double cost.  k_corruption
    is a test hook: it shifts k inside the expected ladder factors so a
    deliberate error makes the ladder suite fail.  Failures are recorded,
    never raised.
    """
    battery = tuple(params_set) if params_set is not None else DEFAULT_BATTERY
    if not battery:
        raise ValueError("params_set must not be empty")
    if n_max < 0 or n_max > 16:
        raise ValueError("n_max must be in 0..16")
    selected = _select_suites(suites)

    def run_one(item):
        name, fn = item
        kwargs = {"richardson": richardson} if name == "numeric_cross_check" else {}
        worst, tol = fn(battery, n_max, grid_n, k_corruption, **kwargs)
        return SuiteResult.make(name, worst, tol, battery)

    if max_workers > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=max_workers) as pool:
            results = tuple(pool.map(run_one, selected))
    else:
        results = tuple(run_one(item) for item in selected)

    meta = {
        "params_set": [_params_dict(p) for p in battery],
        "n_max": n_max,
        "grid_n": grid_n,
        "richardson": richardson,
        "timestamp": datetime.datetime.now(datetime.timezone.utc).isoformat(),
    }
    return VerificationReport(results, meta)


def _select_suites(names):
    if names is None:
        return _SUITES
    names = [names] if isinstance(names, str) else list(names)
    unknown = set(names) - set(SUITE_NAMES)
    if unknown:
        raise ValueError(f"unknown suite name(s): {sorted(unknown)}")
    return tuple(item for item in _SUITES if item[0] in names)


# ----------------------------------------------------------------------
# nonrelativistic limit
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class NonrelLimitRow:
    k: float
    mass: float
    residuals: tuple[float, ...]


def run_nonrel_limit(omega: float, epsilon: float, k_sequence) -> list[NonrelLimitRow]:
    """Residuals r_n(k) = |E_n - m - omega(n + 1/2)| / omega for n = 0..5.

    E_n - m is computed as (E_n^2 - m^2)/(E_n + m) with
    E_n^2 - m^2 = w^2 (n^2 + 2nk + k) to dodge the catastrophic
    cancellation at large k.  r_n(k) decays like 1/k toward the harmonic
    oscillator levels.
    """
    ks = list(k_sequence)
    if any(b <= a for a, b in zip(ks, ks[1:])):
        raise ValueError("k_sequence must be strictly increasing")
    if ks and ks[-1] > model.K_MAX:
        raise ValueError(f"k values must not exceed {model.K_MAX:g}")
    rows = []
    for k in ks:
        p = ModelParams(omega, epsilon, k)
        m = mass_from_k(p)
        w2 = p.hat_omega ** 2
        residuals = []
        for n in range(6):
            gap_sq = w2 * (n * n + 2.0 * n * k + k)
            e_n = math.sqrt(m * m + gap_sq)
            r = abs(gap_sq / (e_n + m) - omega * (n + 0.5)) / omega
            residuals.append(r)
        rows.append(NonrelLimitRow(k, m, tuple(residuals)))
    return rows
