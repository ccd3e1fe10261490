"""Command-line surface: spectra, sampled eigenfunctions, hierarchy
traces, and verification runs, emitted as CSV or JSON.

Exit codes: 0 success / all suites pass, 1 verification failure,
2 usage error.  Floats are printed with 17 significant digits so CSV
output round-trips exactly; identical flags give byte-identical output
(the verify report additionally carries a timestamp in its metadata).
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

import numpy as np

from . import verify as verify_mod
from .ladder import build_from_ground
from .model import ModelParams, k_from_mass, mass_from_k, spectrum
from .numeric import log_gamma
from .wavefun import build_eigenfunction, evaluate, inner_product

USAGE_ERROR = 2


def main(argv=None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors
        return int(exc.code or 0)
    threads = _threads_from_env()
    if threads is None:
        print("SUSY_PT_THREADS must be a positive integer", file=sys.stderr)
        return USAGE_ERROR
    try:
        if args.command == "spectrum":
            return _cmd_spectrum(args)
        if args.command == "eigenfunction":
            return _cmd_eigenfunction(args)
        if args.command == "hierarchy":
            return _cmd_hierarchy(args)
        return _cmd_verify(args, threads)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return USAGE_ERROR


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="susy-pt",
        description="Deformed Poschl-Teller oscillator family: spectra, "
        "eigenfunctions, supersymmetric hierarchy, verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_params(p, require_k=True):
        p.add_argument("--omega", type=float, default=1.0, help="oscillator frequency (> 0)")
        p.add_argument("--epsilon", type=float, default=1.0, help="deformation parameter (> 0)")
        group = p.add_mutually_exclusive_group(required=require_k)
        group.add_argument("--k", type=float, help="envelope exponent (> 1)")
        group.add_argument("--mass", type=float, help="particle mass (> 0); converted to k")

    def add_output(p, formats=("csv", "json")):
        p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("--output", default="-", help="output path, '-' for stdout")

    p = sub.add_parser("spectrum", help="energy levels E_n^2, E_n and n(n+2k)")
    add_params(p)
    p.add_argument("--n-max", type=int, default=8, help="highest level (>= 0)")
    add_output(p)

    p = sub.add_parser("eigenfunction", help="sampled level-n eigenfunction")
    add_params(p)
    p.add_argument("--n", type=int, default=0, help="level index (0..64)")
    p.add_argument("--samples", type=int, default=201, help="sample count incl. endpoints (>= 2)")
    add_output(p)

    p = sub.add_parser("hierarchy", help="raising chain norms down to level k")
    add_params(p)
    p.add_argument("--n", type=int, default=1, help="level assembled by the chain (0..64)")
    add_output(p)

    p = sub.add_parser("verify", help="run property suites; exit 0 iff all pass")
    add_params(p, require_k=False)
    p.add_argument("--n-max", type=int, default=16, help="highest level exercised (0..16)")
    p.add_argument("--grid-n", type=int, default=4096, help="discretization size for the eigensolver suite")
    p.add_argument("--suite", action="append", choices=verify_mod.SUITE_NAMES, help="run only the named suite (repeatable)")
    p.add_argument("--richardson", action="store_true", help="extrapolated eigensolver cross-check (1e-6 tolerance)")
    add_output(p, formats=("text", "json"))
    return parser


def _threads_from_env():
    raw = os.environ.get("SUSY_PT_THREADS")
    if raw is None:
        return 1
    try:
        value = int(raw)
    except ValueError:
        return None
    return value if value >= 1 else None


def _resolve_params(args) -> ModelParams:
    if args.mass is not None:
        k = k_from_mass(args.mass, args.omega, args.epsilon)
        return ModelParams(args.omega, args.epsilon, k)
    return ModelParams(args.omega, args.epsilon, args.k)


def _fmt(value: float) -> str:
    return format(float(value), ".17g")


def _params_comment(p: ModelParams) -> str:
    return (
        f"# params: omega={_fmt(p.omega)} epsilon={_fmt(p.epsilon)} "
        f"k={_fmt(p.k)} mass={_fmt(mass_from_k(p))} hat_omega={_fmt(p.hat_omega)}"
    )


def _emit(text: str, path: str):
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _csv(header, rows, comments=(), trailers=()) -> str:
    lines = list(comments)
    lines.append(",".join(header))
    for row in rows:
        lines.append(",".join(_fmt(v) if isinstance(v, float) else str(v) for v in row))
    lines.extend(trailers)
    return "\n".join(lines) + "\n"


def _cmd_spectrum(args) -> int:
    params = _resolve_params(args)
    if args.n_max < 0:
        raise ValueError("--n-max must be nonnegative")
    spec = spectrum(params, args.n_max)
    rows = [
        (lvl.n, float(lvl.e_squared), math.sqrt(lvl.e_squared), float(lvl.delta_eig))
        for lvl in spec.levels
    ]
    if args.format == "csv":
        text = _csv(
            ("n", "e_squared", "e", "delta_eig"), rows, comments=[_params_comment(params)]
        )
    else:
        text = json.dumps(
            {
                "params": _params_json(params),
                "levels": [
                    {"n": n, "e_squared": e2, "e": e, "delta_eig": d}
                    for n, e2, e, d in rows
                ],
            },
            indent=2,
        ) + "\n"
    _emit(text, args.output)
    return 0


def _cmd_eigenfunction(args) -> int:
    params = _resolve_params(args)
    if args.samples < 2:
        raise ValueError("--samples must be at least 2")
    wf = build_eigenfunction(params, args.n)
    x = np.linspace(-params.half_width, params.half_width, args.samples)
    values = evaluate(wf, x)
    rows = list(zip((float(v) for v in x), (float(v) for v in values)))
    if args.format == "csv":
        text = _csv(("x", "value"), rows, comments=[_params_comment(params), f"# n={args.n}"])
    else:
        text = json.dumps(
            {
                "params": _params_json(params),
                "n": args.n,
                "samples": [{"x": xv, "value": v} for xv, v in rows],
            },
            indent=2,
        ) + "\n"
    _emit(text, args.output)
    return 0


def _cmd_hierarchy(args) -> int:
    params = _resolve_params(args)
    n = args.n
    if n < 0 or n > 64:
        raise ValueError("--n must be in 0..64")
    k = params.k
    steps = []
    for j in range(n):
        k_level = k + n - 1 - j
        factor = math.sqrt((j + 1) * (j + 1 + 2.0 * k_level))
        steps.append((j, float(k_level), factor))
    log_pref = 0.5 * (
        log_gamma(n + 2.0 * k) - log_gamma(2.0 * n + 2.0 * k) - log_gamma(n + 1.0)
    )
    prefactor = math.exp(log_pref)
    assembled = build_from_ground(params, n)
    final_norm = math.sqrt(inner_product(assembled, assembled))
    if args.format == "csv":
        text = _csv(
            ("step", "k_level", "factor"),
            steps,
            comments=[_params_comment(params), f"# n={n}"],
            trailers=[f"# prefactor={_fmt(prefactor)}", f"# final_norm={_fmt(final_norm)}"],
        )
    else:
        text = json.dumps(
            {
                "params": _params_json(params),
                "n": n,
                "steps": [
                    {"step": j, "k_level": kl, "factor": f} for j, kl, f in steps
                ],
                "prefactor": prefactor,
                "final_norm": final_norm,
            },
            indent=2,
        ) + "\n"
    _emit(text, args.output)
    return 0


def _cmd_verify(args, threads: int) -> int:
    if args.k is not None or args.mass is not None:
        battery = [_resolve_params(args)]
    else:
        battery = None  # default fixture battery
    report = verify_mod.run_all(
        battery,
        n_max=args.n_max,
        grid_n=args.grid_n,
        suites=args.suite,
        richardson=args.richardson,
        max_workers=threads,
    )
    text = report.to_json() + "\n" if args.format == "json" else report.to_text() + "\n"
    _emit(text, args.output)
    return 0 if report.all_passed else 1


def _params_json(p: ModelParams) -> dict:
    return {
        "omega": p.omega,
        "epsilon": p.epsilon,
        "k": p.k,
        "mass": mass_from_k(p),
        "hat_omega": p.hat_omega,
        "half_width": p.half_width,
    }


if __name__ == "__main__":
    sys.exit(main())
