"""
Full verification run
=====================

The verify module ties every closed-form statement to an independent
check and emits a machine-readable report: suite name, pass/fail,
worst residual, tolerance.
"""

from susy_pt import ModelParams, run_all, run_nonrel_limit

# --- the default fixture battery ----------------------------------------
report = run_all(n_max=8, grid_n=2048)
print(report.to_text())

# --- the same report as JSON (what `susy-pt verify --format json` emits) -
print("\nJSON form, first few lines:")
for line in report.to_json().splitlines()[:12]:
    print(line)

# --- the nonrelativistic limit -------------------------------------------
# r_n(k) = |E_n - m - omega(n+1/2)| / omega decays like 1/k: the models
# approach the harmonic oscillator
print("\nnonrelativistic limit, omega=1, epsilon=1:")
rows = run_nonrel_limit(1.0, 1.0, (1e2, 1e3, 1e4, 1e6))
header = "      k        m      " + "  ".join(f"r_{n}" + " " * 6 for n in range(3))
print(header)
for row in rows:
    r = "  ".join(f"{row.residuals[n]:.3e}" for n in range(3))
    print(f"  {row.k:.0e}  {row.mass:.4e}  {r}")

# --- a single deformed model ---------------------------------------------
single = run_all(params_set=[ModelParams(1.0, 2.0, 3.7)], n_max=8, grid_n=2048)
print(f"\nsingle model (omega=1, epsilon=2, k=3.7): all pass = {single.all_passed}")
