"""
Supersymmetric structure: partner potentials and ladder operators
=================================================================

The superpotential W = k tan(wx) generates

    A_k   = (1/w) d/dx + W,      A_k^+ = -(1/w) d/dx + W,

which factorize the rescaled operator and connect neighbouring models
of the hierarchy: A_k U_{k,n} = sqrt(n(n+2k)) U_{k+1,n-1} and back.
"""

import math

import numpy as np

from susy_pt import (
    LadderContext,
    ModelParams,
    build_eigenfunction,
    build_from_ground,
    evaluate,
    inner_product,
    lower,
    raise_,
    superpotential,
    v_minus,
    v_plus,
)
from susy_pt.numeric import interior_grid

p = ModelParams(omega=1.0, epsilon=1.0, k=2.0)
x = interior_grid(p, 2001).points

# --- shape invariance: the partner is the same family at k+1 ----------
up = p.with_k(p.k + 1.0)
res = np.max(np.abs(v_plus(p, x) - v_minus(up, x) - (2.0 * p.k + 1.0)))
print(f"shape invariance V_+(k) - V_-(k+1) - (2k+1): sup residual {res:.2e}")
print(f"superpotential at the origin: W(0) = {superpotential(p, 0.0)}")

# --- the lowering operator annihilates the ground state ----------------
ctx = LadderContext(p, p.k)
zero = lower(ctx, build_eigenfunction(p, 0))
print(f"\nA_k on the ground state: zero function -> {zero.is_zero}")

# --- one rung down, one rung up ----------------------------------------
n = 3
u_n = build_eigenfunction(p, n)
u_down = build_eigenfunction(up, n - 1)
factor = math.sqrt(n * (n + 2.0 * p.k))
low = lower(ctx, u_n)
print(f"\nA_k U_{{k,{n}}} vs sqrt(n(n+2k)) U_{{k+1,{n-1}}}, factor = {factor:.6f}")
print(f"  sup difference: {np.max(np.abs(evaluate(low, x) - factor * evaluate(u_down, x))):.2e}")
back = raise_(ctx, u_down)
print(f"A_k^+ U_{{k+1,{n-1}}} vs the same factor times U_{{k,{n}}}")
print(f"  sup difference: {np.max(np.abs(evaluate(back, x) - factor * evaluate(u_n, x))):.2e}")

# --- norms collected by the chain --------------------------------------
print("\nassembling U_{k,4} by raising from the level-(k+4) ground state:")
k, n = p.k, 4
for j in range(n):
    k_level = k + n - 1 - j
    f = math.sqrt((j + 1) * (j + 1 + 2.0 * k_level))
    print(f"  step {j}: raise at k_level={k_level:.1f}, norm factor {f:.6f}")
chained = build_from_ground(p, n)
direct = build_eigenfunction(p, n)
print(f"chain vs direct construction, sup difference: "
      f"{np.max(np.abs(evaluate(chained, x) - evaluate(direct, x))):.2e}")
print(f"norm of the assembled state: {math.sqrt(inner_product(chained, chained)):.12f}")
