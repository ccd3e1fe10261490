"""
Spectra of the deformed trigonometric Poschl-Teller oscillators
===============================================================

Each model is fixed by (omega, epsilon, k) and lives on the open
interval (-pi/2w, pi/2w), w = epsilon*omega.  The energy levels are

    E_n^2 = w^2 [ (n+k)^2 + (epsilon^2 - 1) k(k-1) ],

and the mass is tied to k by m^2 = k(k-1) epsilon^2 w^2.
"""

import math

from susy_pt import ModelParams, energy, k_from_mass, mass_from_k, spectrum

# --- parametrize by k, recover the mass -------------------------------
p = ModelParams(omega=1.0, epsilon=1.0, k=2.0)
print(f"model: omega={p.omega} epsilon={p.epsilon} k={p.k}")
print(f"domain half width: {p.half_width:.6f}  (pi/2 here since w=1)")
print(f"mass from k: m = {mass_from_k(p):.6f}  (sqrt(2) for k=2)")

# the conversion inverts exactly
k_back = k_from_mass(mass_from_k(p), p.omega, p.epsilon)
print(f"k from mass round trip: {k_back!r}")

# --- the epsilon = 1 spectrum is equidistant --------------------------
print("\nepsilon = 1 (anti-de Sitter oscillator): E_n = w(n+k)")
for lvl in spectrum(p, 5).levels:
    print(f"  n={lvl.n}  E^2={lvl.e_squared:8.3f}  E={math.sqrt(lvl.e_squared):6.3f}  n(n+2k)={lvl.delta_eig:5.1f}")

gaps = [energy(p, n + 1) - energy(p, n) for n in range(8)]
print("level gaps:", ", ".join(f"{g:.12f}" for g in gaps))

# --- deformation away from epsilon = 1 bends the spectrum -------------
q = ModelParams(omega=1.0, epsilon=2.0, k=2.0)
print("\nepsilon = 2 deformation (no longer equidistant):")
for lvl in spectrum(q, 5).levels:
    print(f"  n={lvl.n}  E^2={lvl.e_squared:8.3f}  E={math.sqrt(lvl.e_squared):6.3f}")

# --- mass quantization along the hierarchy ----------------------------
# with omega, epsilon fixed, the levels k, k+1, k+2, ... of the
# supersymmetric hierarchy carry quantized masses
print("\nmasses along the hierarchy k, k+1, k+2, ...:")
for j in range(5):
    pj = p.with_k(p.k + j)
    print(f"  k={pj.k:4.1f}  m={mass_from_k(pj):.6f}")
