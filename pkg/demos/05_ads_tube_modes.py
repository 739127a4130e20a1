"""AdS tube modes: radial profiles, the conserved Wronskian, and the
mode-space symplectic structure with its isometry actions.

Run:  python demos/05_ads_tube_modes.py
"""

import math

import numpy as np

from adskg.ads_modes import (
    AdSParams,
    ModeVector,
    act_rotation,
    act_time_translation,
    delta_for_mass,
    is_real_solution,
    omega_rho,
    radial_eval,
    radial_wronskian,
    random_real_mode_vector,
)
from adskg.harmonics import wigner_block_euler

# The weight Delta plays the role of a mass parameter.
print("Delta for m=1, R=1, d=3:", delta_for_mass(1.0, 1.0, 3))
p = AdSParams(d=3, Delta=4.2, R=1.0)

# Channel a is regular at the origin (~ sin^l rho), channel b singular
# (~ sin^(2-d-l) rho); both carry cos^Delta rho times a hypergeometric
# factor in sin^2 rho.
print()
print("rho, S_a, S_b at omega=0.7, l=1:")
for rho in (0.1, 0.4, 0.8, 1.2):
    sa = radial_eval(p, 0.7, 1, "a", rho)
    sb = radial_eval(p, 0.7, 1, "b", rho)
    print(f"  {rho:4.2f}  {sa:+.8f}  {sb:+.8f}")

# Their relative Wronskian, weighted by tan^(d-1) rho, is conserved: the
# mode-space shadow of the hypersurface independence of the symplectic
# structure.  With unit-leading normalization it equals -(2l + d - 2).
print()
for l in (0, 1, 2):
    vals = [radial_wronskian(p, 0.7, l, rho) for rho in (0.25, 0.6, 1.0)]
    print(f"l={l}: W = {vals} (target {-(2*l + 1)})")

# Mode vectors: finite collections of (omega, L) channel pairs with a
# symmetric frequency grid.  omega_rho pairs a-coefficients with
# b-coefficients at the reflected labels.
eta = ModeVector([(2.0, 1.0), (-2.0, 1.0)], {(2.0, (2,), 0): (1.0, 0.0)})
zeta = ModeVector([(2.0, 1.0), (-2.0, 1.0)], {(-2.0, (2,), 0): (0.0, 1.0)})
print()
print("peak pairing omega_rho =", omega_rho(p, eta, zeta), " (5 pi =", 5 * math.pi, ")")

# Real solutions satisfy a(-omega, -m) = conj(a(omega, m)); the
# isometry actions preserve both reality and the symplectic structure.
rng = np.random.default_rng(1)
phi = random_real_mode_vector(3, [0.7, 1.3], 2, rng)
psi = random_real_mode_vector(3, [0.7, 1.3], 2, rng)
print("random vectors real:", is_real_solution(phi), is_real_solution(psi))
base = omega_rho(p, phi, psi)
shifted = omega_rho(p, act_time_translation(0.9, phi), act_time_translation(0.9, psi))
blocks = {l: wigner_block_euler(l, 0.5, 1.1, -0.2) for l in range(3)}
rotated = omega_rho(p, act_rotation(blocks, phi), act_rotation(blocks, psi))
print("omega_rho:", base)
print("after time translation:", shifted, " drift:", abs(shifted - base))
print("after rotation:        ", rotated, " drift:", abs(rotated - base))
