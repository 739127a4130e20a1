"""The complex-structure condition system on the tube and its candidate
solutions.

Run:  python demos/06_complex_structure_audit.py
"""

import numpy as np

from adskg.ads_complex_structure import (
    apply_J,
    boost_recurrence_residual,
    candidate_jab,
    candidate_jfactors,
    check_conditions,
    complete_nondiagonal,
    diagonal_boost_mismatch,
    diagonal_jfactors,
    g_rho,
)
from adskg.ads_modes import AdSParams, omega_rho, random_real_mode_vector

p = AdSParams(d=3, Delta=4.2)
grid = [(w, l) for w in (0.5, 1.5, 2.5, -0.5, -1.5, -2.5) for l in range(3)]

# Two families solve the algebraic conditions: the diagonal case
# (j = +-i by frequency sign, channel-diagonal) and the nondiagonal case
# (all j real, jbb = -jaa, determinant one).
jd = diagonal_jfactors(grid)
rep = check_conditions(jd)
print("diagonal case:", rep.case, " essential:", rep.essential_ok, " positive:", rep.positivity_ok)

jf = candidate_jfactors(1, p, grid)
rep = check_conditions(jf)
print("candidate 1 completion:", rep.case, " essential:", rep.essential_ok,
      " positive:", rep.positivity_ok)
print("worst residual:", max(rep.residuals.values()))

# The diagonal case gives zero norm to every real solution: that is why
# the nondiagonal case is the useful one.
rng = np.random.default_rng(0)
phi = random_real_mode_vector(3, [0.5, 1.5], 2, rng)
print()
print("g_rho diagonal:", g_rho(p, jd, phi))
anti = candidate_jfactors(1, p, grid)
print("g_rho candidate 1:", g_rho(p, anti, phi), " (sign depends on the jab landscape)")

# An explicitly positive choice: antidiagonal with jab < 0.
from adskg.ads_complex_structure import JFactors

pos = JFactors({k: complete_nondiagonal(-1.5) for k in grid})
print("g_rho antidiagonal jab=-1.5:", g_rho(p, pos, phi), "> 0")

# J squares to minus one and preserves omega_rho.
eta = random_real_mode_vector(3, [0.5, 1.5], 2, rng)
base = omega_rho(p, phi, eta)
after = omega_rho(p, apply_J(jf, phi), apply_J(jf, eta))
print()
print("omega_rho before/after J:", base, after)

# Commutation with the boost shifts (omega, l) by one unit; the Gamma
# candidates satisfy both recurrences identically.
print()
for which in (1, 2, 3, 4):
    jab = lambda w, l: candidate_jab(which, p, w, l)
    rm, rp = boost_recurrence_residual(p, jab, 0.7, 1)
    print(f"candidate {which}: res_minus={rm:.2e} res_plus={rp:.2e} jab(0.7,1)={jab(0.7,1):+.6f}")

# The sign landscape of candidate 1 over (omega, l): positivity of the
# induced product would need jab < 0 everywhere, which the Gamma factors
# do not grant globally.
print()
print("sign(jab) landscape, candidate 1 (rows l=0..3, columns omega=0..3):")
for l in range(4):
    row = [int(np.sign(candidate_jab(1, p, w, l))) for w in (0.0, 1.0, 2.0, 3.0)]
    print(f"  l={l}: {row}")

# The diagonal case cannot commute with boosts at small frequencies: the
# omega -> omega - 1 shift crosses zero and flips its sign split.
print()
print("diagonal boost mismatch at omega=0.5:", diagonal_boost_mismatch(0.5))
print("diagonal boost mismatch at omega=1.5:", diagonal_boost_mismatch(1.5))
