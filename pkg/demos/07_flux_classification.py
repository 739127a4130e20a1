"""Radial momentum flux and the two ways of reading a mode's direction.

Run:  python demos/07_flux_classification.py
"""

import math

import numpy as np

from adskg.ads_modes import AdSParams, radial_eval, radial_eval_deriv
from adskg.flux import (
    DiagonalMetricPoint,
    ads_combined_mode,
    em_tensor,
    extrema_relation,
    mode_flux,
    radial_momentum_density,
)
from adskg.specfun import radial_basis, radial_basis_deriv

# Energy-momentum tensor of a rightmoving plane wave: the mixed t-x
# component is negative, so the radial momentum density -T_tx is
# positive, and the mode classifies as outgoing.
mink = DiagonalMetricPoint((-1.0, 1.0, 1.0, 1.0), {})
e, k = 1.3, 0.7
m = math.sqrt(e * e - k * k)
ph = e * 0.4 - k * 1.1
jet = (
    math.cos(ph),
    np.array([-e * math.sin(ph), k * math.sin(ph), 0, 0]),
    np.array(
        [
            [-e * e * math.cos(ph), e * k * math.cos(ph), 0, 0],
            [e * k * math.cos(ph), -k * k * math.cos(ph), 0, 0],
            [0, 0, 0, 0],
            [0, 0, 0, 0],
        ]
    ),
)
t_matrix = em_tensor(0.0, jet, m, mink)
print("T_tx =", t_matrix[0, 1], "  density -T_tx =", radial_momentum_density(t_matrix, mink))

# On the Minkowski hypercylinder the flux of a single mode reduces to a
# Wronskian of the radial profile.  Hankel modes carry 2 omega / p per
# unit time, independent of the evaluation radius.
omega, mass = 2.0, 1.0
p_r = math.sqrt(omega**2 - mass**2)
print()
for r in (3.0, 5.0, 10.0):
    f = radial_basis("h1", 1, p_r * r)
    df = p_r * radial_basis_deriv("h1", 1, p_r * r)
    v = mode_flux("minkowski", {"d": 3}, omega, 1, (f, df), rho=r)
    print(f"r={r:5.1f}: flux {v.flux_per_time:.12f} ({v.verdict}); 2w/p = {2*omega/p_r:.12f}")

# Bessel and Neumann modes have real radial parts: standing waves.
f = radial_basis("j", 1, p_r * 5.0)
df = p_r * radial_basis_deriv("j", 1, p_r * 5.0)
print("bessel mode:", mode_flux("minkowski", {"d": 3}, omega, 1, (f, df), rho=5.0).verdict)

# On AdS: the channel profiles are real (standing); the flat-limit
# combination is outgoing with flux 4 omega R^(d-1) / p.
p = AdSParams(3, 4.2, R=1.0)
fa = radial_eval(p, 2.5, 1, "a", 0.7)
dfa = radial_eval_deriv(p, 2.5, 1, "a", 0.7)
print()
print("AdS channel a:", mode_flux("ads", p, 2.5, 1, (fa, dfa), rho=0.7).verdict)
f, df, pr2 = ads_combined_mode(p, 2.5, 1, 0.7)
v = mode_flux("ads", p, 2.5, 1, (f, df), rho=0.7)
print(f"AdS combined: flux {v.flux_per_time:.12f} ({v.verdict}); 4w/p = {4*2.5/pr2:.12f}")

# The extrema method reads the same directions off sampled real pairs:
# a function is "future" of another when its maxima sit directly left of
# the other's, and outgoing modes combine future x outwards with
# past x inwards.
ts = np.linspace(0.0, 25.0, 5000)
print()
print("cos(Et) vs sin(Et):", extrema_relation(ts, np.cos(ts), np.sin(ts)))
print("sin(Et) vs -cos(Et):", extrema_relation(ts, np.sin(ts), -np.cos(ts)))
rs = np.linspace(5.0, 40.0, 6000)
j = np.array([radial_basis("j", 2, x).real for x in rs])
n = np.array([radial_basis("n", 2, x).real for x in rs])
print("j_2 vs n_2 at large r:", extrema_relation(rs, j, n, labels=("outwards", "inwards")))
