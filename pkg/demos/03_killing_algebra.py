"""Killing vector fields on flat space and their exact Lie algebra.

Run:  python demos/03_killing_algebra.py
"""

import numpy as np

from adskg.geometry import (
    Signature,
    killing_field,
    killing_residual,
    lie_bracket,
    minkowski_killing_spherical,
    spherical_frame_components,
    structure_check,
    translation_field,
)

# Minkowski spacetime is signature (1,3): eta = diag(-1, +1, +1, +1).
sig = Signature(1, 3)
k03 = killing_field(sig, 0, 3)
print("boost K_{03} components:", k03.components)

# The Killing equation residual is a polynomial identity, checked with
# exact rational arithmetic: no tolerances involved.
res = killing_residual(sig, k03)
print("Killing residual identically zero:", all(p.is_zero() for row in res for p in row))

# A dilation is not a Killing field; its residual is 2 eta.
from adskg.geometry import Polynomial, PolyVectorField

dil = PolyVectorField([Polynomial.variable(4, i) for i in range(4)])
res = killing_residual(sig, dil)
print("dilation residual diagonal:", [res[i][i].coeffs for i in range(4)])

# Brackets close on the so(p,q) structure constants, exactly.
rep = structure_check(sig)
print(f"(1,3): {rep.n_generators} generators, brackets exact: {rep.ok}")
rep = structure_check(Signature(2, 3))
print(f"(2,3): {rep.n_generators} generators, brackets exact: {rep.ok}")

# Example bracket: two rotations give the third.
k12 = killing_field(sig, 1, 2)
k23 = killing_field(sig, 2, 3)
print("[K_12, K_23] - K_13 = 0:", (lie_bracket(k12, k23) - killing_field(sig, 1, 3)).is_zero())

# Translations commute; their brackets with rotations shuffle them.
t1 = translation_field(sig, 1)
t2 = translation_field(sig, 2)
print("[T_1, T_2] = 0:", lie_bracket(t1, t2).is_zero())
print("[T_1, K_12] = T_2:", (lie_bracket(t1, k12) - t2).is_zero())

# The same generators in the spherical (t, r, xi) frame, checked against
# the chain-rule pushforward of the exact cartesian components.
t, x = 0.8, np.array([0.3, -1.1, 0.7])
r = float(np.linalg.norm(x))
xi = x / r
closed = minkowski_killing_spherical("K0j", 3, 0, (t, r, xi))
cart = killing_field(sig, 0, 3).evaluate((t, *x))
oracle = spherical_frame_components(cart, (t, r, xi))
print()
print("boost in (t, r, xi) frame:", closed)
print("chain-rule oracle:        ", oracle)
