"""Symplectic structure, complex structure, and the induced products.

Run:  python demos/04_symplectic_structures.py
"""

import math

import numpy as np

from adskg.structures import (
    ComplexStructureMatrix,
    FiniteSymplecticSpace,
    SampledField,
    classify_subspace,
    g_inner_from_J,
    invariance_residual,
    polarization_project,
    symplectic_complement,
    theta_omega_quadrature,
)

# Field-theory side: the symplectic structure of two Klein-Gordon
# solutions on an equal-time slice of a periodic box, by quadrature.
n, length, e, k_mode = 128, 2.0 * math.pi, 1.3, 3
xs = np.arange(n) * (length / n)
k = 2.0 * math.pi * k_mode / length
eta = SampledField((length,), np.cos(-k * xs), -e * np.sin(-k * xs))
zeta = SampledField((length,), np.sin(-k * xs), e * np.cos(-k * xs))
theta, omega = theta_omega_quadrature(eta, zeta, orientation=1)
print("plane-wave pair: omega =", omega.real, " analytic E V / 2 =", e * length / 2.0)
_, omega_flip = theta_omega_quadrature(eta, zeta, orientation=-1)
print("orientation reversal flips the sign:", omega_flip.real)

# Finite-dimensional model: a compatible complex structure induces the
# real g-product and the complex inner product.
sp = FiniteSymplecticSpace.standard(2)
J = ComplexStructureMatrix(sp, np.block([
    [np.zeros((2, 2)), -np.eye(2)],
    [np.eye(2), np.zeros((2, 2))],
]))
u = np.array([1.0, 0.5, -0.3, 0.2])
v = np.array([0.1, -1.0, 0.4, 0.9])
g, inner = g_inner_from_J(sp, J, u, v)
print()
print("g(u,v) =", g, "  {u,v} =", inner)
g2, _ = g_inner_from_J(sp, J, v, u)
print("g symmetric:", g - g2)

# Polarization projectors split the complexified space; omega vanishes on
# equal polarizations and the inner product keeps only one cross term.
up = polarization_project(J, 1, u + 0j)
um = polarization_project(J, -1, u + 0j)
print("P+ + P- = id:", np.abs(up + um - u).max())
vp = polarization_project(J, 1, v + 0j)
print("omega(P+ u, P+ v) =", abs(sp.pairing(up, vp)))

# Subspace taxonomy against the symplectic complement.
print()
for vectors, name in [
    (np.eye(4)[:1], "single direction"),
    (np.eye(4)[:2], "two q-directions"),
    (np.array([[1.0, 0, 0, 0], [0, 0, 1.0, 0]]), "q1, p1 plane"),
    (np.eye(4), "whole space"),
]:
    comp = symplectic_complement(sp, vectors)
    print(f"{name}: classified {classify_subspace(sp, vectors)}, complement dim {comp.shape[0]}")

# Generators of sp(2n) leave omega invariant; so do their commutators.
rng = np.random.default_rng(0)
s1, s2 = (rng.normal(size=(4, 4)) for _ in range(2))
k1 = sp.omega @ (s1 + s1.T)
k2 = sp.omega @ (s2 + s2.T)
comm = k1 @ k2 - k2 @ k1
worst = max(
    invariance_residual(sp, m, np.eye(4)[i], np.eye(4)[j])
    for m in (k1, k2, comm)
    for i in range(4)
    for j in range(4)
)
print()
print("invariance residuals for K, L, [K, L]:", worst)
