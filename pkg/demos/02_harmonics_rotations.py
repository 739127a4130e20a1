"""Hyperspherical harmonics on S^2, S^3, S^4 and their rotation behavior.

Run:  python demos/02_harmonics_rotations.py
"""

import math

import numpy as np

from adskg.harmonics import (
    MultiIndex,
    SphericalPoint,
    all_indices,
    eval_harmonic,
    harmonic_gram,
    ladder_coeffs,
    multi_indices,
    rotate_coeffs,
    rotation_matrix_zyz,
    to_angles,
    to_cartesian,
    wigner_block_euler,
    wigner_block_quadrature,
)

# Multi-indices chain downwards: (l_{d-1}, ..., l_2; m).
print("indices with l = 2 on S^3:", [(L.levels, L.m) for L in multi_indices(4, 2)])

# Orthonormality under the matched Gaussian quadrature.
for d in (3, 4, 5):
    idx = all_indices(d, 3)
    gram = harmonic_gram(d, idx, order=16)
    print(f"S^{d-1}: {len(idx)} harmonics, Gram deviation {np.abs(gram - np.eye(len(idx))).max():.2e}")

# The contiguous relation: cos(theta) Y_l = chi- Y_{l-1} + chi+ Y_{l+1}.
d = 4
L = MultiIndex((2, 1), 1)
p = SphericalPoint(d, (0.9, 1.2, 0.4))
lc = ladder_coeffs(d, 2, 1)
lhs = math.cos(0.9) * eval_harmonic(d, L, p)
rhs = lc.chi_minus * eval_harmonic(d, MultiIndex((1, 1), 1), p) + lc.chi_plus * eval_harmonic(
    d, MultiIndex((3, 1), 1), p
)
print()
print("contiguous relation on S^3:", abs(lhs - rhs))
print("ladder handy identity chi-(l+1) = chi+(l):",
      ladder_coeffs(5, 3, 1).chi_plus - ladder_coeffs(5, 4, 1).chi_minus)

# Rotations.  A z-rotation by alpha multiplies the m-coefficient by
# e^{-i m alpha}; a generic rotation mixes coefficients through the
# Wigner block while preserving the expansion pointwise.
print()
l = 2
alpha = 0.6
block = wigner_block_euler(l, alpha, 0.0, 0.0)
c = np.arange(1, 2 * l + 2, dtype=complex)
print("z-rotation phases:", np.round(rotate_coeffs(3, l, block, c) / c, 6))

angles = (0.7, 1.1, -0.4)
rot = rotation_matrix_zyz(*angles)
block = wigner_block_euler(l, *angles)
cp = rotate_coeffs(3, l, block, c)
labels = multi_indices(3, l)
pt = SphericalPoint(3, (1.0, 2.2))
lhs = sum(cp[i] * eval_harmonic(3, L, pt) for i, L in enumerate(labels))
mapped = to_angles(rot @ to_cartesian(np.array(pt.angles)))
rhs = sum(c[i] * eval_harmonic(3, L, SphericalPoint(3, tuple(mapped))) for i, L in enumerate(labels))
print("pointwise rotation identity:", abs(lhs - rhs))

# In general dimension the blocks come from quadrature; both routes agree,
# and unitarity of the block is the completeness relation of the D-matrix.
bq = wigner_block_quadrature(3, l, rot.T, order=16)
print("euler vs quadrature block:", np.abs(bq - block).max())
gram = bq @ np.conj(bq.T)
print("block unitarity (completeness):", np.abs(gram - np.eye(2 * l + 1)).max())
