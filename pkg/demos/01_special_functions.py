"""Tour of the scalar special functions: Gamma, spherical Bessel family,
hypergeometric series.

Run:  python demos/01_special_functions.py
"""

import math

import numpy as np

from adskg.specfun import (
    a_coeff,
    gamma_value,
    hyp2f1,
    log_gamma_signed,
    radial_basis,
    s_plus,
)

# Gamma in signed-log form: safe at large arguments and negative
# non-integer ones, with poles flagged instead of NaNs.
print("Gamma(5)      =", gamma_value(5.0), "(should be 24)")
print("Gamma(0.5)    =", gamma_value(0.5), "(sqrt(pi) =", math.sqrt(math.pi), ")")
g = log_gamma_signed(-2.5)
print("Gamma(-2.5)   =", g.sign * math.exp(g.log_abs))
print("Gamma(-3) is a pole:", log_gamma_signed(-3.0).is_pole)
big = log_gamma_signed(150.0)
print("log Gamma(150) =", big.log_abs)

# The spherical Bessel family.  j and n switch from a power series at
# small argument to an exact trigonometric decomposition at large
# argument; the Hankel functions use the closed form e^{ix} S+(x).
print()
for l in (0, 2, 5):
    x = 3.7
    j = radial_basis("j", l, x).real
    n = radial_basis("n", l, x).real
    h1 = radial_basis("h1", l, x)
    print(f"l={l}: j={j:+.12f}  n={n:+.12f}  |h1|^2 - (j^2+n^2) = {abs(h1)**2 - j*j - n*n:+.2e}")

# The envelope |h1| is smooth even though j and n oscillate.
xs = np.linspace(1.0, 15.0, 8)
print()
print("x, j_1(x), envelope:")
for x in xs:
    j = radial_basis("j", 1, float(x)).real
    h = abs(radial_basis("h1", 1, float(x)))
    print(f"  {x:5.2f}  {j:+.6f}  {h:.6f}")

# Evanescent companions: real by construction, no complex-argument detour.
print()
print("evanescent j-type at x=1, l=0:", radial_basis("j_evan", 0, 1.0), "(sinh(1)/1)")
print("evanescent n-type at x=1, l=0:", radial_basis("n_evan", 0, 1.0), "(-cosh(1)/1)")

# Gauss hypergeometric series with a couple of closed-form checks.
print()
print("2F1(1,1;2;0.5)  =", hyp2f1(1, 1, 2, 0.5), " exact:", -math.log(0.5) / 0.5)
print("2F1(a,b;b;z)    =", hyp2f1(0.75, 2, 2, 0.4), " exact:", (1 - 0.4) ** -0.75)
print("terminating case:", hyp2f1(-2, 3, 1.5, 0.3))

# a-coefficients of the Hankel asymptotics vanish outside 0 <= k <= l.
print()
print("a_k(5/2):", [a_coeff(k, 2) for k in range(-1, 5)])
print("S+_2(3.0):", s_plus(2, 3.0))
