"""Tour of the special-function kernel.

The package carries its own K0/K1, log-gamma, digamma and Barnes-G
implementations plus the nu-deformed Bessel-type boundary integral; this
script prints the classical anchor values and the internal consistency
checks that tie them together.
"""

import math

import numpy as np

from bmtw import specfn as sf

print("fundamental constants (as stored):")
print(f"  euler_gamma     = {sf.EULER_GAMMA!r}")
print(f"  zeta'(-1)       = {sf.ZETA_PRIME_MINUS_ONE!r}")
print(f"  sqrt(pi)        = {sf.SQRT_PI!r}")

print("\nBessel K values:")
for t in (0.5, 1.0, 2.5, 10.0):
    print(f"  K0({t:4}) = {sf.bessel_k(0, t):.15e}   K1({t:4}) = {sf.bessel_k(1, t):.15e}")

print("\nGamma family:")
print(f"  exp(ln_gamma(1/2)) - sqrt(pi) = {math.exp(sf.ln_gamma(0.5)) - sf.SQRT_PI:+.2e}")
print(f"  digamma(1) + gamma_E          = {sf.digamma(1.0) + sf.EULER_GAMMA:+.2e}")
print(f"  ln G(1/2)                     = {sf.ln_barnes_g(0.5):.15f}")
special = 0.5 * (3 * sf.ZETA_PRIME_MINUS_ONE - 0.5 * sf.LN_PI + sf.LN_TWO / 12)
print(f"  vs zeta'(-1) closed form      = {special:.15f}")

print("\nBarnes integral certificate (residual of the closed antiderivative):")
for z in (0.25, 0.5, 1.0):
    print(f"  z = {z:4}: {sf.barnes_integral_residual(z):.2e}")

print("\nboundary integral I(t, nu) = int_1^inf e^-ty (y^2-1)^(-1/2) ((y-1)/(y+1))^nu dy")
print("reduces to K0 at nu = 0:")
for t in np.geomspace(0.1, 30, 5):
    r = abs(sf.bc_integral(float(t), 0.0) / sf.bessel_k(0, float(t)) - 1)
    print(f"  t = {t:8.3f}: relative deviation {r:.2e}")

print("\nand at nu = 1/4 it matches Gamma(3/4) (2t)^(-3/4) e^-t at large t:")
for t in (10.0, 20.0, 40.0):
    ratio = sf.bc_integral(t, 0.25) * (2 * t) ** 0.75 * math.exp(t) \
        / math.exp(sf.ln_gamma(0.75))
    print(f"  t = {t:5}: ratio = {ratio:.6f}")
