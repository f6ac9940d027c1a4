"""Solve family members and watch the connection problem in action.

Each orbit is fixed by q ~ 2 lambda K0(t) at infinity; integrating backward
reveals the short-distance behaviour q = -sigma ln t - ln B + O(t^(2(1-sigma)))
with sigma = (2/pi) arcsin(lambda pi) and an explicit amplitude B.
"""

import math

from bmtw import asymptotics as asym
from bmtw import specfn as sf
from bmtw.solver import family

print("lambda*pi  sigma      q(1e-4)        -sigma ln t - ln B   difference")
for lp in (0.25, 0.5, 0.75, 0.95):
    traj = family(lp, 0.0)
    sigma = asym.sigma_of_lambda(lp)
    b = asym.b_coeff_nu0(sigma)
    t = 1e-4
    q = traj.q_at(t)
    pred = -sigma * math.log(t) - math.log(b)
    print(f"  {lp:5.2f}   {sigma:.5f}   {q:.10f}   {pred:.10f}   {q - pred:+.2e}")

print("\nat lambda*pi = 1 the amplitude degenerates to a logarithm:")
traj = family(1.0, 0.0)
for t in (1e-1, 1e-2, 1e-3):
    pred = -math.log(t) - math.log(-0.5 * (math.log(t / 8) + sf.EULER_GAMMA))
    print(f"  t = {t:6}: q = {traj.q_at(t):.8f}   log-law = {pred:.8f}   "
          f"diff = {traj.q_at(t) - pred:+.2e}")

print("\nthe variational state chi = dq/dlambda rides along; at lambda = 0 it")
print("solves the plain modified-Bessel equation, chi = 2 K0:")
tr0 = family(0.0, 0.0)
for t in (0.5, 1.0, 5.0):
    print(f"  t = {t:4}: chi = {tr0.chi_at(t):.12e}   2 K0 = "
          f"{2 * sf.bessel_k(0, t):.12e}")

print("\nHamiltonian limit: -(t/2) H -> sigma^2 / 4 as t -> 0 (lambda*pi = 0.5):")
traj = family(0.5, 0.0)
sigma = asym.sigma_of_lambda(0.5)
for t in (1e-2, 1e-3, 1e-4):
    val = -0.5 * t * traj.hamiltonian_at(t)
    print(f"  t = {t:6}: -(t/2)H = {val:.10f}   error = "
          f"{val - sigma * sigma / 4:+.3e}")
