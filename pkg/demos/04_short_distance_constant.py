"""The short-distance amplitude A(lambda) from orbits vs the closed form.

tau_pm ~ A(lambda) t^(sigma(sigma-2)/4) as t -> 0 with

    A = exp(3 zeta'(-1) - (3 s^2 + 1/6) ln 2) / (G(1+s) G(1-s)),
    s = (1 - sigma)/2,

and 2^(1/4) A(1/pi) = exp(3 zeta'(-1) + ln 2 / 12), the critical lattice
amplitude.  The orbit estimate converges like t^sigma per decade.
"""

from bmtw import asymptotics as asym
from bmtw import tau as T
from bmtw.solver import family

print("lambda*pi  closed-form A   orbit estimate   rel.dev   decade ratio (expect 10^-sigma)")
for lp in (0.25, 0.5, 0.75):
    sigma = asym.sigma_of_lambda(lp)
    a_closed = asym.a_of_lambda(lp)
    traj = family(lp, 0.0)
    samples = [(t, T.tau_hamiltonian(traj, t, "minus").value)
               for t in (1e-2, 1e-3, 1e-4)]
    a_est, ratio = asym.extract_prefactor(samples, sigma)
    print(f"  {lp:5.2f}    {a_closed:.10f}   {a_est:.10f}   "
          f"{abs(a_est / a_closed - 1):.1e}   {ratio:.3f} / {10 ** -sigma:.3f}")

print("\nthe lambda-integral decomposition behind the closed form "
      "(quadrature vs assembled constants):")
for lp in (0.3, 0.6, 0.9):
    print(f"  lambda*pi = {lp}: residual = "
          f"{asym.l_decomposition_residual(lp):.2e}")

wu = asym.wu_constant()
print(f"\nWu amplitude identity: 2^(1/4) A(1/pi) = {2 ** 0.25 * asym.a_of_lambda(1.0):.15f}")
print(f"exp(3 zeta'(-1) + ln2/12)              = {wu:.15f}")
print(f"residual                                = {asym.wu_identity_residual():.2e}")

print("\nexploration: the nu-deformed amplitude A(lambda, nu) has no known")
print("closed form; the orbit estimate is perfectly computable anyway:")
for nu in (0.0, 0.1, 0.25, 0.45):
    traj = family(0.5, nu)
    sigma = asym.sigma_of_lambda(0.5)
    samples = []
    for t in (1e-2, 1e-3, 1e-4):
        from bmtw.solver import BmtwParams
        samples.append((t, T.tau_nu(t, BmtwParams(0.5, nu), "minus",
                                    "direct").value))
    a_est, _ = asym.extract_prefactor(samples, sigma)
    print(f"  nu = {nu:4}: A_est(0.5, nu) ~ {a_est:.8f}")
