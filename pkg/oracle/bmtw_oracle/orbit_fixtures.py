"""Reference orbit and determinant fixtures.

The boundary-value solutions are regenerated with mpmath's Taylor-series ODE
integrator (a scheme unrelated to the embedded Runge-Kutta pair used by the
package under test) seeded with the Bessel boundary form at large t.  The
t=1/pi tau values come from an arbitrary-precision Nystrom determinant.
Every value is produced twice under different discretizations; disagreement
aborts the generator.
"""

from __future__ import annotations

from mpmath import mp, mpf

from .store import FixtureSet

# Evaluation points are IEEE doubles on purpose: the package under test
# works in doubles, so psi is tabulated at exactly the binary arguments it
# will receive (t = 0.1 means the 53-bit value 0.1000...0055...).
PSI_POINTS = (0.1, 1.0, 5.0)
PSI_LAMBDA_PI = (0.5, 1.0)
PSI_DIGITS = 32
TAU_DIGITS = 32
# (dps, t_seed): seed truncation enters as O(e^(-3 t_seed)) and is then
# amplified backward by O(e^(+t_seed)), so the seed dominates; measured
# error ~ lambda^2 * 5e-21 * e^(-2(t_seed - 20)).
PSI_FINE = (44, 32)    # primary run
PSI_CHECK = (38, 27)   # independent discretization for certification
PSI_AGREE = mpf(10) ** -25


def _solve_backward(lambda_pi, t_seed, dps):
    """Taylor-series integration of q'' + q'/t = sinh(2q)/2 from t_seed down.

    Returns a callable t -> (q, p) with p = -t dq/dt.  Integration runs in
    s = -t so that mpmath's forward-only odefun can be used.
    """
    with mp.workdps(dps):
        lam = lambda_pi / mp.pi
        q0 = 2 * lam * mp.besselk(0, t_seed)
        p0 = 2 * lam * t_seed * mp.besselk(1, t_seed)

        def rhs(s, y):
            t = -s
            q, p = y
            return [p / t, (t / 2) * mp.sinh(2 * q)]

        f = mp.odefun(rhs, -t_seed, [q0, p0], tol=mpf(10) ** (-dps + 4))

    def at(t):
        with mp.workdps(dps):
            q, p = f(-mpf(t))
            return +q, +p

    return at


def _legendre_nodes(n):
    nodes, weights = [], []
    for i in range(n // 2 + n % 2):
        x = mp.cos(mp.pi * (i + mpf(3) / 4) / (n + mpf(1) / 2))
        for _ in range(80):
            p0, p1 = mpf(1), x
            for k in range(2, n + 1):
                p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
            dp = n * (x * p1 - p0) / (x * x - 1)
            dx = p1 / dp
            x -= dx
            if abs(dx) < mpf(10) ** (-mp.dps + 2):
                break
        nodes.append(x)
        weights.append(2 / ((1 - x * x) * dp * dp))
    return nodes, weights


def _tau_minus_det(t, n_half, scale=mpf(140)):
    """det(1 - K_t^2) at lambda*pi = 1 via Nystrom on the log-substituted kernel."""
    L = mp.acosh(scale / t)
    xs, ws = _legendre_nodes(n_half)
    nodes, weights = [], []
    for x, w in zip(xs, ws):
        nodes += [L * x, -L * x]
        weights += [L * w, L * w]
    m = len(nodes)
    damp = [mp.e ** (-(t / 2) * mp.cosh(a)) for a in nodes]
    sw = [mp.sqrt(w / (2 * mp.pi)) for w in weights]
    mat_minus = mp.eye(m)
    mat_plus = mp.eye(m)
    for i in range(m):
        fi = sw[i] * damp[i]
        for j in range(i + 1, m):
            k = fi * mp.tanh((nodes[i] - nodes[j]) / 2) * damp[j] * sw[j]
            mat_minus[i, j] = -k
            mat_minus[j, i] = k
            mat_plus[i, j] = k
            mat_plus[j, i] = -k
    return mp.det(mat_minus) * mp.det(mat_plus)


def gen_orbit_fixtures() -> FixtureSet:
    fs = FixtureSet()

    solutions = {}
    for lp in PSI_LAMBDA_PI:
        fine = _solve_backward(lp, mpf(PSI_FINE[1]), PSI_FINE[0])
        check = _solve_backward(lp, mpf(PSI_CHECK[1]), PSI_CHECK[0])
        for t in PSI_POINTS:
            q_fine, p_fine = fine(t)
            q_chk, _ = check(t)
            if abs(q_fine - q_chk) > PSI_AGREE:
                raise RuntimeError(
                    f"psi({t},{lp}): seed/precision cross-check failed: "
                    f"{mp.nstr(abs(q_fine - q_chk), 3)}")
            solutions[(t, lp)] = (q_fine, p_fine)

    mp.dps = 44
    for (t, lp), (q, p) in sorted(solutions.items()):
        fs.add(f"psi_t{t}_lambda_pi_{lp}",
               {"t": t, "lambda_pi": lp}, q,
               f"mpmath Taylor-series ODE integration, Bessel-seeded at "
               f"t={PSI_FINE[1]} (dps {PSI_FINE[0]}); certified to 25 digits "
               f"against seed t={PSI_CHECK[1]} at dps {PSI_CHECK[0]}",
               PSI_DIGITS)
    fs.add("momentum_t1_lambda_pi_0.5",
           {"t": 1.0, "lambda_pi": 0.5}, solutions[(1.0, 0.5)][1],
           "as psi fixtures; p = -t dq/dt from the same integration",
           PSI_DIGITS)

    # Bessel-seed calibration delta: full solution minus the linear boundary
    # form at t=5, lambda*pi=0.5.
    lam = mpf("0.5") / mp.pi
    delta = solutions[(5.0, 0.5)][0] - 2 * lam * mp.besselk(0, 5)
    fs.add("psi_minus_linear_seed_t5_lambda_pi_0.5",
           {"t": 5.0, "lambda_pi": 0.5}, delta,
           "difference of the Taylor-integrated orbit and 2 lambda K0(t)",
           PSI_DIGITS)

    mp.dps = 40
    for t, n_half in ((mpf(1), 200), (mpf(3), 120)):
        coarse = _tau_minus_det(t, (n_half * 3) // 5)
        det = _tau_minus_det(t, n_half)
        if abs(det - coarse) > mpf(10) ** -20:
            raise RuntimeError(f"tau_minus({t}): Nystrom refinement check "
                               f"failed: {mp.nstr(abs(det - coarse), 3)}")
        method = (f"arbitrary-precision Nystrom determinant, n={2 * n_half} "
                  f"nodes at dps 40, refinement certified to 20 digits")
        fs.add(f"fredholm_det_1m_k2_t{mp.nstr(t, 6)}_lambda_pi_1",
               {"t": float(t), "lambda_pi": 1.0}, det,
               method + "; raw det(1 - K_t^2)", TAU_DIGITS)
        # det(1 - K^2) is a perfect square (antisymmetric kernel, so
        # det(1-K) = det(1+K)); its square root det(1 - K_t) is the
        # tau-function that the Hamiltonian-integral representation yields.
        fs.add(f"tau_minus_fredholm_t{mp.nstr(t, 6)}_lambda_pi_1",
               {"t": float(t), "lambda_pi": 1.0, "branch": "minus"},
               mp.sqrt(det), method + "; value is det(1 - K_t)", TAU_DIGITS)

    return fs
