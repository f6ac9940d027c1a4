"""Backward integration of the Bessel-seeded radial sinh-Gordon family.

The one-parameter family q(t, lambda) (nu-modified variant included) solves

    q'' + q'/t = sinh(2q)/2 + (2 nu / t) sinh(q),

fixed by q ~ 2 lambda I(t, nu) as t -> +infinity, where I is the deformed
Bessel boundary integral of specfn.bc_integral (I = K0 at nu = 0).  We seed
at a finite t_seed where the boundary form is accurate to ~(2 lambda I)^3
and integrate backwards with an adaptive embedded Runge-Kutta pair (DOP853)
carrying as extra state:

  * chi = dq/dlambda and its momentum (the variational equation),
  * three running integrals needed by the tau-function routes:
      acc_H      = int_t^T H(q, p, s) ds,      H = (t/2) sinh^2 q - p^2/(2t)
      acc_action = int_t^T (p q' - H) ds
      acc_aux    = int_t^T (cosh q - 1) ds     [= int (1-u)^2/u dx, x = s/2]

Below log_switch the integration proceeds in x = ln t, which matches the
q ~ -sigma ln t behaviour near zero.  Momenta use p = -t dq/dt.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.integrate import solve_ivp

from .specfn import DomainError, bc_integral, ln_gamma

SEED_LIMIT = 1e-5
Q_OVERFLOW = 350.0


class SeedPointError(ValueError):
    """Boundary form not yet in its asymptotic regime at the requested seed."""


class SolverFailure(RuntimeError):
    """Adaptive integration failed (step underflow or non-finite state)."""


@dataclass(frozen=True)
class BmtwParams:
    """Family coordinates: lambda_pi = lambda * pi in [0, 1], nu > -1/2."""

    lambda_pi: float
    nu: float = 0.0

    def __post_init__(self):
        if not 0.0 <= self.lambda_pi <= 1.0:
            raise DomainError(f"lambda_pi must lie in [0, 1], got {self.lambda_pi}")
        if not -0.5 < self.nu <= 4.0:
            raise DomainError(f"nu must lie in (-1/2, 4], got {self.nu}")

    @property
    def lam(self) -> float:
        return self.lambda_pi / math.pi


@dataclass(frozen=True)
class SolverConfig:
    t_seed: float = 14.0
    t_min: float = 1e-4
    rel_tol: float = 1e-10
    abs_tol: float = 1e-12
    log_switch: float = 0.5

    def __post_init__(self):
        if not 0.0 < self.t_min < self.log_switch < self.t_seed:
            raise DomainError(
                "need 0 < t_min < log_switch < t_seed, got "
                f"{self.t_min}, {self.log_switch}, {self.t_seed}")
        if self.rel_tol <= 0.0 or self.abs_tol <= 0.0:
            raise DomainError("tolerances must be positive")


DEFAULT_CONFIG = SolverConfig()


def hamiltonian(q: float, p: float, t: float) -> float:
    """H(q, p, t) = (t/2) sinh^2 q - p^2 / (2t)."""
    if not t > 0.0:
        raise DomainError(f"hamiltonian requires t > 0, got {t}")
    s = math.sinh(q)
    return 0.5 * t * s * s - p * p / (2.0 * t)


def seed_at_infinity(params: BmtwParams, t_seed: float):
    """Boundary data at a finite seed point plus analytic tail estimates.

    Returns (q0, p0, chi0, chip0, (tail_H, tail_action, tail_aux)).  The
    chi seeds are the lambda-stripped boundary values (dq0/dlambda = 2 I).
    Tails are leading-order integrals of the linearized orbit over
    [t_seed, inf), each O(lambda^2 exp(-2 t_seed)).
    """
    val, der = bc_integral(t_seed, params.nu, with_derivative=True)
    lam = params.lam
    q0 = 2.0 * lam * val
    if abs(q0) > SEED_LIMIT:
        raise SeedPointError(
            f"2 lambda I(t_seed) = {q0:.3e} exceeds {SEED_LIMIT:.0e} at "
            f"t_seed = {t_seed}; increase t_seed")
    p0 = -t_seed * 2.0 * lam * der
    chi0 = 2.0 * val
    chip0 = -t_seed * 2.0 * der
    # Linearized tails with I ~ c t^(-mu) e^-t, mu = nu + 1/2,
    # c = 2^-mu Gamma(mu):
    #   int_T H ds        ~ -2 lam^2 mu c^2 T^(-2mu) e^(-2T)
    #   int_T (pq'-H) ds  ~ -2 lam^2 c^2 T^(1-2mu) e^(-2T) (1 + mu/T)
    #   int_T (cosh q -1) ~ +  lam^2 c^2 T^(-2mu) e^(-2T)
    mu = params.nu + 0.5
    c2 = math.exp(2.0 * (ln_gamma(mu) - mu * math.log(2.0)))
    base = lam * lam * c2 * t_seed ** (-2.0 * mu) * math.exp(-2.0 * t_seed)
    tail_h = -2.0 * mu * base
    tail_action = -2.0 * base * t_seed * (1.0 + mu / t_seed)
    tail_aux = base
    return q0, p0, chi0, chip0, (tail_h, tail_action, tail_aux)


def _rhs_t(t, y, nu):
    q, p, chi, chip = y[0], y[1], y[2], y[3]
    sh = math.sinh(q)
    ch = math.cosh(q)
    s2 = 2.0 * sh * ch          # sinh 2q
    c2 = 2.0 * ch * ch - 1.0    # cosh 2q
    h = 0.5 * t * sh * sh - p * p / (2.0 * t)
    return (
        -p / t,
        -0.5 * t * s2 - 2.0 * nu * sh,
        -chip / t,
        -(t * c2 + 2.0 * nu * ch) * chi,
        -h,
        0.5 * t * sh * sh + p * p / (2.0 * t),
        -(ch - 1.0),
    )


def _rhs_x(x, y, nu):
    # x = ln t; same system scaled by t = e^x
    t = math.exp(x)
    q, p, chi, chip = y[0], y[1], y[2], y[3]
    if abs(q) > Q_OVERFLOW:
        raise SolverFailure(
            f"q = {q:.3g} at t = {t:.3g}: sinh overflow imminent; "
            "raise t_min for this lambda_pi")
    sh = math.sinh(q)
    ch = math.cosh(q)
    s2 = 2.0 * sh * ch
    c2 = 2.0 * ch * ch - 1.0
    t2 = t * t
    return (
        -p,
        -0.5 * t2 * s2 - 2.0 * nu * t * sh,
        -chip,
        -(t2 * c2 + 2.0 * nu * t * ch) * chi,
        -(0.5 * t2 * sh * sh - 0.5 * p * p),
        0.5 * t2 * sh * sh + 0.5 * p * p,
        -t * (ch - 1.0),
    )


class Trajectory:
    """A solved orbit with dense output on [t_min, t_seed].

    Immutable after construction.  Node arrays follow the integrator's own
    steps (ascending t); arbitrary points are served by `state_at`, which
    interpolates the dense output of the owning legs.
    """

    _FIELDS = ("q", "p", "chi", "chi_p", "acc_H", "acc_action", "acc_aux")

    def __init__(self, params, config, sol_t, sol_x, grid, states, tails):
        self.params = params
        self.config = config
        self._sol_t = sol_t
        self._sol_x = sol_x
        self.grid = grid
        self.tail_H, self.tail_action, self.tail_aux = tails
        for name, column in zip(self._FIELDS, states):
            column.flags.writeable = False
            setattr(self, name, column)
        grid.flags.writeable = False

    @property
    def t_min(self):
        return self.grid[0]

    @property
    def t_seed(self):
        return self.grid[-1]

    def state_at(self, t: float) -> np.ndarray:
        """Seven-component state [q, p, chi, chi_p, acc_H, acc_action, acc_aux]."""
        lo, hi = self.grid[0], self.grid[-1]
        if not lo <= t <= hi:
            # tolerate representation noise at the endpoints (e.g. the lower
            # bound lives at exp(log(t_min)))
            if lo * (1.0 - 1e-12) <= t <= hi * (1.0 + 1e-12):
                t = min(max(t, lo), hi)
            else:
                raise DomainError(
                    f"t = {t} outside trajectory range [{lo:.3g}, {hi:.3g}]")
        if t >= self.config.log_switch or self._sol_x is None:
            return self._sol_t(t)
        return self._sol_x(math.log(t))

    def q_at(self, t: float) -> float:
        return float(self.state_at(t)[0])

    def p_at(self, t: float) -> float:
        return float(self.state_at(t)[1])

    def chi_at(self, t: float) -> float:
        return float(self.state_at(t)[2])

    def acc_H_at(self, t: float) -> float:
        return float(self.state_at(t)[4])

    def acc_action_at(self, t: float) -> float:
        return float(self.state_at(t)[5])

    def acc_aux_at(self, t: float) -> float:
        return float(self.state_at(t)[6])

    def hamiltonian_at(self, t: float) -> float:
        s = self.state_at(t)
        return hamiltonian(float(s[0]), float(s[1]), t)

    def to_csv(self, target) -> None:
        """Write the node grid as CSV: t,q,p,chi,acc_H,acc_action,acc_aux."""
        own = isinstance(target, (str, bytes))
        fh = open(target, "w", encoding="utf-8") if own else target
        try:
            fh.write("t,q,p,chi,acc_H,acc_action,acc_aux\n")
            for i, t in enumerate(self.grid):
                row = (t, self.q[i], self.p[i], self.chi[i],
                       self.acc_H[i], self.acc_action[i], self.acc_aux[i])
                fh.write(",".join(repr(float(v)) for v in row) + "\n")
        finally:
            if own:
                fh.close()

    def to_csv_string(self) -> str:
        buf = io.StringIO()
        self.to_csv(buf)
        return buf.getvalue()


def solve_family(params: BmtwParams, config: SolverConfig = DEFAULT_CONFIG) -> Trajectory:
    """Integrate the family backward from t_seed to t_min."""
    q0, p0, chi0, chip0, tails = seed_at_infinity(params, config.t_seed)
    y0 = (q0, p0, chi0, chip0, 0.0, 0.0, 0.0)
    nu = params.nu

    # Absolute tolerance is per component: backward integration amplifies
    # absolute noise in (q, p, chi, chi_p) by roughly exp(t_seed - t) (the
    # Bessel-growing direction), so the dynamical block runs under almost
    # pure relative control; abs_tol proper applies to the accumulators,
    # which are plain quadrature states without feedback.
    atol = np.array([config.abs_tol * 1e-40] * 4 + [config.abs_tol] * 3)

    sol_t = solve_ivp(
        _rhs_t, (config.t_seed, config.log_switch), y0, args=(nu,),
        method="DOP853", dense_output=True,
        rtol=config.rel_tol, atol=atol)
    if not sol_t.success:
        raise SolverFailure(
            f"t-leg failed near t = {sol_t.t[-1]:.4g}: {sol_t.message}")

    sol_x = solve_ivp(
        _rhs_x, (math.log(config.log_switch), math.log(config.t_min)),
        sol_t.y[:, -1], args=(nu,),
        method="DOP853", dense_output=True,
        rtol=config.rel_tol, atol=atol)
    if not sol_x.success:
        raise SolverFailure(
            f"log-leg failed near t = {math.exp(sol_x.t[-1]):.4g}: "
            f"{sol_x.message}")

    t_nodes_upper = sol_t.t[::-1]
    y_upper = sol_t.y[:, ::-1]
    t_nodes_lower = np.exp(sol_x.t[::-1])
    t_nodes_lower[0] = config.t_min  # exp(log(t_min)) carries rounding noise
    y_lower = sol_x.y[:, ::-1]
    # the switch point appears as last of lower and first of upper
    grid = np.concatenate([t_nodes_lower[:-1], t_nodes_upper])
    states = [np.concatenate([y_lower[i, :-1], y_upper[i, :]])
              for i in range(7)]
    if not np.all(np.isfinite(grid)) or not all(
            np.all(np.isfinite(s)) for s in states):
        raise SolverFailure("non-finite state encountered")

    return Trajectory(params, config, sol_t.sol, sol_x.sol, grid, states, tails)


@lru_cache(maxsize=512)
def _family_cached(lambda_pi, nu, t_seed, t_min, rel_tol, abs_tol, log_switch):
    return solve_family(BmtwParams(lambda_pi, nu),
                        SolverConfig(t_seed, t_min, rel_tol, abs_tol,
                                     log_switch))


def family(lambda_pi: float, nu: float = 0.0,
           config: SolverConfig = DEFAULT_CONFIG) -> Trajectory:
    """Cached solve keyed by parameters and configuration."""
    return _family_cached(lambda_pi, nu, config.t_seed, config.t_min,
                          config.rel_tol, config.abs_tol, config.log_switch)


# --- Painleve-III coordinates ----------------------------------------------

@dataclass(frozen=True)
class PiiiState:
    """Painleve-III phase-space point: u = e^-q at x = t/2 with both momenta."""

    x: float
    u: float
    v1: float
    v2: float
    h1: float
    h2: float


def piii_hamiltonian(u: float, v: float, x: float, nu: float, j: int) -> float:
    """Polynomial Hamiltonian H_j(u, v_j, x, nu) of the (2nu, -2nu, 1, -1) family."""
    if j == 1:
        a = 2.0 * nu + 1.0
        core = u * u * v * v - (x * u * u - a * u - x) * v - a * x * u
    elif j == 2:
        a = 2.0 * nu - 1.0
        core = u * u * v * v + (x * u * u - a * u - x) * v - a * x * u
    else:
        raise ValueError("j must be 1 or 2")
    return core / x + a * a / (4.0 * x) + a


def piii_hamiltonian_eliminated(u: float, du_dx: float, x: float, nu: float,
                                j: int) -> float:
    """H_j after eliminating the momentum via the canonical equations."""
    a = 2.0 * nu + 1.0 if j == 1 else 2.0 * nu - 1.0
    one_minus_u2 = 1.0 - u * u
    return (x / (4.0 * u * u)) * (du_dx * du_dx - one_minus_u2 * one_minus_u2) \
        - (a / (2.0 * u)) * (1.0 - u) * (1.0 - u)


def piii_state_at(traj: Trajectory, t: float) -> PiiiState:
    """Painleve-III coordinates at sinh-Gordon time t (so x = t/2)."""
    s = traj.state_at(t)
    q, p = float(s[0]), float(s[1])
    nu = traj.params.nu
    x = 0.5 * t
    u = math.exp(-q)
    du_dx = (p / x) * u
    u2 = u * u
    v1 = (x * du_dx + x * u2 - (2.0 * nu + 1.0) * u - x) / (2.0 * u2)
    v2 = (x * du_dx - x * u2 + (2.0 * nu - 1.0) * u + x) / (2.0 * u2)
    h1 = piii_hamiltonian(u, v1, x, nu, 1)
    h2 = piii_hamiltonian(u, v2, x, nu, 2)
    return PiiiState(x=x, u=u, v1=v1, v2=v2, h1=h1, h2=h2)


def to_piii(traj: Trajectory, node: int) -> PiiiState:
    """Painleve-III coordinates at grid node `node`."""
    if not -len(traj.grid) <= node < len(traj.grid):
        raise IndexError(f"node {node} out of range")
    return piii_state_at(traj, float(traj.grid[node]))
