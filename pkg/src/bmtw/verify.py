"""Named verification suites over the whole identity battery.

Each suite produces a VerificationReport: a sorted list of checks, each
carrying the two compared quantities, the residual, the tolerance, and the
pass flag (pass iff residual <= tolerance).  Residual-style checks store
the residual itself as lhs and 0 as rhs.  Suites: specfn, constants,
action, tau, nu, fredholm, all.
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass, field

import numpy as np

from . import asymptotics as asym
from . import specfn as sf
from . import tau as tau_mod
from .fixtures import Fixture
from .solver import (
    BmtwParams,
    family,
    hamiltonian,
    piii_hamiltonian_eliminated,
    piii_state_at,
)


@dataclass(frozen=True)
class Check:
    name: str
    lhs: float
    rhs: float
    residual: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.residual <= self.tolerance

    def to_dict(self) -> dict:
        return {"name": self.name, "lhs": self.lhs, "rhs": self.rhs,
                "residual": self.residual, "tolerance": self.tolerance,
                "pass": self.passed}


@dataclass
class VerificationReport:
    suite: str
    checks: list = field(default_factory=list)
    runtime_seconds: float = 0.0

    @property
    def n_failed(self) -> int:
        return sum(1 for c in self.checks if not c.passed)

    def to_json(self, include_timing: bool = False) -> str:
        payload = {
            "suite": self.suite,
            "checks": [c.to_dict() for c in sorted(self.checks,
                                                   key=lambda c: c.name)],
            "n_checks": len(self.checks),
            "n_failed": self.n_failed,
        }
        # wall-clock time is volatile; omitting it by default keeps reports
        # byte-identical across runs
        if include_timing:
            payload["runtime_seconds"] = self.runtime_seconds
        return json.dumps(payload, indent=1, sort_keys=True) + "\n"


class _Collector:
    def __init__(self, tol_scale: float = 1.0):
        self.tol_scale = tol_scale
        self.checks: list[Check] = []

    def close(self, name, lhs, rhs, tol):
        """Two quantities that must agree to tol (absolute)."""
        self.checks.append(Check(name, float(lhs), float(rhs),
                                 abs(float(lhs) - float(rhs)),
                                 float(tol) * self.tol_scale))

    def small(self, name, residual, tol):
        """A residual that must not exceed tol."""
        self.checks.append(Check(name, float(residual), 0.0,
                                 abs(float(residual)), float(tol) * self.tol_scale))

    def rel(self, name, lhs, rhs, tol):
        """Relative agreement |lhs/rhs - 1| <= tol."""
        ratio = float(lhs) / float(rhs)
        self.checks.append(Check(name, float(lhs), float(rhs),
                                 abs(ratio - 1.0), float(tol) * self.tol_scale))


# --- specfn ------------------------------------------------------------------

def suite_specfn(tol_scale: float = 1.0) -> list[Check]:
    c = _Collector(tol_scale)
    c.close("specfn.gamma_half_sqrt_pi", math.exp(sf.ln_gamma(0.5)),
            sf.SQRT_PI, 1e-13)
    c.small("specfn.gamma_two_is_zero", sf.ln_gamma(2.0), 1e-15)
    c.close("specfn.digamma_one_neg_gamma", sf.digamma(1.0),
            -sf.EULER_GAMMA, 1e-12)
    c.close("specfn.digamma_recurrence_1p5", sf.digamma(1.5),
            2.0 - sf.EULER_GAMMA - 2.0 * sf.LN_TWO, 1e-12)
    for z in [round(0.1 * k, 1) for k in range(1, 10)]:
        c.rel(f"specfn.gamma_funceq@z={z}", math.exp(sf.ln_gamma(1.0 + z)),
              z * math.exp(sf.ln_gamma(z)), 1e-12)
        c.close(f"specfn.barnes_funceq@z={z}", sf.ln_barnes_g(1.0 + z),
                sf.ln_gamma(z) + sf.ln_barnes_g(z), 1e-12)
    c.close("specfn.barnes_special_value", 2.0 * sf.ln_barnes_g(0.5),
            3.0 * sf.ZETA_PRIME_MINUS_ONE - 0.5 * sf.LN_PI
            + sf.LN_TWO / 12.0, 1e-11)
    for z in (0.25, 0.5, 1.0):
        c.small(f"specfn.barnes_integral@z={z}",
                sf.barnes_integral_residual(z), 1e-10)
    for t in np.geomspace(0.1, 30.0, 20):
        c.rel(f"specfn.bc_vs_k0@t={t:.4f}", sf.bc_integral(float(t), 0.0),
              sf.bessel_k(0, float(t)), 1e-10)
    # derivative of the boundary integral vs 5-point finite difference
    t0, nu = 2.0, 0.3
    _, der = sf.bc_integral(t0, nu, with_derivative=True)
    h = 1e-2
    vals = [sf.bc_integral(t0 + k * h, nu) for k in (-2, -1, 1, 2)]
    fd = (vals[0] - 8 * vals[1] + 8 * vals[2] - vals[3]) / (12 * h)
    c.close("specfn.bc_derivative_fd", der, fd, 1e-7)
    c.close("specfn.k1_is_minus_dk0", sf.bessel_k(1, 2.0),
            -(sf.bessel_k(0, 2.0 + 1e-5) - sf.bessel_k(0, 2.0 - 1e-5)) / 2e-5,
            1e-8)
    c.rel("specfn.k0_asymptotic@t=30", sf.bessel_k(0, 30.0),
          math.sqrt(math.pi / 60.0) * math.exp(-30.0), 1e-2)
    c.rel("specfn.bc_large_t_law@t=40",
          sf.bc_integral(40.0, 0.25) * (80.0 ** 0.75) * math.exp(40.0),
          math.exp(sf.ln_gamma(0.75)), 1e-2)
    return c.checks


# --- constants ---------------------------------------------------------------

def suite_constants(tol_scale: float = 1.0) -> list[Check]:
    c = _Collector(tol_scale)
    c.small("constants.wu_identity", asym.wu_identity_residual(), 1e-12)
    for lp in (0.1, 0.3, 0.5, 0.7, 0.9, 1.0):
        c.close(f"constants.sigma_roundtrip@lp={lp}",
                asym.lambda_of_sigma(asym.sigma_of_lambda(lp)), lp, 1e-14)
    sig_vals = [asym.sigma_of_lambda(x) for x in np.linspace(0.0, 1.0, 21)]
    c.small("constants.sigma_monotone",
            0.0 if all(b > a for a, b in zip(sig_vals, sig_vals[1:])) else 1.0,
            0.0)
    for sig in (0.1, 1.0 / 3.0, 0.6, 0.9):
        c.rel(f"constants.b_two_paths@sigma={sig:.4f}",
              asym.b_coeff(sig, 0.0), asym.b_coeff_nu0(sig), 1e-13)
    c.close("constants.a_limit_at_zero", asym.a_of_lambda(1e-8), 0.5, 1e-7)
    c.close("constants.c_of_nu_at_zero", asym.c_of_nu(0.0), 1.0, 0.0)
    nu = 1e-6
    cval = asym.c_of_nu(nu)
    c.close("constants.c_consistency_nu_to_0",
            (cval * cval - 1.0) / (4.0 * nu),
            3.0 * sf.LN_TWO - sf.EULER_GAMMA, 1e-5)
    for lp, tol in ((0.3, 1e-8), (0.6, 1e-8), (0.9, 1e-7)):
        c.small(f"constants.l_decomposition@lp={lp}",
                asym.l_decomposition_residual(lp), tol)
    return c.checks


# --- action ------------------------------------------------------------------

ACTION_GRID_LP = (0.25, 0.5, 0.75, 0.95)
ACTION_GRID_T = (0.1, 1.0, 5.0)


def suite_action(tol_scale: float = 1.0) -> list[Check]:
    c = _Collector(tol_scale)
    for lp in ACTION_GRID_LP:
        params = BmtwParams(lp, 0.0)
        for t in ACTION_GRID_T:
            s_val, _ = tau_mod.action_S(t, params)
            res = tau_mod.action_identity_residual(t, params)
            c.small(f"action.identity@lp={lp},t={t}", res,
                    1e-6 * (1.0 + abs(s_val)))
    s16, _ = tau_mod.action_S(0.5, BmtwParams(0.75, 0.0), 16)
    s32, _ = tau_mod.action_S(0.5, BmtwParams(0.75, 0.0), 32)
    c.close("action.node_doubling@lp=0.75,t=0.5", s16, s32, 1e-9)
    # lambda-quadrature vs the direct s-integral from a single orbit
    traj = family(0.5, 0.0)
    s_quad, _ = tau_mod.action_S(1.0, BmtwParams(0.5, 0.0))
    s_orbit = traj.acc_action_at(1.0) + traj.tail_action
    c.rel("action.quadrature_vs_orbit@lp=0.5,t=1", s_quad, s_orbit, 1e-6)
    c.small("action.zero_at_lambda_0",
            abs(tau_mod.action_S(1.0, BmtwParams(0.0, 0.0))[0]), 0.0)
    return c.checks


# --- tau ---------------------------------------------------------------------

TAU_GRID_LP = (0.25, 0.5, 0.75)
TAU_GRID_T = (0.1, 1.0, 5.0)


def suite_tau(tol_scale: float = 1.0) -> list[Check]:
    c = _Collector(tol_scale)
    for lp in TAU_GRID_LP:
        params = BmtwParams(lp, 0.0)
        traj = family(lp, 0.0)
        for t in TAU_GRID_T:
            for branch in ("plus", "minus"):
                th = tau_mod.tau_hamiltonian(traj, t, branch)
                ta = tau_mod.tau_action(t, params, branch)
                c.rel(f"tau.route_agreement@lp={lp},t={t},{branch}",
                      th.value, ta.value, 1e-5)
    traj0 = family(0.0, 0.0)
    c.close("tau.lambda0_minus_is_1",
            tau_mod.tau_hamiltonian(traj0, 1.0, "minus").value, 1.0, 0.0)
    c.close("tau.lambda0_plus_is_0",
            tau_mod.tau_hamiltonian(traj0, 1.0, "plus").value, 0.0, 0.0)
    traj = family(0.5, 0.0)
    q = traj.q_at(1.0)
    c.close("tau.branch_ratio_tanh",
            tau_mod.tau_hamiltonian(traj, 1.0, "plus").value
            / tau_mod.tau_hamiltonian(traj, 1.0, "minus").value,
            math.tanh(0.5 * q), 1e-12)
    # large-t: the plus law meets 5e-2 at t=8; the minus law's own
    # subleading term is ~1.4/t (17% at t=8), so its drift is what we pin.
    params = BmtwParams(0.5, 0.0)
    plus8 = tau_mod.tau_hamiltonian(traj, 8.0, "plus").value
    c.rel("tau.large_t_plus@t=8", plus8,
          asym.tau_large_t(8.0, params, "plus"), 5e-2)
    ratios = {}
    for t in (8.0, 10.0):
        tm = tau_mod.tau_hamiltonian(traj, t, "minus").value
        law = asym.tau_large_t(t, params, "minus") - 1.0
        ratios[t] = (tm - 1.0) / law
        c.close(f"tau.large_t_minus_drift@t={t}", (1.0 - ratios[t]) * t,
                1.4, 0.45)
    c.small("tau.large_t_minus_ratio_improves",
            0.0 if ratios[10.0] > ratios[8.0] else 1.0, 0.0)
    # short-distance law at lambda*pi = 1
    traj1 = family(1.0, 0.0)
    p1 = BmtwParams(1.0, 0.0)
    res = {t: abs(traj1.q_at(t) - asym.psi_small_t(t, p1))
           for t in (0.1, 0.01, 0.001)}
    c.small("tau.lp1_small_t_law@t=1e-3", res[0.001], 1e-3)
    c.small("tau.lp1_small_t_law_decreasing",
            0.0 if res[0.001] <= res[0.01] <= res[0.1] else 1.0, 0.0)
    # prefactor extraction against the closed-form amplitude
    sigma = asym.sigma_of_lambda(0.5)
    samples = [(t, tau_mod.tau_hamiltonian(traj, t, "minus").value)
               for t in (1e-2, 1e-3, 1e-4)]
    a_est, ratio = asym.extract_prefactor(samples, sigma)
    c.rel("tau.prefactor_a_estimate@lp=0.5", a_est, asym.a_of_lambda(0.5),
          0.06)
    c.close("tau.prefactor_decay_ratio@lp=0.5", ratio, 0.45, 0.15)
    # -(t/2) H -> sigma^2/4 with per-decade error ratio 10^(-2(1-sigma))
    err = {t: abs(-0.5 * t * traj.hamiltonian_at(t) - sigma * sigma / 4.0)
           for t in (1e-2, 1e-3, 1e-4)}
    expected = 10.0 ** (-2.0 * (1.0 - sigma))
    c.close("tau.h_limit_decade_ratio@1e-3/1e-2", err[1e-3] / err[1e-2],
            expected, 0.25 * expected)
    c.close("tau.h_limit_decade_ratio@1e-4/1e-3", err[1e-4] / err[1e-3],
            expected, 0.25 * expected)
    # boundary-behaviour error order: E(t/2)/E(t) ~ 2^(-2(1-sigma))
    lnb = math.log(asym.b_coeff_nu0(sigma))
    halving = 2.0 ** (-2.0 * (1.0 - sigma))
    for t in (1e-2, 1e-3, 2e-4):
        e_half = abs(traj.q_at(t / 2) + sigma * math.log(t / 2) + lnb)
        e_full = abs(traj.q_at(t) + sigma * math.log(t) + lnb)
        c.close(f"tau.boundary_error_halving@t={t:g}", e_half / e_full,
                halving, 0.25 * halving)
    # asymptotic small-t route vs the action route (plus branch, t = 1e-3)
    tv = tau_mod.tau_action(1e-3, params, "plus")
    pred = asym.a_of_lambda(0.5) * (1e-3) ** (0.25 * sigma * (sigma - 2.0))
    c.rel("tau.action_plus_vs_power_law@t=1e-3", tv.value, pred,
          1.5 * (1e-3) ** sigma)
    return c.checks


# --- nu ----------------------------------------------------------------------

NU_GRID = (0.1, 0.25, 0.45)
NU_GRID_T = (0.5, 2.0)


def suite_nu(tol_scale: float = 1.0) -> list[Check]:
    c = _Collector(tol_scale)
    for nu in NU_GRID:
        params = BmtwParams(0.5, nu)
        for t in NU_GRID_T:
            for j in (1, 2):
                res = tau_mod.nu_action_residual(t, params, j)
                c.small(f"nu.g11_identity@nu={nu},t={t},j={j}", res, 1e-6)
    # momenta limits at the seed edge (x = t_seed/2 = 7)
    params = BmtwParams(0.5, 0.25)
    traj = family(0.5, 0.25)
    st = piii_state_at(traj, 14.0)
    c.close("nu.v1_limit@x=7", st.v1, -0.5 * (2 * 0.25 + 1.0), 1e-6)
    c.close("nu.v2_limit@x=7", st.v2, 0.5 * (2 * 0.25 - 1.0), 1e-6)
    # momentum-form Hamiltonians equal their eliminated forms
    for t in (0.3, 1.0, 4.0):
        s = traj.state_at(t)
        q, p = float(s[0]), float(s[1])
        x, u = 0.5 * t, math.exp(-q)
        du = (p / x) * u
        stt = piii_state_at(traj, t)
        c.close(f"nu.h1_elimination@t={t}", stt.h1,
                piii_hamiltonian_eliminated(u, du, x, 0.25, 1), 1e-9)
        c.close(f"nu.h2_elimination@t={t}", stt.h2,
                piii_hamiltonian_eliminated(u, du, x, 0.25, 2), 1e-9)
    # lambda_pi = 0: u = 1 and H_1(1, -(2nu+1)/2) = 0
    tr0 = family(0.0, 0.25)
    st0 = piii_state_at(tr0, 1.0)
    c.close("nu.lambda0_u_is_1", st0.u, 1.0, 0.0)
    c.small("nu.lambda0_h1_vanishes", abs(st0.h1), 1e-15)
    c.small("nu.lambda0_h2_vanishes", abs(st0.h2), 1e-15)
    # product formula vs direct accumulator route
    for (lp, nu, t) in ((0.5, 0.25, 1.0), (0.5, 0.45, 0.5)):
        pa = BmtwParams(lp, nu)
        g1 = tau_mod.tau_nu(t, pa, "minus", "direct")
        g10 = tau_mod.tau_nu(t, pa, "minus", "product")
        c.rel(f"nu.product_vs_direct@lp={lp},nu={nu},t={t}",
              g10.value, g1.value, 1e-7)
    # nu = 0 reduction to the plain Hamiltonian route
    p0 = BmtwParams(0.5, 0.0)
    tr = family(0.5, 0.0)
    for t in (0.5, 1.0):
        base = tau_mod.tau_hamiltonian(tr, t, "minus").value
        c.rel(f"nu.zero_reduction_direct@t={t}",
              tau_mod.tau_nu(t, p0, "minus", "direct").value, base, 1e-8)
        c.rel(f"nu.zero_reduction_product@t={t}",
              tau_mod.tau_nu(t, p0, "minus", "product").value, base, 1e-8)
    # nu -> 0 orbit continuity
    tr_eps = family(0.5, 1e-6)
    sup = max(abs(tr_eps.q_at(t) - tr.q_at(t))
              for t in np.geomspace(0.01, 10.0, 40))
    c.small("nu.continuity_at_zero", sup, 1e-4)
    # boundary expansion with the nu correction terms: residual order
    # t^(2(1-sigma)), so decade ratio ~ 10^(-2(1-sigma))
    params = BmtwParams(0.5, 0.25)
    trn = family(0.5, 0.25)
    sigma = asym.sigma_of_lambda(0.5)
    b = asym.b_coeff(sigma, 0.25)
    r = {}
    for t in (1e-2, 1e-3):
        bracket = (1.0 - (0.25 / b) * (1 - sigma) ** -2 * t ** (1 - sigma)
                   + b * 0.25 * (1 + sigma) ** -2 * t ** (1 + sigma))
        r[t] = abs(trn.q_at(t) + sigma * math.log(t) + math.log(b)
                   + math.log(bracket))
    expected = 10.0 ** (-2.0 * (1.0 - sigma))
    c.close("nu.g2_correction_decade_ratio", r[1e-3] / r[1e-2], expected,
            0.5 * expected)
    c.small("nu.g2_correction_magnitude@t=1e-3", r[1e-3], 1e-5)
    # logarithmic predictor at lambda*pi = 1, nu = 0.5
    tr15 = family(1.0, 0.5)
    p15 = BmtwParams(1.0, 0.5)
    g3 = {t: abs(tr15.q_at(t) - asym.psi_small_t(t, p15))
          for t in (0.1, 0.01, 0.001)}
    c.small("nu.g3_residual@t=1e-3", g3[0.001], 1e-5)
    c.small("nu.g3_residual_decreasing",
            0.0 if g3[0.001] < g3[0.01] < g3[0.1] else 1.0, 0.0)
    # large-t nu display (plus branch); same 1/t-envelope as nu = 0
    pn = BmtwParams(0.5, 0.25)
    tv = tau_mod.tau_nu(8.0, pn, "plus", "direct")
    c.rel("nu.large_t_plus@t=8", tv.value,
          asym.tau_large_t(8.0, pn, "plus"), 5e-2)
    return c.checks


# --- fredholm ----------------------------------------------------------------

def suite_fredholm(tol_scale: float = 1.0) -> list[Check]:
    c = _Collector(tol_scale)
    traj = family(1.0, 0.0)
    for t in (0.5, 1.0, 2.0):
        fr = tau_mod.fredholm_tau_minus(t, n=200)
        th = tau_mod.tau_hamiltonian(traj, t, "minus")
        c.rel(f"fredholm.vs_ode@t={t}", fr.value, th.value, 1e-5)
        det_k, det_k2 = tau_mod.fredholm_determinants(t, 200)
        c.rel(f"fredholm.det_square_relation@t={t}", det_k * det_k,
              det_k2, 1e-12)
    a = tau_mod.fredholm_determinants(0.5, 200)[0]
    b = tau_mod.fredholm_determinants(0.5, 400)[0]
    c.close("fredholm.n_doubling@t=0.5", a, b, 1e-7)
    c.close("fredholm.limit_one@t=8", tau_mod.fredholm_tau_minus(8.0).value,
            1.0, 1e-6)
    return c.checks


# --- fixture cross-checks ----------------------------------------------------

def fixture_checks(fixtures: dict[str, Fixture],
                   tol_scale: float = 1.0) -> list[Check]:
    """Compare package values against any recognized oracle fixtures."""
    c = _Collector(tol_scale)

    def have(name):
        return name in fixtures

    def fval(name):
        return fixtures[name].float_value

    for name, fx in sorted(fixtures.items()):
        if name.startswith("bessel_k0_at_") or name.startswith("bessel_k1_at_"):
            order = int(fx.inputs["order"])
            t = float(fx.inputs["t"])
            c.rel(f"fixture.{name}", sf.bessel_k(order, t), fx.float_value,
                  1e-12)
        elif name.startswith("psi_t"):
            traj = family(float(fx.inputs["lambda_pi"]), 0.0)
            c.close(f"fixture.{name}", traj.q_at(float(fx.inputs["t"])),
                    fx.float_value, 1e-9)
        elif name.startswith("amplitude_a_lambda_pi_") and fx.inputs:
            lp = float(fx.inputs["lambda_pi"])
            if lp > 0.0:
                c.rel(f"fixture.{name}", asym.a_of_lambda(lp),
                      fx.float_value, 1e-12)
    if have("bessel_k0_at_1"):
        c.rel("fixture.k0_quadrature_anchor", sf.bessel_k(0, 1.0),
              fval("bessel_k0_at_1"), 1e-12)
    if have("ln_gamma_one_third"):
        c.close("fixture.ln_gamma_one_third", sf.ln_gamma(1.0 / 3.0),
                fval("ln_gamma_one_third"), 1e-13)
    if have("digamma_1p5"):
        c.close("fixture.digamma_1p5", sf.digamma(1.5), fval("digamma_1p5"),
                1e-13)
    if have("ln_barnes_g_half"):
        c.close("fixture.ln_barnes_g_half", sf.ln_barnes_g(0.5),
                fval("ln_barnes_g_half"), 1e-13)
    if have("ln_barnes_g_at_2p5"):
        c.close("fixture.ln_barnes_g_at_2p5", sf.ln_barnes_g(2.5),
                fval("ln_barnes_g_at_2p5"), 1e-12)
    if have("zeta_prime_minus_one"):
        c.close("fixture.zeta_prime_minus_one", sf.ZETA_PRIME_MINUS_ONE,
                fval("zeta_prime_minus_one"), 1e-15)
    for cname, ours in (("euler_gamma", sf.EULER_GAMMA),
                        ("ln_two", sf.LN_TWO), ("ln_pi", sf.LN_PI),
                        ("sqrt_pi", sf.SQRT_PI)):
        if have(cname):
            c.close(f"fixture.{cname}", ours, fval(cname), 1e-15)
    if have("zeta_3"):
        c.close("fixture.zeta_3", sf._zeta_int(3), fval("zeta_3"), 1e-14)
    if have("bc_integral_t1_nu025"):
        val, der = sf.bc_integral(1.0, 0.25, with_derivative=True)
        c.rel("fixture.bc_integral_t1_nu025", val,
              fval("bc_integral_t1_nu025"), 1e-11)
        if have("bc_integral_deriv_t1_nu025"):
            c.rel("fixture.bc_integral_deriv_t1_nu025", der,
                  fval("bc_integral_deriv_t1_nu025"), 1e-11)
    if have("b_coeff_sigma_third_nu0"):
        c.rel("fixture.b_coeff_sigma_third_nu0", asym.b_coeff_nu0(1.0 / 3.0),
              fval("b_coeff_sigma_third_nu0"), 1e-13)
    if have("b_coeff_sigma_third_nu025"):
        c.rel("fixture.b_coeff_sigma_third_nu025",
              asym.b_coeff(1.0 / 3.0, 0.25),
              fval("b_coeff_sigma_third_nu025"), 1e-13)
    if have("wu_constant"):
        c.rel("fixture.wu_constant", asym.wu_constant(), fval("wu_constant"),
              1e-13)
    if have("c_of_nu_half"):
        c.rel("fixture.c_of_nu_half", asym.c_of_nu(0.5), fval("c_of_nu_half"),
              1e-13)
    if have("momentum_t1_lambda_pi_0.5"):
        c.close("fixture.momentum_t1", family(0.5, 0.0).p_at(1.0),
                fval("momentum_t1_lambda_pi_0.5"), 1e-9)
    if have("psi_minus_linear_seed_t5_lambda_pi_0.5"):
        lam = 0.5 / math.pi
        delta = family(0.5, 0.0).q_at(5.0) - 2.0 * lam * sf.bessel_k(0, 5.0)
        c.close("fixture.seed_delta_t5", delta,
                fval("psi_minus_linear_seed_t5_lambda_pi_0.5"), 1e-12)
    for t in (1.0, 3.0):
        name = f"tau_minus_fredholm_t{t}_lambda_pi_1"
        if have(name):
            c.rel(f"fixture.{name}",
                  tau_mod.fredholm_tau_minus(t).value, fval(name), 1e-11)
        dname = f"fredholm_det_1m_k2_t{t}_lambda_pi_1"
        if have(dname):
            c.rel(f"fixture.{dname}",
                  tau_mod.fredholm_determinants(t, 200)[1], fval(dname), 1e-11)
    return c.checks


SUITES = {
    "specfn": suite_specfn,
    "constants": suite_constants,
    "action": suite_action,
    "tau": suite_tau,
    "nu": suite_nu,
    "fredholm": suite_fredholm,
}


def run_suite(name: str, tol_scale: float = 1.0,
              fixtures: dict[str, Fixture] | None = None) -> VerificationReport:
    if name != "all" and name not in SUITES:
        raise ValueError(
            f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'")
    started = time.perf_counter()
    checks: list[Check] = []
    if name == "all":
        for fn in SUITES.values():
            checks.extend(fn(tol_scale))
    else:
        checks.extend(SUITES[name](tol_scale))
    if fixtures:
        checks.extend(fixture_checks(fixtures, tol_scale))
    report = VerificationReport(suite=name, checks=sorted(
        checks, key=lambda ch: ch.name))
    report.runtime_seconds = time.perf_counter() - started
    return report
