import math

import numpy as np
import pytest

from bmtw import specfn as sf
from bmtw.solver import (
    BmtwParams,
    SeedPointError,
    SolverConfig,
    SolverFailure,
    family,
    hamiltonian,
    piii_hamiltonian,
    piii_hamiltonian_eliminated,
    piii_state_at,
    seed_at_infinity,
    solve_family,
    to_piii,
)

SIGMA_HALF = 1.0 / 3.0  # sigma at lambda*pi = 0.5


# --- parameter and config validation ----------------------------------------

def test_params_validation():
    BmtwParams(0.0, 0.0)
    BmtwParams(1.0, 4.0)
    with pytest.raises(sf.DomainError):
        BmtwParams(1.5, 0.0)
    with pytest.raises(sf.DomainError):
        BmtwParams(-0.1, 0.0)
    with pytest.raises(sf.DomainError):
        BmtwParams(0.5, -0.5)
    with pytest.raises(sf.DomainError):
        BmtwParams(0.5, 4.5)


def test_config_validation():
    with pytest.raises(sf.DomainError):
        SolverConfig(t_seed=0.3)  # below log_switch
    with pytest.raises(sf.DomainError):
        SolverConfig(t_min=0.7)  # above log_switch
    with pytest.raises(sf.DomainError):
        SolverConfig(rel_tol=0.0)


# --- seeding ------------------------------------------------------------------

def test_seed_zero_family():
    q0, p0, chi0, chip0, tails = seed_at_infinity(BmtwParams(0.0, 0.0), 14.0)
    assert q0 == 0.0 and p0 == 0.0
    assert abs(chi0 - 2.0 * sf.bessel_k(0, 14.0)) < 1e-18
    assert tails == (0.0, -0.0, 0.0) or all(abs(x) == 0.0 for x in tails)


def test_seed_is_bessel_at_nu0():
    q0, p0, _, _, _ = seed_at_infinity(BmtwParams(1.0, 0.0), 14.0)
    lam = 1.0 / math.pi
    assert abs(q0 - 2 * lam * sf.bessel_k(0, 14.0)) < 1e-20
    # p = -t dq/dt and dK0/dt = -K1
    assert abs(p0 - 2 * lam * 14.0 * sf.bessel_k(1, 14.0)) < 1e-18


def test_seed_point_too_small():
    with pytest.raises(SeedPointError):
        seed_at_infinity(BmtwParams(1.0, 0.0), 7.0)


def test_seed_doubling_changes_nothing_downstream():
    a = family(0.5, 0.0, SolverConfig(t_seed=12.0))
    b = family(0.5, 0.0, SolverConfig(t_seed=24.0))
    assert abs(a.q_at(1.0) - b.q_at(1.0)) <= 1e-10


# --- orbit correctness ----------------------------------------------------------

def test_orbit_matches_reference_values(fixtures):
    for lp in (0.5, 1.0):
        traj = family(lp, 0.0)
        for t in (0.1, 1.0, 5.0):
            ref = fixtures[f"psi_t{t}_lambda_pi_{lp}"][0]
            assert abs(traj.q_at(t) - ref) < 1e-9, (lp, t)


def test_momentum_matches_reference(fixtures):
    traj = family(0.5, 0.0)
    assert abs(traj.p_at(1.0) - fixtures["momentum_t1_lambda_pi_0.5"][0]) < 1e-9


def test_seed_delta_fixture(fixtures):
    # nonlinear correction beyond the Bessel boundary form at t = 5
    lam = 0.5 / math.pi
    delta = family(0.5, 0.0).q_at(5.0) - 2 * lam * sf.bessel_k(0, 5.0)
    assert abs(delta - fixtures["psi_minus_linear_seed_t5_lambda_pi_0.5"][0]) < 1e-12


def test_zero_family_is_identically_zero():
    traj = family(0.0, 0.0)
    assert np.all(traj.q == 0.0)
    assert np.all(traj.p == 0.0)
    assert np.all(traj.acc_H == 0.0)
    assert np.all(traj.acc_action == 0.0)
    assert np.all(traj.acc_aux == 0.0)
    # variational component solves the linear equation: chi = 2 K0
    assert abs(traj.chi_at(1.0) - 2.0 * sf.bessel_k(0, 1.0)) < 1e-9


def test_grid_and_accumulator_invariants():
    traj = family(0.75, 0.0)
    assert np.all(np.diff(traj.grid) > 0)
    assert traj.grid[0] == traj.config.t_min
    assert traj.grid[-1] == traj.config.t_seed
    assert traj.acc_H[-1] == 0.0 and traj.acc_action[-1] == 0.0
    assert traj.acc_aux[-1] == 0.0
    with pytest.raises(sf.DomainError):
        traj.state_at(traj.config.t_min / 2)
    with pytest.raises(sf.DomainError):
        traj.state_at(traj.config.t_seed * 2)


def test_hamiltonian_flow_recovered_from_dense_output():
    traj = family(0.5, 0.0)
    for t in (0.05, 0.7, 3.0):
        h = 1e-4 * t
        s = traj.state_at(t)
        q, p = float(s[0]), float(s[1])
        dq = (traj.q_at(t + h) - traj.q_at(t - h)) / (2 * h)
        dp = (traj.p_at(t + h) - traj.p_at(t - h)) / (2 * h)
        assert abs(dq - (-p / t)) < 1e-6 * (1 + abs(p / t))
        rhs = -0.5 * t * math.sinh(2 * q)
        assert abs(dp - rhs) < 1e-6 * (1 + abs(rhs))


def test_hamiltonian_flow_nu_modified():
    nu = 0.25
    traj = family(0.5, nu)
    for t in (0.3, 2.0):
        h = 1e-4 * t
        s = traj.state_at(t)
        q, p = float(s[0]), float(s[1])
        dq = (traj.q_at(t + h) - traj.q_at(t - h)) / (2 * h)
        dp = (traj.p_at(t + h) - traj.p_at(t - h)) / (2 * h)
        assert abs(dq - (-p / t)) < 1e-6 * (1 + abs(p / t))
        rhs = -0.5 * t * math.sinh(2 * q) - 2.0 * nu * math.sinh(q)
        assert abs(dp - rhs) < 1e-6 * (1 + abs(rhs))


def test_momentum_convention():
    # p = -t dq/dt along the orbit
    traj = family(0.5, 0.0)
    t, h = 1.0, 1e-5
    dq = (traj.q_at(t + h) - traj.q_at(t - h)) / (2 * h)
    assert abs(traj.p_at(t) + t * dq) < 1e-8


def test_variational_derivative_vs_finite_difference():
    delta = 1e-5
    lam = 0.5 / math.pi
    traj = family(0.5, 0.0)
    for t in (0.1, 1.0, 5.0):
        qa = family((lam + delta) * math.pi, 0.0).q_at(t)
        qb = family((lam - delta) * math.pi, 0.0).q_at(t)
        fd = (qa - qb) / (2 * delta)
        assert abs(traj.chi_at(t) - fd) < 1e-6


def test_hamiltonian_values():
    assert hamiltonian(0.0, 0.0, 3.0) == 0.0
    traj = family(0.5, 0.0)
    assert abs(traj.hamiltonian_at(10.0)) < 1e-9
    with pytest.raises(sf.DomainError):
        hamiltonian(0.1, 0.1, 0.0)


# --- small-t asymptotics ---------------------------------------------------------

def test_small_t_exponent_and_amplitude():
    traj = family(0.5, 0.0)
    t = 1e-4
    # slope dq/dln t -> -sigma, i.e. p -> sigma
    assert abs(traj.p_at(t) - SIGMA_HALF) < 1e-3
    lnb = math.log(0.5) + sf.ln_gamma(1.0 / 3.0) - sf.ln_gamma(2.0 / 3.0)
    assert abs(traj.q_at(t) + SIGMA_HALF * math.log(t) + lnb) < 2e-3


def test_small_t_error_order_halving():
    # E(t) = q + sigma ln t + ln B shrinks like t^(2(1-sigma))
    traj = family(0.5, 0.0)
    lnb = math.log(0.5) + sf.ln_gamma(1.0 / 3.0) - sf.ln_gamma(2.0 / 3.0)
    expected = 2.0 ** (-2.0 * (1.0 - SIGMA_HALF))
    for t in (1e-2, 1e-3):
        e_half = abs(traj.q_at(t / 2) + SIGMA_HALF * math.log(t / 2) + lnb)
        e_full = abs(traj.q_at(t) + SIGMA_HALF * math.log(t) + lnb)
        assert abs(e_half / e_full - expected) < 0.25 * expected


def test_lambda_pi_one_logarithmic_law():
    traj = family(1.0, 0.0)
    res = {}
    for t in (1e-1, 1e-2, 1e-3):
        pred = -math.log(t) - math.log(-0.5 * (math.log(t / 8.0)
                                               + sf.EULER_GAMMA))
        res[t] = abs(traj.q_at(t) - pred)
    assert res[1e-3] <= 1e-3
    assert res[1e-3] <= res[1e-2] <= res[1e-1]


def test_hamiltonian_limit():
    traj = family(0.5, 0.0)
    target = SIGMA_HALF ** 2 / 4.0
    err = {t: abs(-0.5 * t * traj.hamiltonian_at(t) - target)
           for t in (1e-2, 1e-3, 1e-4)}
    expected = 10.0 ** (-2.0 * (1.0 - SIGMA_HALF))
    assert abs(err[1e-3] / err[1e-2] - expected) < 0.25 * expected
    assert abs(err[1e-4] / err[1e-3] - expected) < 0.25 * expected


# --- nu-modified equation --------------------------------------------------------

def test_nu_continuity_at_zero():
    a = family(0.5, 0.0)
    b = family(0.5, 1e-6)
    sup = max(abs(a.q_at(t) - b.q_at(t)) for t in np.geomspace(0.01, 10.0, 40))
    assert sup <= 1e-4


def test_nu_boundary_expansion_correction():
    # residual of the corrected boundary expansion is O(t^(2(1-sigma)))
    nu = 0.25
    traj = family(0.5, nu)
    b = math.exp(-3.0 * SIGMA_HALF * sf.LN_TWO
                 + 2.0 * (sf.ln_gamma((1 - SIGMA_HALF) / 2)
                          - sf.ln_gamma((1 + SIGMA_HALF) / 2))
                 + sf.ln_gamma(nu + (1 + SIGMA_HALF) / 2)
                 - sf.ln_gamma(nu + (1 - SIGMA_HALF) / 2))
    r = {}
    for t in (1e-2, 1e-3):
        bracket = (1.0 - (nu / b) * (1 - SIGMA_HALF) ** -2 * t ** (1 - SIGMA_HALF)
                   + b * nu * (1 + SIGMA_HALF) ** -2 * t ** (1 + SIGMA_HALF))
        r[t] = abs(traj.q_at(t) + SIGMA_HALF * math.log(t) + math.log(b)
                   + math.log(bracket))
    expected = 10.0 ** (-2.0 * (1.0 - SIGMA_HALF))
    assert r[1e-3] < 1e-5
    assert abs(r[1e-3] / r[1e-2] - expected) < 0.5 * expected


def test_nu_log_predictor_at_lambda_pi_one():
    nu = 0.5
    traj = family(1.0, nu)
    c = 1.0 + 2 * nu * (3 * sf.LN_TWO - 2 * sf.EULER_GAMMA - sf.digamma(1 + nu))
    res = {}
    for t in (1e-1, 1e-2, 1e-3):
        lt = math.log(t)
        pred = -math.log(0.5 * t * (nu * lt * lt - c * lt
                                    + (c * c - 1.0) / (4 * nu)))
        res[t] = abs(traj.q_at(t) - pred)
    assert res[1e-3] < res[1e-2] < res[1e-1]
    assert res[1e-3] < 1e-5


# --- failure modes ----------------------------------------------------------------

def test_sinh_overflow_is_reported():
    cfg = SolverConfig(t_min=1e-170, log_switch=0.5, t_seed=14.0)
    with pytest.raises(SolverFailure):
        solve_family(BmtwParams(1.0, 0.0), cfg)


# --- Painleve-III coordinates -----------------------------------------------------

def test_piii_momenta_limits_at_seed():
    nu = 0.25
    traj = family(0.5, nu)
    st = piii_state_at(traj, 14.0)
    assert abs(st.v1 + 0.5 * (2 * nu + 1)) < 1e-6
    assert abs(st.v2 - 0.5 * (2 * nu - 1)) < 1e-6


def test_piii_hamiltonians_match_eliminated_forms():
    nu = 0.25
    traj = family(0.5, nu)
    for t in (0.3, 1.0, 4.0):
        s = traj.state_at(t)
        q, p = float(s[0]), float(s[1])
        x, u = 0.5 * t, math.exp(-q)
        du = (p / x) * u
        st = piii_state_at(traj, t)
        assert abs(st.h1 - piii_hamiltonian_eliminated(u, du, x, nu, 1)) < 1e-9
        assert abs(st.h2 - piii_hamiltonian_eliminated(u, du, x, nu, 2)) < 1e-9


def test_piii_trivial_family():
    nu = 0.3
    st = piii_state_at(family(0.0, nu), 2.0)
    assert st.u == 1.0
    assert abs(st.v1 + 0.5 * (2 * nu + 1)) < 1e-15
    assert abs(st.v2 - 0.5 * (2 * nu - 1)) < 1e-15
    assert abs(st.h1) < 1e-14 and abs(st.h2) < 1e-14
    # direct substitution check of H_1(1, -(2nu+1)/2, x, nu) = 0
    assert abs(piii_hamiltonian(1.0, -0.5 * (2 * nu + 1), 2.0, nu, 1)) < 1e-15


def test_to_piii_node_indexing():
    traj = family(0.5, 0.0)
    st = to_piii(traj, 0)
    assert st.x == 0.5 * traj.grid[0]
    st_last = to_piii(traj, len(traj.grid) - 1)
    assert st_last.x == 0.5 * traj.grid[-1]
    with pytest.raises(IndexError):
        to_piii(traj, len(traj.grid))


# --- trajectory export --------------------------------------------------------------

def test_csv_round_trip(tmp_path):
    traj = family(0.5, 0.0)
    path = tmp_path / "traj.csv"
    traj.to_csv(str(path))
    lines = path.read_text().splitlines()
    assert lines[0] == "t,q,p,chi,acc_H,acc_action,acc_aux"
    assert len(lines) == len(traj.grid) + 1
    first = [float(tok) for tok in lines[1].split(",")]
    assert first[0] == traj.grid[0]
    assert first[1] == traj.q[0]


def test_trajectory_arrays_immutable():
    traj = family(0.5, 0.0)
    with pytest.raises(ValueError):
        traj.q[0] = 1.0
