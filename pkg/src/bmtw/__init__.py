"""Radial sinh-Gordon / Painleve-III tau-function toolkit.

Solves the one-parameter Bessel-seeded family of the radial sinh-Gordon
equation (and its nu-modified extension), evaluates the associated Ising
scaling tau-function by independent routes (Hamiltonian integral, action
integral, Painleve-III Hamiltonian product, Fredholm determinant), and
verifies the closed-form short-distance constants.
"""

from .asymptotics import (
    AsymptoticConstants,
    a_of_lambda,
    asymptotic_constants,
    b_coeff,
    c_of_nu,
    extract_prefactor,
    l_decomposition_residual,
    psi_small_t,
    sigma_of_lambda,
    tau_large_t,
    wu_constant,
    wu_identity_residual,
)
from .solver import (
    BmtwParams,
    PiiiState,
    SolverConfig,
    Trajectory,
    family,
    hamiltonian,
    piii_state_at,
    seed_at_infinity,
    solve_family,
    to_piii,
)
from .specfn import (
    CONSTANTS,
    DomainError,
    FundamentalConstants,
    barnes_integral_residual,
    bc_integral,
    bessel_k,
    digamma,
    ln_barnes_g,
    ln_gamma,
)
from .tau import (
    TauValue,
    action_S,
    action_identity_residual,
    fredholm_determinants,
    fredholm_tau_minus,
    nu_action_residual,
    tau_action,
    tau_hamiltonian,
    tau_nu,
    tau_route,
)
from .verify import VerificationReport, run_suite

__version__ = "0.1.0"

__all__ = [
    "AsymptoticConstants",
    "BmtwParams",
    "CONSTANTS",
    "DomainError",
    "FundamentalConstants",
    "PiiiState",
    "SolverConfig",
    "TauValue",
    "Trajectory",
    "VerificationReport",
    "a_of_lambda",
    "action_S",
    "action_identity_residual",
    "asymptotic_constants",
    "b_coeff",
    "barnes_integral_residual",
    "bc_integral",
    "bessel_k",
    "c_of_nu",
    "digamma",
    "extract_prefactor",
    "family",
    "fredholm_determinants",
    "fredholm_tau_minus",
    "hamiltonian",
    "l_decomposition_residual",
    "ln_barnes_g",
    "ln_gamma",
    "nu_action_residual",
    "piii_state_at",
    "psi_small_t",
    "run_suite",
    "seed_at_infinity",
    "sigma_of_lambda",
    "solve_family",
    "tau_action",
    "tau_hamiltonian",
    "tau_large_t",
    "tau_nu",
    "tau_route",
    "to_piii",
    "wu_constant",
    "wu_identity_residual",
]
