"""Closed-form constants and asymptotic predictors of the family.

Short-distance exponents and amplitudes (sigma, B, A), the nu-deformed
log-correction coefficient C(nu), the small-t and large-t predictors for
the orbit and the tau-function, prefactor extraction from samples, the
quarter-root identity tying A at lambda*pi = 1 to the critical lattice
amplitude, and the quadrature-vs-closed-form check of the amplitude's
lambda-integral decomposition.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ._gauss import mapped_legendre
from .specfn import (
    EULER_GAMMA,
    LN_TWO,
    ZETA_PRIME_MINUS_ONE,
    DomainError,
    digamma,
    ln_barnes_g,
    ln_gamma,
)
from .solver import BmtwParams


def sigma_of_lambda(lambda_pi: float) -> float:
    """sigma = (2/pi) arcsin(lambda*pi), strictly increasing on [0, 1]."""
    if not 0.0 <= lambda_pi <= 1.0:
        raise DomainError(f"lambda_pi must lie in [0, 1], got {lambda_pi}")
    return (2.0 / math.pi) * math.asin(lambda_pi)


def lambda_of_sigma(sigma: float) -> float:
    """Inverse map: lambda_pi = sin(pi sigma / 2)."""
    if not 0.0 <= sigma <= 1.0:
        raise DomainError(f"sigma must lie in [0, 1], got {sigma}")
    return math.sin(0.5 * math.pi * sigma)


def b_coeff_nu0(sigma: float) -> float:
    """B(sigma) = 2^(-3 sigma) Gamma((1-sigma)/2) / Gamma((1+sigma)/2)."""
    if not 0.0 <= sigma < 1.0:
        raise DomainError(
            f"B diverges as sigma -> 1 (got sigma = {sigma}); use the "
            "lambda_pi = 1 logarithmic predictor instead")
    return math.exp(-3.0 * sigma * LN_TWO
                    + ln_gamma(0.5 * (1.0 - sigma))
                    - ln_gamma(0.5 * (1.0 + sigma)))


def b_coeff(sigma: float, nu: float = 0.0) -> float:
    """General amplitude coefficient

    B(sigma, nu) = 2^(-3 sigma) [Gamma((1-sigma)/2)/Gamma((1+sigma)/2)]^2
                   * Gamma(nu + (1+sigma)/2) / Gamma(nu + (1-sigma)/2).

    At nu = 0 one gamma ratio cancels and the value reduces to b_coeff_nu0.
    """
    if not 0.0 <= sigma < 1.0:
        raise DomainError(
            f"B diverges as sigma -> 1 (got sigma = {sigma}); use the "
            "lambda_pi = 1 logarithmic predictor instead")
    if not nu > -0.5:
        raise DomainError(f"nu must exceed -1/2, got {nu}")
    return math.exp(
        -3.0 * sigma * LN_TWO
        + 2.0 * (ln_gamma(0.5 * (1.0 - sigma)) - ln_gamma(0.5 * (1.0 + sigma)))
        + ln_gamma(nu + 0.5 * (1.0 + sigma))
        - ln_gamma(nu + 0.5 * (1.0 - sigma)))


def a_of_lambda(lambda_pi: float) -> float:
    """Short-distance amplitude A = e^(3 zeta'(-1) - (3 s^2 + 1/6) ln 2) / (G(1+s) G(1-s)).

    Here s = (1 - sigma)/2.  Defined for lambda_pi in (0, 1]; the
    lambda_pi -> 0 limit is 1/2 but the point itself is excluded (the
    tau-function at lambda = 0 is identically 1, not 1/2).
    """
    if not 0.0 < lambda_pi <= 1.0:
        raise DomainError(
            f"amplitude A is defined for lambda_pi in (0, 1], got {lambda_pi}")
    s = 0.5 * (1.0 - sigma_of_lambda(lambda_pi))
    return math.exp(3.0 * ZETA_PRIME_MINUS_ONE - (3.0 * s * s + 1.0 / 6.0) * LN_TWO
                    - ln_barnes_g(1.0 + s) - ln_barnes_g(1.0 - s))


def c_of_nu(nu: float) -> float:
    """C(nu) = 1 + 2 nu (3 ln 2 - 2 gamma_E - psi(1 + nu))."""
    if not nu > -0.5:
        raise DomainError(f"nu must exceed -1/2, got {nu}")
    return 1.0 + 2.0 * nu * (3.0 * LN_TWO - 2.0 * EULER_GAMMA - digamma(1.0 + nu))


@dataclass(frozen=True)
class AsymptoticConstants:
    sigma: float
    s: float
    B: float
    A: float
    nu: float


def asymptotic_constants(params: BmtwParams) -> AsymptoticConstants:
    """All short-distance constants of one family member (B is +inf at sigma=1)."""
    sigma = sigma_of_lambda(params.lambda_pi)
    s = 0.5 * (1.0 - sigma)
    b = math.inf if sigma >= 1.0 else b_coeff(sigma, params.nu)
    a = a_of_lambda(params.lambda_pi) if params.lambda_pi > 0.0 else math.nan
    return AsymptoticConstants(sigma=sigma, s=s, B=b, A=a, nu=params.nu)


def psi_small_t(t: float, params: BmtwParams) -> float:
    """Predicted orbit value as t -> 0.

    For lambda_pi < 1:
        -sigma ln t - ln B
        - ln[1 - (nu/B)(1-sigma)^-2 t^(1-sigma) + B nu (1+sigma)^-2 t^(1+sigma)]
    For lambda_pi = 1 the amplitude degenerates to logarithms:
        nu = 0:  -ln t - ln( -(ln(t/8) + gamma_E)/2 )
        nu != 0: -ln[ (t/2) (nu ln^2 t - C(nu) ln t + (C^2(nu) - 1)/(4 nu)) ]
    """
    if not t > 0.0:
        raise DomainError(f"psi_small_t requires t > 0, got {t}")
    nu = params.nu
    if params.lambda_pi == 1.0:
        lt = math.log(t)
        if nu == 0.0:
            return -lt - math.log(-0.5 * (math.log(t / 8.0) + EULER_GAMMA))
        c = c_of_nu(nu)
        poly = nu * lt * lt - c * lt + (c * c - 1.0) / (4.0 * nu)
        return -math.log(0.5 * t * poly)
    sigma = sigma_of_lambda(params.lambda_pi)
    b = b_coeff(sigma, nu)
    bracket = (1.0
               - (nu / b) * (1.0 - sigma) ** -2.0 * t ** (1.0 - sigma)
               + b * nu * (1.0 + sigma) ** -2.0 * t ** (1.0 + sigma))
    return -sigma * math.log(t) - math.log(b) - math.log(bracket)


def tau_large_t(t: float, params: BmtwParams, branch: str) -> float:
    """Leading behaviour as t -> +infinity.

    plus:  lambda Gamma(nu+1/2) (2t)^(-nu-1/2) e^-t
    minus: 1 + (pi lambda^2 / 8 t^2) e^(-2t)                     at nu = 0
           1 - (lambda^2/2) nu Gamma^2(nu+1/2) (2t)^(-2nu-1) e^(-2t)  else

    The nu -> 0 limit of the general minus form is 1, not the nu = 0 form:
    the two displays carry different orders and are encoded verbatim.
    """
    if branch not in ("plus", "minus"):
        raise DomainError(f"branch must be 'plus' or 'minus', got {branch!r}")
    lam, nu = params.lam, params.nu
    if branch == "plus":
        return lam * math.exp(ln_gamma(nu + 0.5)) * (2.0 * t) ** (-nu - 0.5) \
            * math.exp(-t)
    if nu == 0.0:
        return 1.0 + (math.pi * lam * lam / (8.0 * t * t)) * math.exp(-2.0 * t)
    g = math.exp(ln_gamma(nu + 0.5))
    return 1.0 - 0.5 * lam * lam * nu * g * g * (2.0 * t) ** (-2.0 * nu - 1.0) \
        * math.exp(-2.0 * t)


def extract_prefactor(samples, sigma: float):
    """Estimate the short-distance amplitude from (t, tau) samples.

    Samples must be geometrically spaced in t (at least three points);
    A_est(t) = tau * t^(-sigma(sigma-2)/4).  Returns the estimate at the
    smallest t and the ratio |A_est step| of the last two refinements
    (expected about 10^-min(sigma, 2(1-sigma)) per decade).
    """
    pts = sorted(samples, key=lambda p: -p[0])
    if len(pts) < 3:
        raise DomainError("need at least three samples spanning >= 3 decades")
    if not 0.0 < sigma <= 1.0:
        raise DomainError(
            f"prefactor extraction needs sigma in (0, 1], got {sigma}")
    expo = -0.25 * sigma * (sigma - 2.0)
    ests = [tau * t ** expo for t, tau in pts]
    d_last = abs(ests[-1] - ests[-2])
    d_prev = abs(ests[-2] - ests[-3])
    ratio = d_last / d_prev if d_prev > 0.0 else math.nan
    return ests[-1], ratio


def wu_identity_residual() -> float:
    """|2^(1/4) A(1/pi) - e^(3 zeta'(-1) + (1/12) ln 2)|."""
    lattice = math.exp(3.0 * ZETA_PRIME_MINUS_ONE + LN_TWO / 12.0)
    return abs(2.0 ** 0.25 * a_of_lambda(1.0) - lattice)


def wu_constant() -> float:
    """e^(3 zeta'(-1) + (1/12) ln 2), the critical 2-point amplitude."""
    return math.exp(3.0 * ZETA_PRIME_MINUS_ONE + LN_TWO / 12.0)


def _l_quadrature(sigma: float, n: int = 64) -> float:
    """(1/2) int_0^sigma s' dlnB/ds' ds' in the sigma variable.

    dlnB/dsigma = -3 ln 2 - psi((1-sigma)/2)/2 - psi((1+sigma)/2)/2; the
    substitution lambda' = sin(pi sigma'/2)/pi renders the integrand smooth
    up to the arcsin endpoint.
    """
    x, w = mapped_legendre(0.0, sigma, n)
    total = 0.0
    for xi, wi in zip(x, w):
        dlnb = -3.0 * LN_TWO - 0.5 * digamma(0.5 * (1.0 - xi)) \
            - 0.5 * digamma(0.5 * (1.0 + xi))
        total += wi * xi * dlnb
    return 0.5 * total


def l_decomposition_residual(lambda_pi: float) -> float:
    """Direct quadrature of the amplitude's lambda-integral vs its closed form.

    The closed form assembles the elementary piece, the Barnes-integral
    piece, and the 2-power prefactor; agreement certifies the whole
    constant chain (ln s terms cancel between the two pieces).
    """
    if not 0.0 < lambda_pi < 1.0:
        raise DomainError(
            f"decomposition check needs lambda_pi in (0, 1), got {lambda_pi}")
    sigma = sigma_of_lambda(lambda_pi)
    s = 0.5 * (1.0 - sigma)
    numeric = _l_quadrature(sigma)
    elementary = -0.5 * math.log(s) - 0.5 * sigma - 0.5 * LN_TWO
    barnes_piece = (0.5 * math.log(s)
                    + 0.5 * (ln_gamma(0.5 * (1.0 - sigma))
                             - ln_gamma(0.5 * (1.0 + sigma)))
                    - s * s
                    - ln_barnes_g(1.0 + s) - ln_barnes_g(1.0 - s)
                    + 0.25 + (7.0 / 12.0) * LN_TWO
                    + 3.0 * ZETA_PRIME_MINUS_ONE)
    closed = -0.75 * sigma * sigma * LN_TWO + elementary + barnes_piece
    return abs(numeric - closed)
