"""Special-function and closed-form constant fixtures.

Every value is produced by mpmath arbitrary-precision routines (or direct
high-precision quadrature), never by the double-precision package under test.
"""

from __future__ import annotations

from mpmath import mp, mpf

from .store import FixtureSet

WORK_DPS = 50
OUT_DIGITS = 32


def _sigma(lambda_pi):
    return 2 / mp.pi * mp.asin(lambda_pi)


def _barnes_a(lambda_pi):
    """exp(3 zeta'(-1) - (3 s^2 + 1/6) ln 2) / (G(1+s) G(1-s)), s = (1-sigma)/2."""
    zp = mp.zeta(-1, derivative=1)
    s = (1 - _sigma(lambda_pi)) / 2
    return mp.e ** (3 * zp - (3 * s**2 + mpf(1) / 6) * mp.ln(2)) / (
        mp.barnesg(1 + s) * mp.barnesg(1 - s)
    )


def _bc_integrand(theta, t, nu):
    return mp.e ** (-t * mp.cosh(theta)) * mp.tanh(theta / 2) ** (2 * nu)


# Upper limit for the cosh-substituted integrals: exp(-cosh(60)) is far below
# any working precision used here, while mp.inf makes tanh-sinh crawl.
THETA_CUT = 60


def gen_specfn_fixtures() -> FixtureSet:
    mp.dps = WORK_DPS
    fs = FixtureSet()

    # K0(1) by direct quadrature of the cosh representation, certified
    # against mpmath's own Bessel implementation.
    k0_quad = mp.quad(lambda th: mp.e ** (-mp.cosh(th)), [0, THETA_CUT])
    k0_ref = mp.besselk(0, 1)
    if abs(k0_quad - k0_ref) > mpf(10) ** (-(WORK_DPS - 8)):
        raise RuntimeError("K0(1): quadrature vs besselk disagreement")
    fs.add("bessel_k0_at_1", {"order": 0, "t": 1.0}, k0_quad,
           "adaptive tanh-sinh quadrature of int_0^inf exp(-cosh theta) dtheta, "
           "cross-checked against mpmath besselk", OUT_DIGITS)

    for t in (1e-4, 0.5, 2.0, 2.5, 10.0, 30.0, 100.0, 600.0):
        fs.add(f"bessel_k0_at_{t:g}", {"order": 0, "t": t},
               mp.besselk(0, mpf(repr(t))), "mpmath besselk", OUT_DIGITS)
        fs.add(f"bessel_k1_at_{t:g}", {"order": 1, "t": t},
               mp.besselk(1, mpf(repr(t))), "mpmath besselk", OUT_DIGITS)

    fs.add("ln_gamma_one_third", {"x": 1 / 3}, mp.loggamma(mpf(1) / 3),
           "mpmath loggamma", OUT_DIGITS)
    fs.add("digamma_1p5", {"x": 1.5}, mp.digamma(mpf("1.5")),
           "mpmath digamma", OUT_DIGITS)

    # ln G(1/2) both from mpmath barnesg and from the closed special value;
    # the two must agree or the generator aborts.
    zp = mp.zeta(-1, derivative=1)
    lng_half = mp.log(mp.barnesg(mpf("0.5")))
    lng_half_closed = (3 * zp - mp.ln(mp.pi) / 2 + mp.ln(2) / 12) / 2
    if abs(lng_half - lng_half_closed) > mpf(10) ** (-(WORK_DPS - 8)):
        raise RuntimeError("ln G(1/2): barnesg vs closed form disagreement")
    fs.add("ln_barnes_g_half", {"x": 0.5}, lng_half,
           "mpmath barnesg, cross-checked against the zeta'(-1) closed form",
           OUT_DIGITS)
    fs.add("ln_barnes_g_at_2p5", {"x": 2.5}, mp.log(mp.barnesg(mpf("2.5"))),
           "mpmath barnesg", OUT_DIGITS)

    fs.add("zeta_prime_minus_one", {}, zp, "mpmath zeta derivative", OUT_DIGITS)
    fs.add("euler_gamma", {}, +mp.euler, "mpmath constant", OUT_DIGITS)
    fs.add("ln_two", {}, mp.ln(2), "mpmath constant", OUT_DIGITS)
    fs.add("ln_pi", {}, mp.ln(mp.pi), "mpmath constant", OUT_DIGITS)
    fs.add("sqrt_pi", {}, mp.sqrt(mp.pi), "mpmath constant", OUT_DIGITS)
    fs.add("zeta_3", {}, mp.zeta(3), "mpmath zeta", OUT_DIGITS)

    # Short-distance amplitude coefficients.
    b_third = mpf(2) ** -1 * mp.gamma(mpf(1) / 3) / mp.gamma(mpf(2) / 3)
    fs.add("b_coeff_sigma_third_nu0", {"sigma": 1 / 3, "nu": 0.0}, b_third,
           "mpmath gamma ratio", OUT_DIGITS)
    sg, nu = mpf(1) / 3, mpf("0.25")
    b_gen = (mpf(2) ** (-3 * sg)
             * (mp.gamma((1 - sg) / 2) / mp.gamma((1 + sg) / 2)) ** 2
             * mp.gamma(nu + (1 + sg) / 2) / mp.gamma(nu + (1 - sg) / 2))
    fs.add("b_coeff_sigma_third_nu025", {"sigma": 1 / 3, "nu": 0.25}, b_gen,
           "mpmath gamma ratios, four-factor form", OUT_DIGITS)

    for lp in (0.25, 0.5, 0.75, 1.0):
        fs.add(f"amplitude_a_lambda_pi_{lp:g}", {"lambda_pi": lp},
               _barnes_a(mpf(repr(lp))),
               "mpmath barnesg and zeta'(-1) in the closed amplitude formula",
               OUT_DIGITS)
    fs.add("amplitude_a_lambda_pi_0_limit", {"lambda_pi": 0.0},
           "0.5" + "0" * 31,
           "symbolic reduction: G(3/2)G(1/2) = sqrt(pi) G(1/2)^2 and the "
           "G(1/2) special value collapse the formula to exp(-ln 2); exact")

    fs.add("wu_constant", {}, mp.e ** (3 * zp + mp.ln(2) / 12),
           "mpmath exp of 3 zeta'(-1) + (1/12) ln 2", OUT_DIGITS)

    c_half = 1 + 2 * mpf("0.5") * (3 * mp.ln(2) - 2 * mp.euler - mp.digamma(mpf("1.5")))
    fs.add("c_of_nu_half", {"nu": 0.5}, c_half,
           "mpmath digamma in the C(nu) closed form", OUT_DIGITS)

    # nu-deformed boundary integral at a generic point, plus its t-derivative.
    t, nu = mpf(1), mpf("0.25")
    val = mp.quad(lambda th: _bc_integrand(th, t, nu), [0, THETA_CUT])
    der = mp.quad(lambda th: -mp.cosh(th) * _bc_integrand(th, t, nu), [0, THETA_CUT])
    fs.add("bc_integral_t1_nu025", {"t": 1.0, "nu": 0.25}, val,
           "adaptive tanh-sinh quadrature of the cosh-substituted integrand",
           OUT_DIGITS)
    fs.add("bc_integral_deriv_t1_nu025", {"t": 1.0, "nu": 0.25}, der,
           "adaptive tanh-sinh quadrature of the differentiated integrand",
           OUT_DIGITS)

    return fs
