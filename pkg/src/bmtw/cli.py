"""Command-line front end.

Commands:
  solve      integrate one family member and write the trajectory CSV
  tau        evaluate the tau-function by a chosen route (JSON on stdout)
  verify     run a named verification suite (JSON report, nonzero on failure)
  sweep      evaluate a quantity over parameter grids (CSV, deterministic order)
  prefactor  extract the short-distance amplitude from orbit samples
  constants  dump closed-form constants (JSON, 15 significant digits)

Exit codes: 0 success / all checks pass, 1 computation or check failure,
2 usage error.  A JSON config file (--config) may supply SolverConfig
defaults; explicit flags override it.  Every command accepts
--fixtures FILE to cross-check its outputs against oracle fixtures.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import asymptotics as asym
from . import specfn as sf
from . import tau as tau_mod
from . import verify as verify_mod
from .fixtures import load_fixtures
from .solver import (
    DEFAULT_CONFIG,
    BmtwParams,
    SolverConfig,
    SolverFailure,
    family,
)

USAGE_EXIT = 2
FAIL_EXIT = 1


def _fmt(x: float) -> float:
    """Round-trip state at 15 significant digits for reports."""
    return float(f"{x:.15g}")


def _load_config(args) -> SolverConfig:
    base = {
        "t_seed": DEFAULT_CONFIG.t_seed,
        "t_min": DEFAULT_CONFIG.t_min,
        "rel_tol": DEFAULT_CONFIG.rel_tol,
        "abs_tol": DEFAULT_CONFIG.abs_tol,
        "log_switch": DEFAULT_CONFIG.log_switch,
    }
    if getattr(args, "config", None):
        with open(args.config, encoding="utf-8") as fh:
            loaded = json.load(fh)
        unknown = set(loaded) - set(base)
        if unknown:
            raise sf.DomainError(f"unknown config keys: {sorted(unknown)}")
        base.update(loaded)
    if getattr(args, "t_min", None) is not None:
        base["t_min"] = args.t_min
    if getattr(args, "t_seed", None) is not None:
        base["t_seed"] = args.t_seed
    return SolverConfig(**base)


def _fixture_deltas(args, pairs) -> None:
    """Emit fixture-delta JSON lines on stderr for overlapping quantities."""
    if not getattr(args, "fixtures", None):
        return
    fixtures = load_fixtures(args.fixtures)
    for name, ours in pairs:
        if name in fixtures:
            ref = fixtures[name].float_value
            print(json.dumps({"fixture": name, "value": _fmt(ours),
                              "reference": _fmt(ref),
                              "delta": _fmt(ours - ref)}),
                  file=sys.stderr)


def cmd_solve(args) -> int:
    config = _load_config(args)
    if args.t_max is not None and args.t_max > config.t_seed:
        config = SolverConfig(args.t_max, config.t_min, config.rel_tol,
                              config.abs_tol, config.log_switch)
    params = BmtwParams(args.lambda_pi, args.nu)
    traj = family(params.lambda_pi, params.nu, config)
    t_max = args.t_max if args.t_max is not None else config.t_seed
    if args.out == "-":
        _write_csv(traj, sys.stdout, t_max)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            _write_csv(traj, fh, t_max)
    _fixture_deltas(args, [
        (f"psi_t{t}_lambda_pi_{args.lambda_pi}", traj.q_at(t))
        for t in (0.1, 1.0, 5.0)
        if args.nu == 0.0 and traj.t_min <= t <= min(t_max, traj.t_seed)
    ])
    return 0


def _write_csv(traj, fh, t_max) -> None:
    fh.write("t,q,p,chi,acc_H,acc_action,acc_aux\n")
    for i, t in enumerate(traj.grid):
        if t > t_max * (1.0 + 1e-12):
            break
        row = (t, traj.q[i], traj.p[i], traj.chi[i], traj.acc_H[i],
               traj.acc_action[i], traj.acc_aux[i])
        fh.write(",".join(repr(float(v)) for v in row) + "\n")


def cmd_tau(args) -> int:
    config = _load_config(args)
    params = BmtwParams(args.lambda_pi, args.nu)
    tv = tau_mod.tau_route(args.t, params, args.branch, args.route, config,
                           with_refinement=args.refine)
    print(json.dumps(tv.to_dict(), sort_keys=True))
    if args.branch == "minus" and args.lambda_pi == 1.0 and args.nu == 0.0:
        _fixture_deltas(args, [(f"tau_minus_fredholm_t{args.t}_lambda_pi_1",
                                tv.value)])
    return 0


def cmd_verify(args) -> int:
    fixtures = load_fixtures(args.fixtures) if args.fixtures else None
    report = verify_mod.run_suite(args.suite, args.tol_scale, fixtures)
    text = report.to_json(include_timing=args.timing)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if report.n_failed:
        print(f"{report.n_failed} of {len(report.checks)} checks failed",
              file=sys.stderr)
        return FAIL_EXIT
    return 0


def _csv_safe(exc) -> str:
    return str(exc).replace(",", ";").replace("\n", " ")


def _parse_grid(text: str) -> list[float]:
    if not text.strip():
        return []
    return [float(tok) for tok in text.split(",") if tok.strip()]


def cmd_sweep(args) -> int:
    config = _load_config(args)
    lambda_grid = _parse_grid(args.lambda_grid)
    nu_grid = _parse_grid(args.nu_grid)
    t_grid = _parse_grid(args.t_grid)
    rows = []
    failed = False
    if args.quantity == "tau":
        header = "lambda_pi,nu,t,tau_minus,tau_plus,error"
        for lp in lambda_grid:
            for nu in nu_grid:
                for t in t_grid:
                    try:
                        traj = family(lp, nu, config)
                        tm = tau_mod.tau_nu(t, BmtwParams(lp, nu), "minus",
                                            "direct", config).value
                        tp = tau_mod.tau_nu(t, BmtwParams(lp, nu), "plus",
                                            "direct", config).value
                        rows.append(f"{lp!r},{nu!r},{t!r},{tm!r},{tp!r},")
                    except Exception as exc:  # recorded per row
                        failed = True
                        rows.append(f"{lp!r},{nu!r},{t!r},,,{_csv_safe(exc)}")
    elif args.quantity == "A_est":
        header = "lambda_pi,nu,A_est,decay_ratio,A_closed,error"
        if len(t_grid) < 3:
            print("A_est needs a t grid with >= 3 points", file=sys.stderr)
            return USAGE_EXIT
        for lp in lambda_grid:
            for nu in nu_grid:
                try:
                    sigma = asym.sigma_of_lambda(lp)
                    samples = [
                        (t, tau_mod.tau_nu(t, BmtwParams(lp, nu), "minus",
                                           "direct", config).value)
                        for t in t_grid]
                    a_est, ratio = asym.extract_prefactor(samples, sigma)
                    closed = repr(asym.a_of_lambda(lp)) if nu == 0.0 else ""
                    rows.append(f"{lp!r},{nu!r},{a_est!r},{ratio!r},{closed},")
                except Exception as exc:
                    failed = True
                    rows.append(f"{lp!r},{nu!r},,,,{_csv_safe(exc)}")
    elif args.quantity == "residuals":
        header = "lambda_pi,nu,t,action_residual,g11_residual_1,g11_residual_2,error"
        for lp in lambda_grid:
            for nu in nu_grid:
                for t in t_grid:
                    try:
                        params = BmtwParams(lp, nu)
                        act = (repr(tau_mod.action_identity_residual(
                            t, params, config=config)) if nu == 0.0 else "")
                        g1 = tau_mod.nu_action_residual(t, params, 1,
                                                        config=config)
                        g2 = tau_mod.nu_action_residual(t, params, 2,
                                                        config=config)
                        rows.append(f"{lp!r},{nu!r},{t!r},{act},{g1!r},{g2!r},")
                    except Exception as exc:
                        failed = True
                        rows.append(f"{lp!r},{nu!r},{t!r},,,,{_csv_safe(exc)}")
    else:
        print(f"unknown quantity {args.quantity!r}", file=sys.stderr)
        return USAGE_EXIT

    text = header + "\n" + "".join(r + "\n" for r in rows)
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    if getattr(args, "fixtures", None):
        pairs = []
        for lp in lambda_grid:
            for nu in nu_grid:
                for t in t_grid:
                    if nu == 0.0 and lp == 1.0:
                        try:
                            tv = tau_mod.tau_nu(t, BmtwParams(lp, nu),
                                                "minus", "direct", config)
                            pairs.append(
                                (f"tau_minus_fredholm_t{t}_lambda_pi_1",
                                 tv.value))
                        except Exception:
                            pass
        _fixture_deltas(args, pairs)
    return FAIL_EXIT if failed else 0


def cmd_prefactor(args) -> int:
    config = _load_config(args)
    t_grid = _parse_grid(args.t_grid)
    params = BmtwParams(args.lambda_pi, args.nu)
    sigma = asym.sigma_of_lambda(args.lambda_pi)
    samples = [(t, tau_mod.tau_nu(t, params, args.branch, "direct",
                                  config).value) for t in t_grid]
    a_est, ratio = asym.extract_prefactor(samples, sigma)
    record = {"lambda_pi": args.lambda_pi, "nu": args.nu, "sigma": _fmt(sigma),
              "A_est": _fmt(a_est), "decay_ratio": _fmt(ratio)}
    if args.nu == 0.0:
        record["A_closed"] = _fmt(asym.a_of_lambda(args.lambda_pi))
    print(json.dumps(record, sort_keys=True))
    _fixture_deltas(args, [(f"amplitude_a_lambda_pi_{args.lambda_pi:g}",
                            a_est)])
    return 0


def cmd_constants(args) -> int:
    record = {
        "euler_gamma": _fmt(sf.EULER_GAMMA),
        "zeta_prime_minus_one": _fmt(sf.ZETA_PRIME_MINUS_ONE),
        "ln_two": _fmt(sf.LN_TWO),
        "ln_pi": _fmt(sf.LN_PI),
        "sqrt_pi": _fmt(sf.SQRT_PI),
        "wu_constant": _fmt(asym.wu_constant()),
    }
    if args.lambda_pi is not None:
        params = BmtwParams(args.lambda_pi, args.nu)
        cst = asym.asymptotic_constants(params)
        record.update({
            "lambda_pi": args.lambda_pi, "nu": args.nu,
            "sigma": _fmt(cst.sigma), "s": _fmt(cst.s),
            "B": _fmt(cst.B) if cst.B != float("inf") else "inf",
            "A": _fmt(cst.A),
            "C_nu": _fmt(asym.c_of_nu(args.nu)),
        })
    text = json.dumps(record, indent=1, sort_keys=True) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    _fixture_deltas(args, [("wu_constant", asym.wu_constant()),
                           ("euler_gamma", sf.EULER_GAMMA),
                           ("zeta_prime_minus_one", sf.ZETA_PRIME_MINUS_ONE)])
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="bmtw",
        description="Radial sinh-Gordon / Painleve-III tau-function toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--config", help="JSON file with SolverConfig defaults")
        p.add_argument("--fixtures", help="oracle fixtures JSON to cross-check")

    p = sub.add_parser("solve", help="solve one orbit and write CSV")
    p.add_argument("--lambda-pi", dest="lambda_pi", type=float, required=True)
    p.add_argument("--nu", type=float, default=0.0)
    p.add_argument("--t-min", dest="t_min", type=float, default=None)
    p.add_argument("--t-max", dest="t_max", type=float, default=None)
    p.add_argument("--t-seed", dest="t_seed", type=float, default=None)
    p.add_argument("--out", default="-")
    common(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("tau", help="evaluate tau by a chosen route")
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--lambda-pi", dest="lambda_pi", type=float, required=True)
    p.add_argument("--nu", type=float, default=0.0)
    p.add_argument("--branch", choices=("plus", "minus"), default="minus")
    p.add_argument("--route", default="hamiltonian",
                   choices=("hamiltonian", "action", "nu-product",
                            "fredholm", "asymptotic"))
    p.add_argument("--refine", action="store_true",
                   help="populate est_error by seed-doubling refinement")
    common(p)
    p.set_defaults(func=cmd_tau)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", default="all",
                   choices=sorted(verify_mod.SUITES) + ["all"])
    p.add_argument("--tol-scale", dest="tol_scale", type=float, default=1.0)
    p.add_argument("--out")
    p.add_argument("--timing", action="store_true",
                   help="include runtime_seconds (report no longer "
                        "byte-stable across runs)")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="evaluate quantities over grids (CSV)")
    p.add_argument("--lambda-grid", dest="lambda_grid", default="")
    p.add_argument("--nu-grid", dest="nu_grid", default="0")
    p.add_argument("--t-grid", dest="t_grid", default="")
    p.add_argument("--quantity", choices=("tau", "A_est", "residuals"),
                   required=True)
    p.add_argument("--out", default="-")
    common(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("prefactor", help="extract the short-distance amplitude")
    p.add_argument("--lambda-pi", dest="lambda_pi", type=float, required=True)
    p.add_argument("--nu", type=float, default=0.0)
    p.add_argument("--t-grid", dest="t_grid", default="1e-2,1e-3,1e-4")
    p.add_argument("--branch", choices=("plus", "minus"), default="minus")
    common(p)
    p.set_defaults(func=cmd_prefactor)

    p = sub.add_parser("constants", help="dump closed-form constants (JSON)")
    p.add_argument("--lambda-pi", dest="lambda_pi", type=float, default=None)
    p.add_argument("--nu", type=float, default=0.0)
    p.add_argument("--out")
    common(p)
    p.set_defaults(func=cmd_constants)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (sf.DomainError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_EXIT
    except SolverFailure as exc:
        print(f"solver failure: {exc}", file=sys.stderr)
        return FAIL_EXIT


if __name__ == "__main__":
    raise SystemExit(main())
