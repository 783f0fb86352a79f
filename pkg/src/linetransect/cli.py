"""Command-line interface: ``linetransect {estimate,simulate,bootstrap,curve,constants}``."""

import argparse
import math
import os
import sys

import numpy as np

from . import estimators as est
from . import io as lio
from . import model as mdl
from .bootstrap import STAKES_ESTIMATORS, BootstrapError, EstimatorSpec, bootstrap
from .families import TargetFamily, study_families
from .simulation import STUDY_M_LIST, STUDY_SAMPLE_SIZES, ScenarioSpec, run_scenario

SEED_ENV = "LINETRANSECT_SEED"

TABLE1_M = tuple(range(1, 9))
TABLE2_M = (1, 2, 3, 4, 5, 6, 7, 8, 20, 200, 500, 1000, 5000, 20000, 50000, 100000)


class CLIError(Exception):
    pass


def _positive_int(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _positive_float(text):
    v = float(text)
    if not (v > 0 and math.isfinite(v)):
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text}")
    return v


def _seed(text):
    v = int(text)
    if not 0 <= v < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return v


def _default_seed():
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return 0
    try:
        return _seed(raw)
    except (ValueError, argparse.ArgumentTypeError):
        raise CLIError(f"{SEED_ENV}={raw!r} is not a valid seed")


def _add_output(p):
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--output", "-o", help="write to this file instead of standard output")


def _add_data(p):
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--data", help="distance file: one nonnegative number per line, '#' comments")
    g.add_argument("--stakes", action="store_true", help="use the bundled stakes dataset")


def build_parser():
    parser = argparse.ArgumentParser(prog="linetransect", description="Line transect f(0) and density estimation.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("estimate", help="estimate f(0) (and density) from a distance file")
    _add_data(p)
    p.add_argument("--method", choices=[m.value for m in est.Method], default="mom")
    p.add_argument("--m", type=_positive_int, help="shape parameter of the proposed model (mom, mle)")
    p.add_argument("--line-length", type=_positive_float, help="total transect length, same unit as distances")
    p.add_argument("--tolerance", type=_positive_float, default=1e-10, help="score tolerance for mle")
    _add_output(p)

    p = sub.add_parser("simulate", help="Monte Carlo RB / RRMSE / EFF")
    p.add_argument("--grid", action="store_true", help="all 12 truths x n in {50, 100, 200}")
    p.add_argument("--family", type=str.upper, choices=("EP", "HR", "BE", "GP"))
    p.add_argument("--delta", type=float)
    p.add_argument("--n", type=int, nargs="+", help="sample size(s); default 50 100 200 with --grid")
    p.add_argument("--reps", type=_positive_int, default=1000)
    p.add_argument("--seed", type=_seed)
    p.add_argument("--m", type=_positive_int, nargs="+", default=list(STUDY_M_LIST))
    p.add_argument("--method", choices=("mom", "mle"), default="mom")
    p.add_argument("--eff", choices=("rmse", "mse"), default="rmse", help="EFF as RRMSE ratio (tables) or MSE ratio")
    p.add_argument("--workers", type=_positive_int, default=1)
    _add_output(p)

    p = sub.add_parser("bootstrap", help="bootstrap bias / SD / MSE of f(0) estimates")
    _add_data(p)
    p.add_argument("--reps", type=int, default=1000)
    p.add_argument("--seed", type=_seed)
    p.add_argument("--line-length", type=_positive_float)
    p.add_argument(
        "--estimators",
        nargs="+",
        help="ids such as EX HN MOM_m8 MLE_m8; default EX HN MOM_m1 m2 m3 m8 m20 m100000",
    )
    _add_output(p)

    p = sub.add_parser("curve", help="tabulate a detection function")
    p.add_argument("--model", choices=("proposed", "exponential", "halfnormal"), default="proposed")
    p.add_argument("--m", type=_positive_int, default=1)
    p.add_argument("--beta", type=_positive_float, default=1.0)
    p.add_argument("--theta", type=_positive_float, default=1.0, help="exponential scale")
    p.add_argument("--sigma2", type=_positive_float, default=1.0, help="half-normal variance")
    p.add_argument("--x-max", type=float, required=True)
    p.add_argument("--points", type=int, default=101)
    _add_output(p)

    p = sub.add_parser("constants", help="exact f(0; m, 1) fractions (--table 1) or L_m constants (--table 2)")
    p.add_argument("--table", type=int, choices=(1, 2), required=True)
    p.add_argument("--m", type=_positive_int, nargs="+")
    _add_output(p)
    return parser


def _load(args):
    if args.stakes:
        return lio.load_stakes()
    return lio.read_distances(args.data).sample


def cmd_estimate(args):
    sample = _load(args)
    method = est.Method(args.method)
    if method in (est.Method.MOM, est.Method.MLE) and args.m is None:
        raise CLIError(f"--method {method.value} requires --m")
    kwargs = {"tolerance": args.tolerance} if method is est.Method.MLE else {}
    res = est.estimate(sample, method, m=args.m if method in (est.Method.MOM, est.Method.MLE) else None, **kwargs)
    row = res.as_dict()
    row["line_length"] = args.line_length
    row["density_hat"] = res.density(args.line_length) if args.line_length else None
    return "estimate", [row], None


def cmd_simulate(args):
    seed = args.seed if args.seed is not None else _default_seed()
    if args.grid:
        if args.family or args.delta is not None:
            raise CLIError("--grid runs every family; drop --family/--delta")
        fams = study_families()
        sizes = args.n or list(STUDY_SAMPLE_SIZES)
    else:
        if args.family is None or args.delta is None or not args.n:
            raise CLIError("simulate needs --family, --delta and --n (or --grid)")
        fams = [TargetFamily(args.family, args.delta)]
        sizes = args.n
    for n in sizes:
        if n < 2:
            raise CLIError(f"--n must be >= 2, got {n}")
    rows = []
    for fam in fams:
        for n in sizes:
            spec = ScenarioSpec(fam, n, reps=args.reps, m_list=tuple(args.m), seed=seed, method=args.method)
            for r in run_scenario(spec, workers=args.workers, eff_definition=args.eff):
                d = r.as_dict()
                d.update(family=fam.family, delta=fam.delta, n=n, truth_f0=fam.f0)
                rows.append(d)
    return "simulate", rows, {"eff_definition": args.eff, "method": args.method}


def cmd_bootstrap(args):
    if args.reps < 2:
        raise CLIError("--reps must be >= 2 to estimate a standard deviation")
    seed = args.seed if args.seed is not None else _default_seed()
    sample = _load(args)
    line_length = args.line_length
    if line_length is None and args.stakes:
        line_length = lio.STAKES_LINE_LENGTH
    specs = [EstimatorSpec.parse(e) for e in args.estimators] if args.estimators else list(STAKES_ESTIMATORS)
    rows = [bootstrap(sample, e, reps=args.reps, seed=seed, line_length=line_length).as_dict() for e in specs]
    return "bootstrap", rows, None


def cmd_curve(args):
    if not (args.x_max > 0 and math.isfinite(args.x_max)):
        raise CLIError("--x-max must be positive")
    if args.points < 2:
        raise CLIError("--points must be at least 2")
    x = np.linspace(0.0, args.x_max, args.points)
    if args.model == "proposed":
        g = mdl.detection_g(mdl.ProposedModel(args.m, args.beta), x)
    elif args.model == "exponential":
        g = np.exp(-x / args.theta)
    else:
        g = np.exp(-x * x / (2.0 * args.sigma2))
    rows = [{"x": float(a), "g": float(b)} for a, b in zip(x, g)]
    return "curve", rows, None


def cmd_constants(args):
    if args.table == 1:
        rows = []
        for m in args.m or TABLE1_M:
            fr = mdl.f0_fraction(m)
            rows.append({"m": m, "numerator": fr.numerator, "denominator": fr.denominator, "f0": mdl.f0(mdl.ProposedModel(m, 1.0))})
        return "constants1", rows, None
    rows = [{"m": m, "l_m": mdl.l_constant(m)} for m in (args.m or TABLE2_M)]
    return "constants2", rows, None


COMMANDS = {
    "estimate": cmd_estimate,
    "simulate": cmd_simulate,
    "bootstrap": cmd_bootstrap,
    "curve": cmd_curve,
    "constants": cmd_constants,
}


def render(kind, rows, fmt, meta=None):
    if fmt == "json":
        return lio.to_json(kind, rows, meta)
    return lio.to_csv(rows, lio.COLUMNS[kind])


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        kind, rows, meta = COMMANDS[args.command](args)
        text = render(kind, rows, args.format, meta)
        if args.output:
            with open(args.output, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    except (CLIError, ValueError, OSError, BootstrapError, est.ConvergenceError) as exc:
        print(f"linetransect {args.command}: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
