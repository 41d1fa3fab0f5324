"""Command-line front end.

Reports are JSON documents on stdout; diagnostics go to stderr. Exit status
is 0 on success, 1 for invalid input and 2 when an internal consistency
check fails.
"""

import argparse
import datetime
import json
import os
import sys

from . import __version__
from .checks import SUITES, run_check
from .classify import TOL_ORTHO, TOL_RANK, classify_two_qutrit
from .exterior import CLAMP_TOL, ConsistencyError, WedgeError
from .measure import Counting, MeasureMode, eg_bipartite, eg_multipartite
from .optimize import OptimizerConfig, maximize_eg, parse_support
from .states import NORM_TOL, Bipartition, StateError
from .statefile import load_state

EXIT_OK, EXIT_INVALID, EXIT_INTERNAL = 0, 1, 2


def _seed(args):
    if args.seed is not None:
        return args.seed
    env = os.environ.get("WEDGE_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise StateError(f"WEDGE_SEED must be an integer, got {env!r}") from None


def _csv_ints(text):
    try:
        return tuple(int(s) for s in text.split(",") if s.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def cmd_measure(args):
    state = load_state(args.state, renormalize=args.renormalize)
    tolerances = {"norm_tol": NORM_TOL, "clamp_tol": CLAMP_TOL}
    if args.total:
        report = eg_multipartite(state, Counting(args.total)).to_dict()
    else:
        bp = Bipartition.of(args.bipartition or (0,), state.n_parties)
        mode = MeasureMode(args.mode) if args.mode else None
        report = eg_bipartite(state, bp, mode).to_dict()
    return "measure", report, tolerances, EXIT_OK


def cmd_classify(args):
    state = load_state(args.state, renormalize=args.renormalize)
    rep = classify_two_qutrit(state, tol_rank=args.tol_rank, tol_ortho=args.tol_ortho)
    return "classify", rep.to_dict(), dict(rep.tolerances, norm_tol=NORM_TOL), EXIT_OK


def cmd_maximize(args):
    support = parse_support(args.support)
    config = OptimizerConfig(
        restarts=args.restarts,
        max_iters=args.max_iters,
        seed=_seed(args),
        eps_boundary=args.eps_boundary,
    )
    res = maximize_eg(support, config)
    report = res.to_dict()
    report.pop("config")
    tolerances = {
        "eps_boundary": config.eps_boundary,
        "grad_tol": config.grad_tol,
        "tie_tol": config.tie_tol,
    }
    return "maximize", dict(report, config=config.to_dict()), tolerances, EXIT_OK


def cmd_check(args):
    names = [s.strip() for s in args.invariants.split(",") if s.strip()]
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise StateError(f"unknown invariant(s) {unknown}; choose from {sorted(SUITES)}")
    seed = _seed(args)
    results = [run_check(n, trials=args.trials, seed=seed) for n in names]
    for r in results:
        status = "pass" if r.passed else "FAIL"
        print(f"{status} {r.name}: worst {r.worst:.3e} (tol {r.tolerance:.0e})", file=sys.stderr)
    report = {"seed": seed, "results": [r.to_dict() for r in results]}
    code = EXIT_OK if all(r.passed for r in results) else EXIT_INTERNAL
    return "check", report, {r.name: r.tolerance for r in results}, code


def build_parser():
    parser = argparse.ArgumentParser(
        prog="wedgeent", description="Wedge-product entanglement measures for pure qudit states."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--reproducible", action="store_true", help="omit the timestamp from reports"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("measure", help="entanglement value of a state file")
    p.add_argument("--state", required=True)
    p.add_argument("--bipartition", type=_csv_ints, help="measured parties, e.g. 0,2")
    p.add_argument("--mode", choices=[m.value for m in MeasureMode])
    p.add_argument("--total", choices=[c.value for c in Counting], help="sum over bipartitions")
    p.add_argument("--renormalize", action="store_true")
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser("classify", help="geometric class of a two-qutrit state")
    p.add_argument("--state", required=True)
    p.add_argument("--tol-rank", type=float, default=TOL_RANK)
    p.add_argument("--tol-ortho", type=float, default=TOL_ORTHO)
    p.add_argument("--renormalize", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("maximize", help="maximize over a support pattern")
    p.add_argument("--support", required=True, help='e.g. "00,11,22"')
    p.add_argument("--restarts", type=int, default=32)
    p.add_argument("--max-iters", type=int, default=2000)
    p.add_argument("--eps-boundary", type=float, default=1e-4)
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_maximize)

    p = sub.add_parser("check", help="randomized invariant suites")
    p.add_argument("--invariants", default=",".join(SUITES))
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_check)
    return parser


def make_document(command, report, tolerances, reproducible):
    doc = {"tool": "wedgeent", "version": __version__, "command": command}
    if not reproducible:
        doc["timestamp"] = datetime.datetime.now(datetime.timezone.utc).isoformat()
    doc["tolerances"] = tolerances
    doc["report"] = report
    return doc


def run(argv=None, out=None):
    """Parse ``argv``, run the subcommand, print the report, return the exit code."""
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INVALID
    try:
        command, report, tolerances, code = args.func(args)
    except ConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (StateError, WedgeError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    json.dump(make_document(command, report, tolerances, args.reproducible), out, indent=2)
    out.write("\n")
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
