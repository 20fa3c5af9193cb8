"""Command-line front end.

Exit codes: 0 ok, 1 verification failure, 2 input error, 3 solver
non-convergence, 4 no sign change for the crossing search.
"""

import argparse
import sys

from .errors import CoherenceError, NoConvergenceError, NoSignChangeError
from .measures import find_crossing
from .report import measure_report, resolve_measures
from .solver import SolverConfig
from .stateio import StateFileError, format_sweep_csv, mcms_sweep, read_state, write_sweep_csv
from .verify import SUITES, run_suite

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT = 2
EXIT_UNCONVERGED = 3
EXIT_NO_BRACKET = 4


def _add_solver_flags(p):
    p.add_argument("--tol", type=float, default=1e-9, help="fixed-point residual tolerance")
    p.add_argument("--max-iter", type=int, default=20000, help="iteration budget per solve")
    p.add_argument("--seed", type=int, default=0, help="seed for optimizer restarts and corpora")


def _config(args) -> SolverConfig:
    return SolverConfig(tol=args.tol, max_iter=args.max_iter, seed=args.seed)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="modtrace", description="Coherence and mixedness measures of density matrices.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="evaluate coherence/mixedness measures of a state file")
    p.add_argument("--state", required=True, help="state file (first line d, then d rows of re,im entries)")
    p.add_argument("--measure", action="append", default=None,
                   help="comma-separated measures: l1, rel-entropy, mod-trace, geometric, "
                        "linear-mixedness, trace-mixedness, hs-bound, or all (default: all)")
    _add_solver_flags(p)

    p = sub.add_parser("sweep", help="CSV of the four coherence measures along the MCMS family")
    p.add_argument("--dim", type=int, default=3)
    p.add_argument("--p-min", type=float, default=0.05)
    p.add_argument("--p-max", type=float, default=1.0)
    p.add_argument("--steps", type=int, default=20)
    p.add_argument("--out", default=None, help="output CSV path (default: stdout)")
    _add_solver_flags(p)

    p = sub.add_parser("crossing", help="p where C_r(mcms(d, p)) crosses p")
    p.add_argument("--dim", type=int, default=3)

    p = sub.add_parser("verify", help="run a seeded verification suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--count", type=int, default=None, help="corpus size (suite default if omitted)")
    _add_solver_flags(p)
    return parser


def _fail(msg, code):
    print(f"error: {msg}", file=sys.stderr)
    return code


def cmd_compute(args) -> int:
    try:
        rho = read_state(args.state)
        names = resolve_measures(args.measure or ["all"])
        cfg = _config(args)
        rep = measure_report(rho, names, cfg)
    except (StateFileError, CoherenceError, OSError) as exc:
        return _fail(exc, EXIT_INPUT)
    except NoConvergenceError as exc:
        return _fail(exc, EXIT_UNCONVERGED)
    unconverged = False
    for name in names:
        fields = [name, f"{getattr(rep, name):.12g}", rep.methods[name], str(rep.iterations[name])]
        if name in rep.certificates:
            fields.append(f"certificate={rep.certificates[name]:.3e}")
        if not rep.converged[name]:
            fields.append("unconverged")
            unconverged = True
        print(" ".join(fields))
    for msg in rep.violations():
        print(f"warning: {msg}", file=sys.stderr)
    return EXIT_UNCONVERGED if unconverged else EXIT_OK


def cmd_sweep(args) -> int:
    try:
        rows = mcms_sweep(args.dim, args.p_min, args.p_max, args.steps, _config(args))
    except CoherenceError as exc:
        return _fail(exc, EXIT_INPUT)
    for row in rows:
        if not row.ordered():
            print(f"warning: ordering C_g <= C'_tr <= C_l1 violated at p={row.p:.9f}", file=sys.stderr)
    if args.out:
        write_sweep_csv(rows, args.out)
    else:
        sys.stdout.write(format_sweep_csv(rows))
    return EXIT_OK


def cmd_crossing(args) -> int:
    try:
        root = find_crossing(args.dim)
    except NoSignChangeError as exc:
        print(f"no sign change: g({exc.lo}) = {exc.g_lo:.9f}, g({exc.hi}) = {exc.g_hi:.9f}")
        return EXIT_NO_BRACKET
    except CoherenceError as exc:
        return _fail(exc, EXIT_INPUT)
    print(f"{root:.6f}")
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        rep = run_suite(args.suite, seed=args.seed, count=args.count, cfg=_config(args))
    except CoherenceError as exc:
        return _fail(exc, EXIT_INPUT)
    for line in rep.lines():
        print(line)
    print(f"suite {rep.name}: {'PASS' if rep.passed else 'FAIL'}")
    return EXIT_OK if rep.passed else EXIT_VERIFY_FAILED


COMMANDS = {"compute": cmd_compute, "sweep": cmd_sweep, "crossing": cmd_crossing, "verify": cmd_verify}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    return COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
