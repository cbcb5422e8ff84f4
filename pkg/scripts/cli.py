"""
Command-line front end for operator connections.

Usage:
    uv run ka eval --spec "mean harmonic" --A a.txt --B b.txt
    uv run ka norm --spec "scale 3 mean harmonic"
    uv run ka convert --spec "mean harmonic" --to function
    uv run ka verify all --trials 200 --dims 1:6 --out html-reports/verify.txt
    uv run ka catalog

Exit codes:
    0  success (verify: every property passed)
    1  verify: at least one property failed
    2  malformed spec, matrix file or flag
    3  dimension mismatch
    4  numeric failure
    5  no representing measure known for a function
"""

import argparse
import sys
from pathlib import Path

from numpy.linalg import LinAlgError
from pydantic import ValidationError

from src.config.defaults import SUITES, TrialConfig, get_tolerances, parse_dims, set_tolerances
from src.connections import (
    catalog,
    connection_norm,
    evaluate,
    parse_connection_spec,
    representing_function,
    representing_measure,
)
from src.errors import ConnectionsError
from src.matcore import format_matrix, load_matrix, write_matrix
from src.measures import format_measure_spec
from src.monotone import format_function_spec
from src.utilities.harness import VerificationHarness

DEFAULT_OUTPUT_DIR = "html-reports"


def _parse_tol(text: str) -> tuple[str, str]:
    name, sep, value = text.partition("=")
    if not sep or not name.strip() or not value.strip():
        raise argparse.ArgumentTypeError(f"expected NAME=VALUE, got {text!r}")
    return name.strip(), value.strip()


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--nodes", type=int, default=None, help="Quadrature node count")
    parser.add_argument(
        "--tol",
        type=_parse_tol,
        action="append",
        default=[],
        metavar="NAME=VALUE",
        help="Override a tolerance (repeatable)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ka", description="Operator connections: evaluate, convert and verify"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="Evaluate A sigma B")
    p.add_argument("--spec", required=True, help="Connection spec")
    p.add_argument("--A", dest="a_path", required=True, help="Matrix file for A")
    p.add_argument("--B", dest="b_path", required=True, help="Matrix file for B")
    p.add_argument("--out", default=None, help="Write the result here instead of stdout")
    _add_common(p)

    p = sub.add_parser("norm", help="Print the connection norm")
    p.add_argument("--spec", required=True, help="Connection spec")
    _add_common(p)

    p = sub.add_parser("convert", help="Print the representing function or measure")
    p.add_argument("--spec", required=True, help="Connection spec")
    p.add_argument("--to", choices=["function", "measure"], default="function")
    _add_common(p)

    p = sub.add_parser("verify", help="Run a verification suite")
    p.add_argument("suite", nargs="?", default="all", choices=["all", *SUITES])
    p.add_argument("--out", default=None, help="Report path (JSON summary written next to it)")
    p.add_argument("--format", choices=["text", "csv"], default="text")
    p.add_argument("--seed", type=int, default=None, help="Base seed (default: KA_SEED)")
    p.add_argument("--trials", type=int, default=None, help="Trials per check (KA_TRIALS)")
    p.add_argument("--dims", default="1:6", help="Dimension range lo:hi")
    p.add_argument("--workers", type=int, default=None, help="Worker threads (KA_WORKERS)")
    p.add_argument("--run-id", type=str, default=None, help="Override the derived run ID")
    p.add_argument("--quiet", action="store_true", help="Only print the final result line")
    _add_common(p)

    sub.add_parser("catalog", help="List the built-in closed forms with their f and mu")
    return parser


def _install_tolerances(args: argparse.Namespace) -> None:
    overrides: dict[str, object] = dict(args.tol)
    if args.nodes is not None:
        overrides["quad_nodes"] = args.nodes
    if overrides:
        set_tolerances(get_tolerances().with_overrides(overrides))


def cmd_eval(args: argparse.Namespace) -> int:
    _install_tolerances(args)
    sigma = parse_connection_spec(args.spec)
    A, B = load_matrix(args.a_path), load_matrix(args.b_path)
    value = evaluate(sigma, A, B)
    if args.out:
        write_matrix(value, args.out, digits=12)
    else:
        sys.stdout.write(format_matrix(value))
    return 0


def cmd_norm(args: argparse.Namespace) -> int:
    _install_tolerances(args)
    sigma = parse_connection_spec(args.spec)
    print(f"{connection_norm(sigma).value:.12f}")
    return 0


def cmd_convert(args: argparse.Namespace) -> int:
    _install_tolerances(args)
    sigma = parse_connection_spec(args.spec)
    if args.to == "function":
        print(format_function_spec(representing_function(sigma)))
    else:
        sys.stdout.write(format_measure_spec(representing_measure(sigma)))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    dim_lo, dim_hi = parse_dims(args.dims)
    # validate names and values before any trial runs
    get_tolerances().with_overrides(dict(args.tol))
    env = TrialConfig.from_env()
    cfg = TrialConfig(
        dim_lo=dim_lo,
        dim_hi=dim_hi,
        trials=env.trials if args.trials is None else args.trials,
        seed=env.seed if args.seed is None else args.seed,
        workers=env.workers if args.workers is None else args.workers,
        nodes=args.nodes,
        tolerance_overrides=dict(args.tol),
    )
    harness = VerificationHarness(args.suite, cfg, run_id=args.run_id, verbose=not args.quiet)
    summary = harness.run()

    suffix = "csv" if args.format == "csv" else "txt"
    out = Path(args.out or f"{DEFAULT_OUTPUT_DIR}/verify-{args.suite}.{suffix}")
    harness.write(summary, out, args.format)
    harness.write_run_metadata(out.parent)
    if args.quiet:
        print(f"{'PASS' if summary.passed else 'FAIL'} {summary.suite} -> {out}")
    return 0 if summary.passed else 1


def cmd_catalog(args: argparse.Namespace) -> int:
    for entry in catalog():
        print(f"{entry.name:<14} {entry.spec}")
        print(f"  function: {entry.function_spec}")
        print(f"  measure:  {entry.measure_spec}")
    return 0


COMMANDS = {
    "eval": cmd_eval,
    "norm": cmd_norm,
    "convert": cmd_convert,
    "verify": cmd_verify,
    "catalog": cmd_catalog,
}


def main(argv: list[str] | None = None) -> int:
    """Main entry point; returns the process exit code."""
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except ConnectionsError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    except ValidationError as exc:
        first = exc.errors()[0]
        field = ".".join(str(p) for p in first["loc"]) or "config"
        print(f"error: ValidationError: {field}: {first['msg']}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except LinAlgError as exc:
        print(f"error: LinAlgError: {exc}", file=sys.stderr)
        return 4
    finally:
        set_tolerances(None)


def _inject_command(command: str) -> None:
    """Insert the subcommand for console-script wrappers."""
    argv = sys.argv[1:]
    if not argv or argv[0] != command:
        argv = [command] + argv
    sys.argv = [sys.argv[0]] + argv


def cli_eval() -> int:
    """Console entrypoint: ka eval."""
    _inject_command("eval")
    return main()


def cli_verify() -> int:
    """Console entrypoint: ka verify."""
    _inject_command("verify")
    return main()


if __name__ == "__main__":
    sys.exit(main())
