"""
Command-line front end.

    eigencount count      --k K (--lambda L | --all | --spectrum) [--method brute,fast]
    eigencount density    --kind {V,W,UZ,UR} [--points N] [--limit L]
    eigencount simulate   --n N [--bins B] [--seed S] [--workers W] [--kind {W,UR}]
    eigencount verify     [--suite {small-k,analytic,montecarlo,all}]
    eigencount constants

Tables go to --out (default stdout) as CSV with a header row; progress and
summaries go to the diagnostic stream. Exit codes: 0 success, 1 usage or
validation error, 2 verification failure.
"""

import argparse
import csv
import logging
import sys
from contextlib import contextmanager
from typing import Iterator, List, Optional, Sequence, TextIO

from eigencount.closedform import (
    ClosedFormError,
    DensityKind,
    QuadratureError,
    argmax_w,
    constants_bundle,
    default_grid,
    tabulate,
)
from eigencount.closedform.densities import DEFAULT_GRID_LIMIT, DEFAULT_GRID_POINTS
from eigencount.core import MatrixError
from eigencount.exactcount import (
    CountError,
    count_integer_spectrum,
    count_repeated_integer,
    count_report,
    integer_spectrum_main_term,
    mobius_main_term,
)
from eigencount.montecarlo import (
    DEFAULT_SEED,
    SeedSpec,
    SimulationError,
    compare_to_density,
    run_experiment,
)
from eigencount.verification import SUITE_NAMES, ThresholdError, VerificationRunner, load_thresholds

logger = logging.getLogger("eigencount")

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_VERIFICATION = 2

METHOD_CHOICES = ("brute", "fast")


class UsageError(Exception):
    """Raised by the parser instead of exiting."""


class _ArgumentParser(argparse.ArgumentParser):
    """argparse with usage errors mapped to exit code 1."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _int_at_least(minimum: int):
    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected an integer, got '{text}'")
        if value < minimum:
            raise argparse.ArgumentTypeError(f"must be >= {minimum}, got {value}")
        return value

    return parse


def _seed(text: str) -> int:
    value = _int_at_least(0)(text)
    if value >= 2**64:
        raise argparse.ArgumentTypeError("seed must fit in 64 bits")
    return value


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got '{text}'")
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {value}")
    return value


def _methods(text: str) -> List[str]:
    methods = [m.strip() for m in text.split(",") if m.strip()]
    unknown = [m for m in methods if m not in METHOD_CHOICES]
    if not methods or unknown:
        raise argparse.ArgumentTypeError(
            f"methods must be a comma list from {list(METHOD_CHOICES)}, got '{text}'"
        )
    return methods


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="eigencount",
        description="Eigenvalue statistics of 2x2 integer and random matrices",
    )
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("--verbose", "-v", action="store_true", help="Debug logging")
    verbosity.add_argument("--quiet", "-q", action="store_true", help="Warnings only")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    count = sub.add_parser("count", help="Count matrices in M2(k) with an integer eigenvalue")
    count.add_argument("--k", type=_int_at_least(1), required=True, help="Entry bound k >= 1")
    target = count.add_mutually_exclusive_group(required=True)
    target.add_argument("--lambda", dest="lam", type=int, help="Prescribed eigenvalue")
    target.add_argument("--all", action="store_true", help="Every lambda in [-2k, 2k]")
    target.add_argument("--spectrum", action="store_true", help="|M2^Z(k)| and its main term")
    count.add_argument(
        "--method", type=_methods, default=["fast"], help="Comma list of brute,fast (default fast)"
    )
    count.add_argument(
        "--mobius", action="store_true", help="Add the Möbius C/D main term column"
    )
    count.add_argument("--out", default=None, help="Output CSV path (default stdout)")

    density = sub.add_parser("density", help="Tabulate V, W, UZ or UR")
    density.add_argument("--kind", required=True, choices=[k.value for k in DensityKind])
    density.add_argument("--points", type=_int_at_least(2), default=DEFAULT_GRID_POINTS)
    density.add_argument("--limit", type=_positive_float, default=DEFAULT_GRID_LIMIT)
    density.add_argument("--out", default=None, help="Output CSV path (default stdout)")

    simulate = sub.add_parser("simulate", help="Sample M2([-1, 1]) and histogram eigenvalues")
    simulate.add_argument("--n", type=_int_at_least(1), required=True, help="Number of matrices")
    simulate.add_argument("--bins", type=_int_at_least(2), default=40)
    simulate.add_argument("--seed", type=_seed, default=DEFAULT_SEED, help="64-bit master seed")
    simulate.add_argument("--workers", type=_int_at_least(1), default=1)
    simulate.add_argument("--kind", choices=["W", "UR"], default="W", help="Reference density")
    simulate.add_argument("--out", default=None, help="Output CSV path (default stdout)")

    verify = sub.add_parser("verify", help="Run acceptance checks")
    verify.add_argument("--suite", choices=SUITE_NAMES, default="all")
    verify.add_argument("--thresholds", default=None, help="Threshold registry (YAML)")

    sub.add_parser("constants", help="Print the named constants")
    return parser


def configure_logging(verbose: bool = False, quiet: bool = False) -> None:
    level = logging.DEBUG if verbose else logging.WARNING if quiet else logging.INFO
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )


@contextmanager
def _output(path: Optional[str]) -> Iterator[TextIO]:
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as f:
            yield f


def _format(value: object) -> object:
    # repr keeps every significant digit; None becomes an empty field
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return value


def _write_csv(path: Optional[str], header: Sequence[str], rows) -> None:
    with _output(path) as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_format(v) for v in row])


def _run_count(args: argparse.Namespace) -> int:
    k = args.k
    if args.spectrum:
        total = count_integer_spectrum(k)
        repeated = count_repeated_integer(k)
        main_term = integer_spectrum_main_term(k)
        ratio = total / main_term if main_term else None
        logger.info("k=%d: |M2^Z(k)|=%d repeated=%d ratio=%s", k, total, repeated, ratio)
        _write_csv(
            args.out,
            ["k", "integer_spectrum", "repeated", "main_term", "ratio"],
            [[k, total, repeated, main_term, ratio]],
        )
        return EXIT_OK

    lams = range(-2 * k, 2 * k + 1) if args.all else [args.lam]
    header = ["k", "lambda", "brute", "fast", "main_term", "ratio"]
    if args.mobius:
        header.append("mobius_main_term")

    rows = []
    for lam in lams:
        report = count_report(k, lam, methods=args.method)
        logger.info(
            "k=%d lambda=%d: brute=%s fast=%d ratio=%s",
            k,
            lam,
            report.brute if report.brute is not None else "-",
            report.fast,
            report.ratio,
        )
        row = [report.k, report.lam, report.brute, report.fast, report.main_term, report.ratio]
        if args.mobius:
            row.append(mobius_main_term(k, lam))
        rows.append(row)
    _write_csv(args.out, header, rows)
    return EXIT_OK


def _run_density(args: argparse.Namespace) -> int:
    table = tabulate(args.kind, default_grid(args.limit, args.points))
    logger.info(
        "%s on %d points: trapezoid area %r", table.kind.value, len(table.grid), table.trapezoid()
    )
    _write_csv(args.out, ["delta", "value"], table.rows())
    return EXIT_OK


def _run_simulate(args: argparse.Namespace) -> int:
    seed = SeedSpec(master_seed=args.seed)
    summary = run_experiment(args.n, args.bins, seed, workers=args.workers)
    comparison = compare_to_density(summary, args.kind)
    logger.info(
        "samples=%d real_pair_frequency=%r complex_frequency=%r",
        summary.samples,
        summary.real_pair_frequency,
        summary.complex_frequency,
    )
    logger.info(
        "sup_deviation=%r chi_square=%r max_abs_eigenvalue=%r sign_violations=%d",
        comparison.sup_deviation,
        comparison.chi_square,
        summary.max_abs_eigenvalue,
        summary.sign_violations,
    )
    edges = summary.bin_edges
    rows = zip(
        edges[:-1].tolist(),
        edges[1:].tolist(),
        comparison.empirical_mass.tolist(),
        comparison.expected_mass.tolist(),
    )
    mass_column = "w_mass" if args.kind == "W" else "ur_mass"
    _write_csv(args.out, ["bin_left", "bin_right", "empirical_mass", mass_column], rows)
    return EXIT_OK


def _run_verify(args: argparse.Namespace) -> int:
    thresholds = load_thresholds(args.thresholds)
    report = VerificationRunner(thresholds).run(args.suite)
    return EXIT_OK if report.passed else EXIT_VERIFICATION


def _run_constants(args: argparse.Namespace) -> int:
    values = constants_bundle().as_dict()
    values["argmax_W"] = argmax_w()
    _write_csv(None, ["name", "value"], [[name, float(v)] for name, v in values.items()])
    return EXIT_OK


COMMANDS = {
    "count": _run_count,
    "density": _run_density,
    "simulate": _run_simulate,
    "verify": _run_verify,
    "constants": _run_constants,
}


def dispatch(argv: Optional[Sequence[str]] = None) -> int:
    """Parse argv, run one subcommand and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        print(e, file=sys.stderr)
        return EXIT_VALIDATION
    except SystemExit as e:
        # --help / --version
        return EXIT_OK if not e.code else EXIT_VALIDATION

    configure_logging(args.verbose, args.quiet)
    try:
        return COMMANDS[args.command](args)
    except (
        CountError,
        ClosedFormError,
        QuadratureError,
        SimulationError,
        ThresholdError,
        MatrixError,
        ValueError,
    ) as e:
        print(f"ERROR: {e}", file=sys.stderr)
        return EXIT_VALIDATION


def main() -> None:
    """CLI entrypoint."""
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
