import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence

from splitg2.algebra.exactlin import Matrix, from_flat
from splitg2.algebra.fields import FieldSpec
from splitg2.algebra.zorn import BASIS_NAMES, UNIT_NAME, ZERO_NAME, ZornMatrix, basis_by_name, zmul
from splitg2.cache import cached_derivations, cached_table
from splitg2.cli import render
from splitg2.environment import FORMATS, CliConfig
from splitg2.errors import DerivationError, NotInSpan, ParseError, Splitg2Error
from splitg2.helper import load_json_file, parse_json
from splitg2.lie.cascade import solve_cascade
from splitg2.lie.characteristic import DEFAULT_PRIMES, characteristic_sweep
from splitg2.lie.dergen import DIM, DerivationSpace, recon
from splitg2.lie.liestruct import killing_form, verify_killing_invariance
from splitg2.lie.verification import run_verification
from splitg2.version import __version__

logger = logging.getLogger("splitg2")

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_PARSE_ERROR = 2
EXIT_NOT_IN_SPAN = 3

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def configure_logging(verbosity: int) -> None:
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logger.setLevel(level)
    # main() may run several times in one process (tests)
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    logger.addHandler(handler)


def parse_operand(text: str, field: FieldSpec) -> ZornMatrix:
    """
    An octonion given as a basis name (A, B, C1..D3, Y, ZERO), inline
    JSON, or the path of a JSON file.
    """
    if text in BASIS_NAMES or text in (UNIT_NAME, ZERO_NAME):
        return basis_by_name(text, field)
    if text.lstrip().startswith("{"):
        return ZornMatrix.from_dict(parse_json(text, source="argument"), field)
    if Path(text).is_file():
        return ZornMatrix.from_dict(load_json_file(text), field)
    raise ParseError(
        f"{text!r} is not a basis name ({', '.join(BASIS_NAMES + (UNIT_NAME, ZERO_NAME))}), "
        "a JSON object or an existing file"
    )


def cmd_mul(args: argparse.Namespace, config: CliConfig) -> int:
    lhs = parse_operand(args.lhs, config.field)
    rhs = parse_operand(args.rhs, config.field)
    sys.stdout.write(render.render_zorn(zmul(lhs, rhs), config.format))
    return EXIT_OK


def cmd_derive(args: argparse.Namespace, config: CliConfig) -> int:
    if args.method == "cascade":
        kernel = solve_cascade(config.field)
        basis = [from_flat(config.field, v, DIM, DIM) for v in kernel.vectors.data]
        space = DerivationSpace(field=config.field, dim=kernel.dim, basis=basis, pinned=False)
    else:
        space = cached_derivations(config.field, max_workers=config.max_workers)
    sys.stdout.write(render.render_space(space, config.format))
    return EXIT_OK


def cmd_table(args: argparse.Namespace, config: CliConfig) -> int:
    table = cached_table(config.field, max_workers=config.max_workers)
    sys.stdout.write(render.render_table(table, config.format))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, config: CliConfig) -> int:
    report = run_verification(
        config.field, golden_path=args.golden, max_workers=config.max_workers
    )
    sys.stdout.write(render.render_verification(report, config.format))
    return EXIT_OK if report.ok else EXIT_VERIFICATION_FAILED


def cmd_recon(args: argparse.Namespace, config: CliConfig) -> int:
    matrix = Matrix.from_dict(load_json_file(args.file), config.field)
    if (matrix.rows, matrix.cols) != (DIM, DIM):
        raise ParseError(f"Expected an 8x8 matrix, got {matrix.rows}x{matrix.cols}", position="$")
    sys.stdout.write(render.render_params(recon(matrix), config.format))
    return EXIT_OK


def cmd_killing(args: argparse.Namespace, config: CliConfig) -> int:
    table = cached_table(config.field, max_workers=config.max_workers)
    k = killing_form(table)
    sys.stdout.write(render.render_killing(k, verify_killing_invariance(table, k), config.format))
    return EXIT_OK


def _parse_primes(text: str) -> List[int]:
    try:
        return [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma separated list of primes, got {text!r}")


def cmd_sweep(args: argparse.Namespace, config: CliConfig) -> int:
    reports = characteristic_sweep(args.primes, max_workers=config.max_workers)
    sys.stdout.write(render.render_sweep(reports, config.format))
    return EXIT_OK if all(r.agree for r in reports) else EXIT_VERIFICATION_FAILED


COMMANDS: Dict[str, Callable[[argparse.Namespace, CliConfig], int]] = {
    "mul": cmd_mul,
    "derive": cmd_derive,
    "table": cmd_table,
    "verify": cmd_verify,
    "recon": cmd_recon,
    "killing": cmd_killing,
    "sweep": cmd_sweep,
}


def _common_flags(suppress: bool) -> argparse.ArgumentParser:
    """Flags accepted before and after the subcommand; the subcommand copies set no defaults."""

    def default(value):
        return argparse.SUPPRESS if suppress else value

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--field", default=default(None), help="q (default) or fp:<p>; env SPLITG2_FIELD"
    )
    common.add_argument(
        "--format",
        choices=FORMATS,
        default=default(None),
        help="output format; env SPLITG2_FORMAT",
    )
    common.add_argument(
        "-v", "--verbose", action="count", default=default(0), help="-v info, -vv debug"
    )
    common.add_argument(
        "--workers", type=int, default=default(None), help="threads for the solvers"
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags(suppress=True)

    parser = argparse.ArgumentParser(
        prog="splitg2",
        description="Split octonions as Zorn vector matrices and their derivation algebra",
        parents=[_common_flags(suppress=False)],
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    mul = sub.add_parser("mul", parents=[common], help="multiply two octonions")
    mul.add_argument("lhs")
    mul.add_argument("rhs")

    derive = sub.add_parser("derive", parents=[common], help="solve for the derivation algebra")
    derive.add_argument("--method", choices=("full", "cascade"), default="full")

    sub.add_parser("table", parents=[common], help="print the 14x14 bracket table")

    verify = sub.add_parser("verify", parents=[common], help="run the verification suite")
    verify.add_argument("--golden", default=None, help="golden table JSON (default: bundled)")

    recon_parser = sub.add_parser("recon", parents=[common], help="coordinates of an 8x8 derivation")
    recon_parser.add_argument("file")

    sub.add_parser("killing", parents=[common], help="Killing form of the bracket table")

    sweep = sub.add_parser("sweep", parents=[common], help="derivation dimension over GF(p)")
    sweep.add_argument("--primes", type=_parse_primes, default=list(DEFAULT_PRIMES))
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    try:
        config = CliConfig.resolve(
            field=args.field,
            format=args.format,
            verbosity=args.verbose,
            max_workers=args.workers,
        )
        return COMMANDS[args.command](args, config)
    except NotInSpan as e:
        logger.error(str(e))
        return EXIT_NOT_IN_SPAN
    except DerivationError as e:
        logger.error(str(e))
        return EXIT_VERIFICATION_FAILED
    except Splitg2Error as e:
        logger.error(str(e))
        return EXIT_PARSE_ERROR
    except ValueError as e:
        # pydantic validation of CliConfig
        logger.error(str(e))
        return EXIT_PARSE_ERROR


if __name__ == "__main__":
    sys.exit(main())
