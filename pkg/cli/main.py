import argparse
import json
import logging
import sys
import traceback
from contextlib import ExitStack
from typing import Callable, Dict, Optional, Sequence, TextIO

import sentry_sdk
from sentry_sdk.integrations.logging import LoggingIntegration

from cli import commands
from cli.rendering import OutputFormat
from config.settings import Settings, load_settings
from digraph_matrix.exact_matrix import MatrixError
from groupoid_spectrum.errors import SpectrumError
from groupoid_spectrum.orders import OrderName
from groupoid_spectrum.principal import Listing
from logging_config.logger import configure_logging
from relation_core.errors import BoundExceededError, PayloadFormatError, RelationError
from tower.models import TowerError

Handler = Callable[[argparse.Namespace, Settings, TextIO], int]

HANDLERS: Dict[str, Handler] = {
    "ideals": commands.cmd_ideals,
    "verify": commands.cmd_verify,
    "tower.lift": commands.cmd_tower_lift,
    "tower.lat": commands.cmd_tower_lat,
    "tower.inductivity": commands.cmd_tower_inductivity,
    "tower.witness": commands.cmd_tower_witness,
    "spectrum.emit": commands.cmd_spectrum_emit,
    "spectrum.generator": commands.cmd_spectrum_generator,
    "spectrum.check": commands.cmd_spectrum_check,
}

INPUT_ERRORS = (
    json.JSONDecodeError,
    OSError,
    PayloadFormatError,
    RelationError,
    TowerError,
    SpectrumError,
    MatrixError,
)


def _init_sentry(dsn: Optional[str], environment: str) -> None:
    if not dsn:
        return

    sentry_sdk.init(
        dsn=dsn,
        environment=environment,
        integrations=[
            LoggingIntegration(
                level=logging.INFO,
                event_level=logging.ERROR,
            ),
        ],
        traces_sample_rate=1.0,
    )


def _setup_global_exception_handler(logger: logging.Logger) -> None:
    def exception_handler(exc_type, exc_value, exc_traceback):
        if issubclass(exc_type, KeyboardInterrupt):
            sys.__excepthook__(exc_type, exc_value, exc_traceback)
            return

        error_message = "".join(
            traceback.format_exception(exc_type, exc_value, exc_traceback)
        )
        logger.critical(
            "Unhandled exception: %s",
            error_message,
            exc_info=(exc_type, exc_value, exc_traceback),
        )

        sentry_sdk.capture_exception(exc_value)

    sys.excepthook = exception_handler


def _positive_integer(value: str) -> int:
    try:
        number = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{value!r} is not an integer")
    if number <= 0:
        raise argparse.ArgumentTypeError(f"{value!r} must be positive")
    return number


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=list(OutputFormat.ALL),
        default=OutputFormat.PRETTY,
        help="Output format (default: pretty)",
    )
    common.add_argument(
        "--out",
        default=None,
        help="Write the result to this file instead of stdout",
    )
    common.add_argument(
        "--seed",
        type=int,
        default=0,
        help="Seed for randomized searches (default: 0)",
    )
    common.add_argument(
        "--bound",
        type=_positive_integer,
        default=None,
        help="Largest relation size accepted by ideal enumeration",
    )

    tower_common = argparse.ArgumentParser(add_help=False, parents=[common])
    tower_common.add_argument("tower", help="Tower JSON file")
    tower_common.add_argument(
        "--depth",
        type=_positive_integer,
        default=3,
        help="Number of tower levels to build (default: 3)",
    )

    parser = argparse.ArgumentParser(
        prog="groupoidal",
        description="Ideals of digraph algebras, their towers and groupoid spectra",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    ideals = subparsers.add_parser(
        "ideals", parents=[common], help="Enumerate the ideals of a support relation"
    )
    ideals.add_argument("relation", help="Relation JSON file")
    ideals.add_argument(
        "--close",
        action="store_true",
        help="Take the reflexive-transitive closure of the input pairs",
    )

    verify = subparsers.add_parser(
        "verify", parents=[common], help="Check that a generator generates an ideal"
    )
    verify.add_argument("relation", help="Relation JSON file")
    verify.add_argument("ideal", help="Ideal pair-set JSON file")
    verify.add_argument("generator", help="Generator pair-set JSON file")
    verify.add_argument(
        "--numeric",
        action="store_true",
        help="Also generate the ideal with exact matrix products",
    )

    tower = subparsers.add_parser("tower", help="Reports along a tower of algebras")
    tower_commands = tower.add_subparsers(dest="subcommand", required=True)
    tower_commands.add_parser(
        "lift", parents=[tower_common], help="Lift each level into the next one"
    )
    tower_commands.add_parser(
        "lat", parents=[tower_common], help="Persistent invariant projections"
    )
    inductivity = tower_commands.add_parser(
        "inductivity",
        parents=[tower_common],
        help="Pull an ideal back to every level and regenerate it",
    )
    inductivity.add_argument(
        "--ideal", required=True, help="Pair-set JSON file of the seed ideal"
    )
    inductivity.add_argument(
        "--level",
        type=_positive_integer,
        default=None,
        help="Level the seed ideal lives at (default: the top level)",
    )
    witness = tower_commands.add_parser(
        "witness",
        parents=[common],
        help="Search for an ideal that lift-then-intersect enlarges",
    )
    witness.add_argument(
        "--max-size",
        type=_positive_integer,
        default=3,
        help="Largest relation size searched (default: 3)",
    )

    spectrum = subparsers.add_parser(
        "spectrum", help="Orders and ideal sets on the tail groupoid"
    )
    spectrum_commands = spectrum.add_subparsers(dest="subcommand", required=True)
    for name, help_text in (
        ("emit", "Write the pi coordinates of the order as CSV"),
        ("generator", "Build and check the dyadic generator of an ideal set"),
        ("check", "Check the partial and total order properties"),
    ):
        sub = spectrum_commands.add_parser(
            name, parents=[tower_common], help=help_text
        )
        sub.add_argument(
            "--order",
            choices=list(OrderName.ALL),
            default=OrderName.LEX,
            help="Order on the words (default: lex)",
        )
        if name == "generator":
            sub.add_argument(
                "--ideal-set", required=True, help="Arrow list JSON file"
            )
            sub.add_argument(
                "--listing",
                choices=list(Listing.ALL),
                default=Listing.FINEST,
                help="Matrix units listed before subordinate deletion",
            )

    return parser


def _handler_key(args: argparse.Namespace) -> str:
    subcommand = getattr(args, "subcommand", None)
    if subcommand is None:
        return args.command
    return f"{args.command}.{subcommand}"


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    settings = load_settings()
    configure_logging(
        settings.application.log_level,
        logs_directory=settings.application.logs_directory,
        log_to_file=settings.application.log_to_file,
    )
    logger = logging.getLogger("cli.main")

    _init_sentry(settings.sentry.dsn, settings.application.environment)
    _setup_global_exception_handler(logger)

    if args.bound is not None:
        settings.bounds.enumeration_max_size = args.bound

    handler = HANDLERS[_handler_key(args)]
    logger.info("Running %s", _handler_key(args))

    try:
        with ExitStack() as stack:
            if args.out:
                stream = stack.enter_context(open(args.out, "w", encoding="utf-8"))
            else:
                stream = sys.stdout
            return handler(args, settings, stream)

    except BoundExceededError as e:
        logger.error("Bound exceeded: %s", str(e))
        print(f"error: {e}", file=sys.stderr)
        return commands.EXIT_BOUND_EXCEEDED

    except INPUT_ERRORS as e:
        logger.error("Invalid input: %s", str(e))
        print(f"error: {e}", file=sys.stderr)
        return commands.EXIT_INPUT_ERROR

    except KeyboardInterrupt:
        logger.info("Run interrupted by user")
        raise

    except Exception as e:
        logger.critical(
            "Critical error in %s: %s",
            _handler_key(args),
            str(e),
            exc_info=True,
        )
        sentry_sdk.capture_exception(e)
        return commands.EXIT_UNEXPECTED


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
