"""Command line of the trickle-down verification lab."""

import argparse
from collections.abc import Sequence
from pathlib import Path

from pydantic import ValidationError

from trickle.errors import CapExceededError, TrickleError
from trickle.logger import get_logger
from trickle.settings import override_settings

from .commands import COMMANDS, EXIT_FAILED
from .documents import Command, OutputFormat, RunConfig, SampleMode
from .errors import InstanceFileError

logger = get_logger(__name__)

EXIT_PARSE = 2
EXIT_CAP = 3

_WITH_INSTANCE = (Command.VERIFY, Command.SAMPLE, Command.GARLAND)


def _common() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--q", type=int, help="override the color universe and uniform lists")
    parser.add_argument("--beta", type=int, dest="beta_override", help="schedule slack β")
    parser.add_argument("--iota", type=float, dest="iota_override", help="schedule ι")
    parser.add_argument("--tol-exact", type=float, default=1e-12)
    parser.add_argument("--tol-eig", type=float, default=1e-9)
    parser.add_argument("--cap-enum", type=int, default=10**7)
    parser.add_argument("--cap-facets", type=int, default=10**4)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--eps", type=float, default=0.25, help="mixing-time accuracy")
    parser.add_argument("--workers", type=int)
    parser.add_argument("--out", type=Path, dest="output")
    parser.add_argument(
        "--format",
        dest="output_format",
        choices=[f.value for f in OutputFormat],
        default=OutputFormat.STRUCTURED.value,
    )
    parser.add_argument(
        "--runtime", action="store_true", help="embed timing and memory in the report"
    )
    return parser


def build_parser() -> argparse.ArgumentParser:
    """Parser with one subcommand per `Command`."""
    parser = argparse.ArgumentParser(prog="trickle", description=__doc__)
    commands = parser.add_subparsers(dest="command", required=True)
    common = _common()
    sub = {
        command: commands.add_parser(command.value, parents=[common]) for command in Command
    }
    for command in _WITH_INSTANCE:
        sub[command].add_argument("instance_path", type=Path, metavar="INSTANCE")
    sub[Command.CONSTRAINTS].add_argument("--delta", type=int, help="Δ for the joint search")
    sub[Command.CONSTRAINTS].add_argument("--max-delta", type=int, default=64)
    sample = sub[Command.SAMPLE]
    sample.add_argument("--mode", choices=[m.value for m in SampleMode], default="auto")
    sample.add_argument("--steps", type=int, default=10**5)
    sample.add_argument("--chains", type=int, default=1)
    sample.add_argument("--thin", type=int, default=1)
    sub[Command.LEMMAS].add_argument("--trials", type=int, default=100)
    return parser


def parse_config(argv: Sequence[str] | None = None) -> RunConfig:
    """Parse arguments into a validated `RunConfig`."""
    args = vars(build_parser().parse_args(argv))
    return RunConfig.model_validate({k: v for k, v in args.items() if v is not None})


def main(argv: Sequence[str] | None = None) -> int:
    """Run one subcommand and return its exit code.

    0 means every check passed, 1 a failed check, 2 an unreadable instance or
    invalid flags and 3 an exceeded enumeration cap.
    """
    try:
        config = parse_config(argv)
    except ValidationError as exc:
        logger.error("Invalid arguments", extra={"errors": exc.errors(include_url=False)})
        return EXIT_PARSE
    override_settings(
        tol_exact=config.tol_exact,
        tol_eig=config.tol_eig,
        cap_enum=config.cap_enum,
        cap_facets=config.cap_facets,
        seed=config.seed,
        **({"workers": config.workers} if config.workers is not None else {}),
    )
    try:
        return COMMANDS[config.command](config)
    except InstanceFileError as exc:
        logger.error("Cannot load instance", extra={"error": str(exc)})
        return EXIT_PARSE
    except CapExceededError as exc:
        logger.error("Enumeration cap exceeded", extra={"error": str(exc)})
        return EXIT_CAP
    except TrickleError as exc:
        logger.error("Run failed", extra={"error": str(exc)})
        return EXIT_FAILED
