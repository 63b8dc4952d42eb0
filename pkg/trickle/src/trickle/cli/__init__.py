from .commands import COMMANDS, cmd_constraints, cmd_garland, cmd_lemmas, cmd_sample, cmd_verify
from .documents import (
    Command,
    OutputFormat,
    RunConfig,
    SampleMode,
    build_instance,
    load_instance,
    read_document,
)
from .errors import CliError, InstanceFileError
from .main import EXIT_CAP, EXIT_PARSE, build_parser, main, parse_config

__all__ = [
    "COMMANDS",
    "EXIT_CAP",
    "EXIT_PARSE",
    "CliError",
    "Command",
    "InstanceFileError",
    "OutputFormat",
    "RunConfig",
    "SampleMode",
    "build_instance",
    "build_parser",
    "cmd_constraints",
    "cmd_garland",
    "cmd_lemmas",
    "cmd_sample",
    "cmd_verify",
    "load_instance",
    "main",
    "parse_config",
    "read_document",
]
