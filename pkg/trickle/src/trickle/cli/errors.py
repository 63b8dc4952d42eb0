from trickle.errors import TrickleError


class CliError(TrickleError):
    """Base exception for the command line."""


class InstanceFileError(CliError):
    """The instance document cannot be read, parsed or turned into an instance."""
