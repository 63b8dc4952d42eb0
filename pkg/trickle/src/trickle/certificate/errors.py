from trickle.errors import TrickleError


class CertificateError(TrickleError):
    """Base exception for certificate construction and verification."""


class ScheduleError(CertificateError):
    """The coefficient schedule cannot be built for the requested slack."""
