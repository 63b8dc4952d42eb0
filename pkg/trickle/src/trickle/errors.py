class TrickleError(Exception):
    """Base exception for every failure raised by the lab."""


class CapExceededError(TrickleError):
    """An enumeration or facet cap was exceeded."""

    def __init__(self, what: str, size: int, cap: int) -> None:
        """Record which cap was hit and by how much."""
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(f"{what}: size {size} exceeds cap {cap}")
