"""
Exception hierarchy shared by every package.
The CLI maps ValueError subclasses to exit code 2 and ResourceLimitError to 3.
"""


class BoundedDistanceError(Exception):
    """Base class for all library errors."""


class InfeasibleCoverError(BoundedDistanceError, ValueError):
    """Some universe element is covered by no candidate."""

    def __init__(self, uncoverable):
        self.uncoverable = sorted(uncoverable)
        super().__init__(f"Elements not coverable by any candidate: {self.uncoverable}")


class ResourceLimitError(BoundedDistanceError, RuntimeError):
    """An exact solver ran out of node expansions or wall-clock time."""

    def __init__(self, expansions, reason="node expansion budget exhausted"):
        self.expansions = expansions
        self.reason = reason
        super().__init__(f"Resource limit reached after {expansions} expansions ({reason})")


class NotPrimeError(BoundedDistanceError, ValueError):
    pass


class GadgetMismatchError(BoundedDistanceError, ValueError):
    pass


class NonUniformSpecError(BoundedDistanceError, ValueError):
    pass


class InstanceFormatError(BoundedDistanceError, ValueError):
    pass


class InvalidPlayerError(BoundedDistanceError, ValueError):
    pass
