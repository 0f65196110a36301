class NetforgeError(Exception):
    """Base class for engine errors."""


class InvalidInputError(NetforgeError, ValueError):
    """Malformed or inconsistent input (dimension mismatch, unsorted costs, bad file)."""


class CapacityError(NetforgeError, RuntimeError):
    """An exhaustive search was requested above its configured size cap."""
