"""Exception types raised by teleportlab operations."""


class TeleportLabError(Exception):
    """Base class for all teleportlab errors."""


class InputError(TeleportLabError, ValueError):
    """Malformed or out-of-contract input (bad dimensions, ranges, files)."""


class NonCommutingInputError(TeleportLabError):
    """Broadcast input is not diagonal in the channel basis."""


class NonCommutingError(TeleportLabError):
    """A common eigenbasis was requested for noncommuting states."""


class CommutingError(TeleportLabError):
    """The two-state decomposition was requested for commuting states."""


class NonCommutingMarginalsError(TeleportLabError):
    """Disentanglement by teleportation needs commuting marginals on the
    chosen side; exact disentanglement is impossible otherwise."""
