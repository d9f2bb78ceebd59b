class ChateletError(Exception):
    """Base class for all errors raised by the decider."""


class InputError(ChateletError, ValueError):
    """Malformed user input (CLI flags, JSON documents)."""


class PreconditionError(ChateletError, ValueError):
    """An operation was called outside its domain."""


class LatticeError(ChateletError, RuntimeError):
    """An internal algebraic invariant did not hold."""


class ResourceCapError(ChateletError, RuntimeError):
    def __init__(self, message: str, bound: int | None = None):
        super().__init__(message)
        self.bound = bound


class FactorizationBoundError(ResourceCapError):
    pass


class GroupOrderCapError(ResourceCapError):
    pass


class DepthCapError(ResourceCapError):
    pass
