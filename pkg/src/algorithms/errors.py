from __future__ import annotations


class HypergraphError(ValueError):
    """Base class for every error raised by the library."""


class InputError(HypergraphError):
    pass


class PreconditionError(HypergraphError):
    pass


class SizeGuardError(HypergraphError):
    pass


class SolverError(HypergraphError):
    """A result failed its own re-verification."""


class ParseError(InputError):
    def __init__(self, line: int, reason: str) -> None:
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason
