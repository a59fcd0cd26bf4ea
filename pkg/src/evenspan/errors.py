"""Exception types shared across the package."""

from __future__ import annotations


class EvenSpanError(Exception):
    pass


class ParseError(EvenSpanError, ValueError):
    """Malformed graph, tree, CNF or map text.

    ``line`` is the 1-based line number of the offending line, when known.
    """

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ContractViolation(EvenSpanError, ValueError):
    """An operation was called outside its precondition."""


class IntegrityError(EvenSpanError, RuntimeError):
    """An internal guarantee failed (a bug or a corrupted certificate)."""


class EnumerationCapExceeded(EvenSpanError, RuntimeError):
    def __init__(self, cap: int) -> None:
        self.cap = cap
        super().__init__(f"enumeration exceeded the cap of {cap} spanning trees")
