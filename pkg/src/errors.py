"""
ToughCycles - Errors

Every rejected input raises a subclass of ToughCyclesError, so the CLI and the
HTTP layer can map them to exit code 2 / HTTP 400 in one place.
"""
from typing import Optional


class ToughCyclesError(ValueError):
    """Base class for inputs the toolkit rejects."""


class InvalidParameterError(ToughCyclesError):
    pass


class NotGraphicalError(ToughCyclesError):
    pass


class DisconnectedGraphError(ToughCyclesError):
    def __init__(self, operation: str):
        super().__init__(f"{operation} requires a connected graph")
        self.operation = operation


class SizeGuardError(ToughCyclesError):
    """n is above a hard guard of an exponential search."""

    def __init__(self, operation: str, n: int, limit: int, hint: str = ""):
        message = f"{operation}: n={n} exceeds the guard n <= {limit}"
        if hint:
            message = f"{message}; {hint}"
        super().__init__(message)
        self.operation = operation
        self.n = n
        self.limit = limit


class ToughnessPrerequisiteError(ToughCyclesError):
    pass


class ConvergenceError(ToughCyclesError):
    pass


class Graph6ParseError(ToughCyclesError):
    def __init__(self, message: str, offset: int, line: Optional[int] = None):
        where = f"byte {offset}" if line is None else f"line {line}, byte {offset}"
        super().__init__(f"graph6 parse error at {where}: {message}")
        self.reason = message
        self.offset = offset
        self.line = line


class EdgeListParseError(ToughCyclesError):
    def __init__(self, message: str, line: int):
        super().__init__(f"edge list parse error at line {line}: {message}")
        self.reason = message
        self.line = line
