# core/errors.py
from typing import Any, Dict, Optional


class SimsunError(Exception):
    """Base class for every toolkit error."""

    def __init__(self, message: str, detail: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.detail = detail or {}

    def to_dict(self) -> Dict[str, Any]:
        return {"error": type(self).__name__, "message": self.message, "detail": self.detail}


class ParseError(SimsunError, ValueError):
    """Text input does not match the expected format."""


class DomainError(SimsunError, ValueError):
    """Input is well formed but outside the domain of the requested map."""


class UnknownNameError(SimsunError, KeyError):
    """Unregistered map, predicate, claim, class or sequence name."""

    def __str__(self) -> str:
        return self.message
