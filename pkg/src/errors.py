"""
Exception hierarchy for the engine.

Every error carries the exit code the command-line front end returns for it.
"""

from __future__ import annotations


class EngineError(Exception):
    exit_code = 4

    def __init__(self, message: str, detail: object | None = None):
        super().__init__(message)
        self.detail = detail


# ── Usage (exit 1) ─────────────────────────────────────────────────────────────
class UsageError(EngineError):
    exit_code = 1


# ── Parsing (exit 2) ───────────────────────────────────────────────────────────
class ParseError(EngineError):
    exit_code = 2


class ExpressionSyntaxError(ParseError):
    def __init__(self, message: str, position: int, text: str = ""):
        super().__init__(f"{message} at position {position}", detail=text)
        self.position = position
        self.text = text


class UnknownGenerator(ParseError):
    def __init__(self, name: str, space: str):
        super().__init__(f"unknown generator {name!r} in space {space}")
        self.name = name
        self.space = space


# ── Domain (exit 3) ────────────────────────────────────────────────────────────
class DomainError(EngineError):
    exit_code = 3


class NotDivisible(DomainError):
    def __init__(self, message: str, monomial: object | None = None):
        super().__init__(message, detail=monomial)
        self.monomial = monomial


class SpaceMismatch(DomainError):
    pass


class ParityError(DomainError):
    pass


class OutOfScopeRegion(DomainError):
    def __init__(self, grading: object):
        super().__init__(f"grading {grading} lies outside the implemented region of H", detail=grading)
        self.grading = grading


class NotHomogeneous(DomainError):
    pass


class IndexRangeError(DomainError):
    pass


class InconsistentTargets(DomainError):
    pass


class AmbiguousGrading(DomainError):
    pass


class MalformedExpression(DomainError):
    pass


# ── Internal (exit 4) ──────────────────────────────────────────────────────────
class InternalNonDivisible(EngineError):
    """A rewrite needed a division the relations guarantee; seeing this is a bug."""


class RewriteLoopError(EngineError):
    pass


class UnreducedMProduct(EngineError):
    """Two m-classes met in a formal monomial product instead of the m-product table."""
