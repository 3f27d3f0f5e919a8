"""Exception types shared by every module in the package.

Each error carries a short ``detail`` message and an optional ``path``
(used by the document parser to point at the offending field). The class
name doubles as the stable error name exposed by the CLI and the HTTP
service.
"""

from __future__ import annotations


class IvalueError(Exception):
    """Base class for all domain errors raised by this package."""

    def __init__(self, detail: str = "", path: str | None = None):
        super().__init__(detail or self.__class__.__name__)
        self.detail = detail
        self.path = path

    @property
    def error_name(self) -> str:
        return self.__class__.__name__


# --- matrix / relation errors -------------------------------------------

class NotReciprocal(IvalueError):
    """The matrix violates the reciprocity condition z_ij = -z_ji."""


class InconsistentInput(IvalueError):
    """An operation that requires a consistent relation received one that is not."""


class LengthMismatch(IvalueError):
    """Interval lengths disagree with the neutral element's width."""


class NotOrdered(IvalueError):
    """Consecutive comparisons do not respect the best-to-worst ordering."""


class DimensionMismatch(IvalueError):
    """Two matrices that must share a shape do not."""


class NegativeAlpha(IvalueError):
    """A neutral half-width must be nonnegative."""


# --- value scale errors ---------------------------------------------------

class DegenerateScale(IvalueError):
    """The normalization constant is not strictly positive."""


# --- bridge errors --------------------------------------------------------

class OutOfDomain(IvalueError):
    """A value lies outside the domain of the requested transformation."""


# --- elicitation session errors -------------------------------------------

class TooFewObjects(IvalueError):
    """An elicitation session needs at least two objects."""


class DuplicateNames(IvalueError):
    """Object names within one session must be distinct."""


class NegativeCards(IvalueError):
    """Blank-card counts are nonnegative."""


class NonIntegerCards(IvalueError):
    """Blank-card counts are integers."""


class BadSlot(IvalueError):
    """The card slot index does not exist in this session."""


class IncompleteCards(IvalueError):
    """Not every card slot has been filled yet."""


class NoPendingProposal(IvalueError):
    """There is no repair proposal awaiting a response."""


class NotAccepted(IvalueError):
    """The session has not reached the accepted phase."""


class AlreadyFinalized(IvalueError):
    """The session is finalized; no further mutation is allowed."""


# --- document / wire format errors -----------------------------------------

class Malformed(IvalueError):
    """The text is not valid JSON."""


class SchemaViolation(IvalueError):
    """The JSON structure does not match the document schema."""


class InvariantViolation(IvalueError):
    """A structurally valid document violates a domain invariant."""


# --- service errors ---------------------------------------------------------

class UnknownSession(IvalueError):
    """No session exists under the given identifier."""


class Conflict(IvalueError):
    """Optimistic-concurrency revision mismatch on a session mutation."""


class RevisionRequired(IvalueError):
    """A session mutation arrived without a revision number."""
