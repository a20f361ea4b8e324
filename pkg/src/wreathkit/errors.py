"""Exception hierarchy shared across the kernel.

Math failures (an axiom or hypothesis does not hold on valid input) and input
failures (the data does not even parse or type-check) are kept distinct so the
CLI can map them to exit codes 1 and 2.
"""

from __future__ import annotations


class WreathkitError(Exception):
    """Base class for every error raised by this package."""


class DimensionMismatch(WreathkitError):
    """A map does not have the domain/codomain shape the operation requires."""


class KindMismatch(WreathkitError):
    """Mixed cell kinds or mismatched base structures."""


class NotBalanced(WreathkitError):
    """A k-linear map does not descend to the tensor product over R."""


class PreconditionFailed(WreathkitError):
    """A builder was fed data that fails its precondition axioms."""

    def __init__(self, axiom: str, message: str = ""):
        self.axiom = axiom
        super().__init__(message or f"precondition failed: {axiom}")


class HypothesisFailed(WreathkitError):
    """A universal-morphism hypothesis does not hold for the given data."""

    def __init__(self, hypothesis: str, message: str = ""):
        self.hypothesis = hypothesis
        super().__init__(message or f"hypothesis failed: {hypothesis}")


class SchemaError(WreathkitError):
    """A structure file is malformed (bad JSON, bad rational, bad role)."""


class MissingRole(SchemaError):
    """The requested law needs a role block the file does not provide."""


class UnknownDemo(WreathkitError):
    """No demo is registered under the requested name."""
