"""Exception hierarchy shared across the package.

Domain failures (bad mathematical input, broken axioms) raise
``ValidationError``; requests that are well-formed but too large for the
configured caps raise ``ResourceLimitError``.  Both inherit from
``BordismError`` so callers — the CLI in particular — can map "domain error"
to one exit code and "malformed input" (plain ``ValueError`` / JSON errors)
to another.
"""

from __future__ import annotations


class BordismError(Exception):
    """Base class for domain-level errors raised by bordismkit."""

    code = "domain-error"


class ValidationError(BordismError):
    """Input is structurally well-formed but violates a mathematical contract."""

    code = "validation-error"


class ResourceLimitError(BordismError):
    """Request exceeds a configured size cap; message reports the estimate."""

    code = "resource-limit"


class InputFormatError(BordismError):
    """Malformed serialized input (bad JSON shape, missing fields)."""

    code = "input-format"
