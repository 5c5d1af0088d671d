"""Exception types shared across the package.

Everything derives from ``PlatError`` so callers can catch input problems
with a single except clause.  The CLI maps these onto exit code 2
(malformed input), while refusals that are *verdicts* rather than errors
(failed hypotheses, two-bridge exclusion in certification) are reported
through result objects and exit code 1.
"""

from __future__ import annotations


class PlatError(ValueError):
    """Base class for all input and parameter errors raised here."""


class MalformedDiagramError(PlatError):
    """A diagram violates the structural shape rules (row counts, box counts)."""


class ParameterError(PlatError):
    """A scalar parameter is outside its documented domain."""


class PathError(PlatError):
    """A candidate path is malformed or not allowable for the diagram."""


class TwoBridgeError(PlatError):
    """Raised by operations that are undefined for 2-bridge plats (n <= 2)."""


class UnsupportedBoxError(PlatError):
    """A box's tangle cannot be expressed in the requested form."""
