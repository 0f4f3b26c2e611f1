"""Exception types shared across the package.

Domain errors (bad input text, degenerate samples) derive from AltError so
callers can catch one base; genuine I/O problems stay as OSError subclasses.
"""

from __future__ import annotations


class AltError(Exception):
    """Base class for all domain errors raised by this package."""


class InvalidEncoding(AltError):
    """Input bytes are not valid UTF-8."""


class EmptyText(AltError):
    """No scalar values remain after normalization."""


class NotAWord(AltError):
    """Syllable counting was asked about a string with no letters."""


class NoWords(AltError):
    """The text contains zero words, so per-word ratios are undefined."""


class MalformedLine(AltError):
    """A data file line does not match the documented format."""

    def __init__(self, path: str, lineno: int, line: str) -> None:
        super().__init__(f"{path}:{lineno}: malformed line: {line!r}")
        self.path = path
        self.lineno = lineno
        self.line = line


class TooFewSamples(AltError):
    """A plane fit needs at least four samples."""


class RankDeficient(AltError):
    """The regression design matrix is rank deficient (collinear inputs)."""


class LengthMismatch(AltError):
    """Paired series have different lengths."""


class ZeroVariance(AltError):
    """A correlation is undefined because one series is constant."""


class NonpositiveBinWidth(AltError):
    """Histogram bin width must be positive."""


class TooFewEntriesWarning(UserWarning):
    """A loaded lexicon is suspiciously small; carries the actual size."""

    def __init__(self, size: int) -> None:
        super().__init__(f"lexicon has only {size} entries")
        self.size = size
