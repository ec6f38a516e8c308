"""Exception types shared across the package."""

from __future__ import annotations


class PolisentError(Exception):
    """Base class for all errors raised by this package."""


class LexiconError(PolisentError):
    """Problem in a word-database file or a programmatic lexicon.

    ``line`` is the 1-based line number in the source file, or None when
    the lexicon was built in code.
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class MalformedLine(LexiconError):
    """Syntax error in a lexicon file."""


class DuplicateSurface(LexiconError):
    """One surface form declared in two categories or two entries."""


class InvalidValence(LexiconError):
    """Opinion valence outside the allowed {-1, +1}."""


class CorpusError(PolisentError):
    """Unreadable or malformed article file."""


class ScopeMismatch(PolisentError):
    """Attempt to combine ledgers with different scope tags."""


class DuplicateArticle(PolisentError):
    """Article id already present in the knowledge base."""


class LexiconMismatch(PolisentError):
    """Knowledge base was built with a different lexicon."""


class VersionMismatch(PolisentError):
    """Persisted knowledge base uses an unsupported format version."""


class CorruptDocument(PolisentError):
    """Persisted knowledge base violates the document schema.

    ``path`` points at the offending field, e.g. ``cells[3].p``.
    """

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")
