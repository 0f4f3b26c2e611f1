"""Frequency lexicon and stopword filtering.

A word is "complex" when it falls outside the 5000 most frequent forms of a
reference corpus; that membership test is the only lexical signal the
readability formulas use. The stopword inventory serves the word cloud,
which drops function words before ranking.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from pathlib import Path

from .data_files import FREQUENCY_FILE, STOPWORDS_FILE, data_path
from .errors import MalformedLine, TooFewEntriesWarning
from .tokenizer import is_letter

LEXICON_SIZE = 5000


@dataclass(frozen=True)
class Lexicon:
    """The reference set of common word forms.

    common_words holds at most LEXICON_SIZE lowercase forms; size is its
    cardinality (smaller only when the source file ran short).
    """

    common_words: frozenset[str]
    source_name: str
    size: int


@dataclass(frozen=True)
class StopwordSet:
    """Function words removed from the cloud; multi-word entries are kept
    verbatim but can only ever match as whole single tokens."""

    words: frozenset[str]


def _decoded_lines(path: Path) -> list[str]:
    data = path.read_bytes()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as err:
        lineno = data.count(b"\n", 0, err.start) + 1
        bad = data.splitlines()[lineno - 1].decode("utf-8", "replace")
        raise MalformedLine(str(path), lineno, bad) from err
    return text.splitlines()


def _entries(path: Path) -> list[str]:
    out = []
    for raw in _decoded_lines(path):
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append(line.lower())
    return out


def load_lexicon(path: str | Path | None = None) -> Lexicon:
    """Reads the first LEXICON_SIZE entries of a frequency-ordered list.

    Warns with TooFewEntriesWarning (carrying the actual size) when the
    file holds fewer; extra entries beyond the cutoff are ignored, which
    is what makes every form past them "complex".
    """
    path = Path(path) if path else data_path(FREQUENCY_FILE)
    entries = _entries(path)[:LEXICON_SIZE]
    if len(entries) < LEXICON_SIZE:
        warnings.warn(TooFewEntriesWarning(len(entries)), stacklevel=2)
    return Lexicon(common_words=frozenset(entries), source_name=path.name,
                   size=len(entries))


def load_stopwords(path: str | Path | None = None) -> StopwordSet:
    path = Path(path) if path else data_path(STOPWORDS_FILE)
    return StopwordSet(words=frozenset(_entries(path)))


def is_complex(word: str, lex: Lexicon) -> bool:
    """True when the word is outside the common-word set.

    Tokens without letters (numbers, section labels) and single letters are
    never complex: they carry no lexical difficulty.
    """
    folded = word.lower()
    if folded in lex.common_words:
        return False
    if not any(is_letter(ch) for ch in folded):
        return False
    if len(folded) == 1:
        return False
    return True


def is_stopword(word: str, sw: StopwordSet) -> bool:
    return word.lower() in sw.words
