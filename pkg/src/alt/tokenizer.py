"""Text normalization, counting rules, and span segmentation.

The counting rules are deliberately character-driven: a word ends where a
separator (space, newline, or end of text) follows something that is neither
a separator nor a hyphen, and a sentence is counted per maximal run of
terminal punctuation. Hyphens immediately before a separator splice word
fragments back together, which is what makes hyphenated line breaks
("inter-\\nnacional") count and read as one word.

Two refinements beyond the raw scan rules:

* a separator-delimited run with no letters and no digits (pure punctuation
  such as "?!?") is not a word;
* text after the last terminator still counts as a final sentence when at
  least one word ends there, so unterminated text is never sentence-less.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass

from .errors import EmptyText, InvalidEncoding

_LOWER_LETTERS = "abcdefghijklmnopqrstuvwxyzáàâãéêíóôõúç"
LETTERS = frozenset(_LOWER_LETTERS + _LOWER_LETTERS.upper())
SEPARATORS = frozenset(" \n")
TERMINATORS = frozenset(".!?;…")
HYPHEN = "-"


def is_letter(ch: str) -> bool:
    return ch in LETTERS


def _is_content(ch: str) -> bool:
    """Characters that make a run count as a word."""
    return ch in LETTERS or ch.isdigit()


@dataclass(frozen=True)
class TextBuffer:
    """Normalized text: NFC, newline-only line endings, non-empty."""

    text: str

    def __len__(self) -> int:
        return len(self.text)


@dataclass(frozen=True)
class WordSpan:
    """One word: [start, end) into the buffer, plus its cleaned surface.

    The surface drops soft hyphens used for line breaking and any leading or
    trailing punctuation, but keeps interior hyphens ("pau-brasil") and
    interior marks of numeric tokens ("2.013").
    """

    start: int
    end: int
    surface: str


@dataclass(frozen=True)
class SentenceSpan:
    """One sentence region: [start, end), and how many words end inside it."""

    start: int
    end: int
    word_count: int


def normalize_text(raw: str | bytes) -> TextBuffer:
    """Decode, canonically compose, and normalize whitespace.

    Raises InvalidEncoding for bytes that are not UTF-8 and EmptyText when
    nothing remains after decoding.
    """
    if isinstance(raw, bytes):
        try:
            raw = raw.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise InvalidEncoding(str(exc)) from exc
    text = raw.replace("\r\n", "\n").replace("\r", "\n")
    text = unicodedata.normalize("NFC", text)
    text = "".join(
        " " if (ch.isspace() and ch != "\n") else ch for ch in text
    )
    if not text:
        raise EmptyText("no text after normalization")
    return TextBuffer(text)


def count_letters(buffer: TextBuffer) -> int:
    """Letters of the Portuguese alphabet plus the hyphen."""
    return sum(1 for ch in buffer.text if ch in LETTERS or ch == HYPHEN)


def count_words(buffer: TextBuffer) -> int:
    """Separator-scan word count.

    A word is counted at a separator (or end of text) whose preceding
    character is neither a separator nor a hyphen, provided the run since
    the previous word break contains a letter or digit. A hyphen before a
    separator keeps the run open; a hyphen at end of text suppresses the
    final count.
    """
    text = buffer.text
    count = 0
    has_content = False
    for k, ch in enumerate(text):
        if ch in SEPARATORS:
            prev = text[k - 1] if k > 0 else None
            if prev is not None and prev not in SEPARATORS and prev != HYPHEN:
                if has_content:
                    count += 1
                has_content = False
        elif _is_content(ch):
            has_content = True
    last = text[-1]
    if last not in SEPARATORS and last != HYPHEN and has_content:
        count += 1
    return count


def segment_words(buffer: TextBuffer) -> list[WordSpan]:
    """Word spans in buffer order, one per counted word."""
    text = buffer.text
    n = len(text)
    spans: list[WordSpan] = []
    frags: list[tuple[int, int]] = []
    start: int | None = None

    def close(end: int) -> None:
        nonlocal frags, start
        if start is not None:
            frags.append((start, end))
            start = None
        chain = frags
        frags = []
        positions = [i for s, e in chain for i in range(s, e)]
        content = [i for i in positions if _is_content(text[i])]
        if not content:
            return
        first, last = content[0], content[-1]
        kept = [i for i in positions if first <= i <= last]
        surface = "".join(text[i] for i in kept)
        spans.append(WordSpan(first, last + 1, surface))

    for k, ch in enumerate(text):
        if ch in SEPARATORS:
            if start is not None:
                if text[k - 1] == HYPHEN:
                    frags.append((start, k - 1))
                    start = None
                else:
                    close(k)
        elif start is None:
            start = k

    if start is not None and text[-1] != HYPHEN:
        close(n)
    return spans


def _cluster_ends(text: str) -> list[int]:
    """Exclusive end index of each maximal terminator run."""
    ends: list[int] = []
    k = 0
    n = len(text)
    while k < n:
        if text[k] in TERMINATORS:
            j = k
            while j < n and text[j] in TERMINATORS:
                j += 1
            ends.append(j)
            k = j
        else:
            k += 1
    return ends


def count_sentences(buffer: TextBuffer) -> int:
    """Terminator-run count, plus one for a word-bearing unterminated tail."""
    ends = _cluster_ends(buffer.text)
    count = len(ends)
    tail_from = ends[-1] if ends else 0
    if any(span.end - 1 >= tail_from for span in segment_words(buffer)):
        count += 1
    return count


def segment_sentences(buffer: TextBuffer) -> list[SentenceSpan]:
    """Sentence spans tiling the buffer, one per counted sentence.

    A word belongs to the span holding its final character, so numbered
    headings ("2.013") keep their word attached to the sentence body that
    follows the heading's dot.
    """
    text = buffer.text
    n = len(text)
    word_ends = [span.end - 1 for span in segment_words(buffer)]
    spans: list[SentenceSpan] = []
    prev = 0
    for cend in _cluster_ends(text):
        wc = sum(1 for w in word_ends if prev <= w < cend)
        spans.append(SentenceSpan(prev, cend, wc))
        prev = cend
    tail_wc = sum(1 for w in word_ends if w >= prev)
    if tail_wc > 0:
        spans.append(SentenceSpan(prev, n, tail_wc))
    return spans
