"""Readability formulas recalibrated for Brazilian Portuguese.

Each index is a linear function of the per-text ratios; nothing here
tokenizes or clamps. The published rounded coefficients are used at
runtime (the full-precision fitted values live in calibration.py for
cross-checks). The aggregate result is the plain mean of the four
grade-level indices, banded at 13 and 17 points.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import NoWords
from .lexicon import Lexicon, is_complex
from .syllables import count_syllables_text
from .tokenizer import TextBuffer, count_letters, count_sentences, segment_words

HIGH_BAND_LIMIT = 13.0
MEDIUM_BAND_LIMIT = 17.0


class Band(Enum):
    HIGH = "high"
    MEDIUM = "medium"
    LOW = "low"


@dataclass(frozen=True)
class TextStatistics:
    letters: int
    syllables: int
    words: int
    sentences: int
    complex_words: int
    letters_per_word: float
    syllables_per_word: float
    words_per_sentence: float
    sentences_per_word: float
    complex_per_word: float

    @classmethod
    def from_counts(cls, letters: int, syllables: int, words: int,
                    sentences: int, complex_words: int) -> "TextStatistics":
        return cls(
            letters=letters, syllables=syllables, words=words,
            sentences=sentences, complex_words=complex_words,
            letters_per_word=letters / words,
            syllables_per_word=syllables / words,
            words_per_sentence=words / sentences,
            sentences_per_word=sentences / words,
            complex_per_word=complex_words / words,
        )


@dataclass(frozen=True)
class ReadabilityScores:
    flesch_pt: float
    gulpease: float
    fk_pt: float
    gf_pt: float
    ari_pt: float
    cl_pt: float
    final_result: float
    band: Band


def compute_statistics(text: TextBuffer, lex: Lexicon) -> TextStatistics:
    spans = segment_words(text)
    if not spans:
        raise NoWords("text contains no words")
    complex_words = sum(1 for s in spans if is_complex(s.surface, lex))
    return TextStatistics.from_counts(
        letters=count_letters(text),
        syllables=count_syllables_text(text),
        words=len(spans),
        sentences=count_sentences(text),
        complex_words=complex_words,
    )


def flesch_pt(s: TextStatistics) -> float:
    return 227 - 1.04 * s.words_per_sentence - 72 * s.syllables_per_word


def gunning_fog_pt(s: TextStatistics) -> float:
    return 0.49 * s.words_per_sentence + 19 * s.complex_per_word


def ari_pt(s: TextStatistics) -> float:
    return 0.44 * s.words_per_sentence + 4.6 * s.letters_per_word - 20


def flesch_kincaid_pt(s: TextStatistics) -> float:
    return 0.36 * s.words_per_sentence + 10.4 * s.syllables_per_word - 18


def coleman_liau_pt(s: TextStatistics) -> float:
    return 5.4 * s.letters_per_word - 21 * s.sentences_per_word - 14


def gulpease(s: TextStatistics) -> float:
    return 89 + 300 * s.sentences_per_word - 10 * s.letters_per_word


def final_result(fk: float, gf: float, ari: float, cl: float
                 ) -> tuple[float, Band]:
    mean = (fk + gf + ari + cl) / 4
    if mean < HIGH_BAND_LIMIT:
        band = Band.HIGH
    elif mean < MEDIUM_BAND_LIMIT:
        band = Band.MEDIUM
    else:
        band = Band.LOW
    return mean, band


def compute_scores(s: TextStatistics) -> ReadabilityScores:
    fk = flesch_kincaid_pt(s)
    gf = gunning_fog_pt(s)
    ari = ari_pt(s)
    cl = coleman_liau_pt(s)
    result, band = final_result(fk, gf, ari, cl)
    return ReadabilityScores(
        flesch_pt=flesch_pt(s), gulpease=gulpease(s),
        fk_pt=fk, gf_pt=gf, ari_pt=ari, cl_pt=cl,
        final_result=result, band=band,
    )


def display_points(value: float) -> float:
    """Index value as shown: one decimal, ties away from floor."""
    return math.floor(value * 10 + 0.5) / 10


def display_result(value: float) -> int:
    """Final result as shown: whole points, half rounds up."""
    return math.floor(value + 0.5)
