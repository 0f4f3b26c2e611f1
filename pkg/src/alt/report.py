"""Full analysis artifact: scores, summary, keyword and cloud frequencies,
and revision annotations (long sentences, complex words).

The report is a pure value. Serialization is a single canonical JSON
document (sorted keys, no ASCII escaping) so equal reports give equal
bytes; spans carry both scalar indices and UTF-8 byte offsets into the
normalized text.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from enum import Enum

from .lexicon import Lexicon, StopwordSet, is_complex, is_stopword
from .metrics import (
    Band,
    ReadabilityScores,
    TextStatistics,
    compute_scores,
    compute_statistics,
    display_result,
)
from .tokenizer import (
    SentenceSpan,
    TextBuffer,
    WordSpan,
    segment_sentences,
    segment_words,
)

REPORT_VERSION = 1

LONG_SENTENCE_WORDS = 30
VERY_LONG_SENTENCE_WORDS = 45


class Severity(Enum):
    NORMAL = "normal"
    LONG = "long"
    VERY_LONG = "very_long"


@dataclass(frozen=True)
class FlaggedSentence:
    span: SentenceSpan
    severity: Severity


@dataclass(frozen=True)
class AnalyzeConfig:
    cloud_cap: int = 100
    include_stopwords_in_totals: bool = True


@dataclass(frozen=True)
class AnalysisReport:
    statistics: TextStatistics
    scores: ReadabilityScores
    keyword_rows: tuple[tuple[str, int, float], ...]
    cloud: tuple[tuple[str, int], ...]
    long_sentences: tuple[FlaggedSentence, ...]
    complex_word_spans: tuple[WordSpan, ...]


def keyword_frequencies(text: TextBuffer, keywords: list[str],
                        total_words: int | None = None,
                        ) -> list[tuple[str, int, float]]:
    """Whole-token, case-insensitive, accent-sensitive keyword counts.

    total_words sets the denominator of the relative column; it defaults
    to the text's word count.
    """
    folded = [span.surface.lower() for span in segment_words(text)]
    if total_words is None:
        total_words = len(folded)
    counts = Counter(folded)
    rows = []
    for kw in keywords:
        absolute = counts.get(kw.lower(), 0)
        relative = absolute / total_words if total_words else 0.0
        rows.append((kw, absolute, relative))
    return rows


def cloud_frequencies(text: TextBuffer, sw: StopwordSet,
                      ) -> list[tuple[str, int]]:
    """Case-folded frequencies of non-stopword tokens, most frequent
    first, ties broken alphabetically."""
    counts = Counter(
        span.surface.lower()
        for span in segment_words(text)
        if not is_stopword(span.surface, sw)
    )
    return sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))


def flag_long_sentences(spans: list[SentenceSpan]) -> list[FlaggedSentence]:
    flagged = []
    for span in spans:
        if span.word_count > VERY_LONG_SENTENCE_WORDS:
            severity = Severity.VERY_LONG
        elif span.word_count >= LONG_SENTENCE_WORDS:
            severity = Severity.LONG
        else:
            severity = Severity.NORMAL
        flagged.append(FlaggedSentence(span, severity))
    return flagged


def flag_complex_words(words: list[WordSpan], lex: Lexicon) -> list[WordSpan]:
    return [span for span in words if is_complex(span.surface, lex)]


def analyze(text: TextBuffer, keywords: list[str], lex: Lexicon,
            sw: StopwordSet, config: AnalyzeConfig = AnalyzeConfig(),
            ) -> AnalysisReport:
    statistics = compute_statistics(text, lex)
    scores = compute_scores(statistics)

    total = statistics.words
    if not config.include_stopwords_in_totals:
        total -= sum(1 for s in segment_words(text)
                     if is_stopword(s.surface, sw))
    rows = keyword_frequencies(text, keywords, total_words=total)

    cloud = cloud_frequencies(text, sw)[:config.cloud_cap]
    sentences = flag_long_sentences(segment_sentences(text))
    long_sentences = [f for f in sentences if f.severity is not Severity.NORMAL]
    complex_spans = flag_complex_words(segment_words(text), lex)

    return AnalysisReport(
        statistics=statistics,
        scores=scores,
        keyword_rows=tuple(rows),
        cloud=tuple(cloud),
        long_sentences=tuple(long_sentences),
        complex_word_spans=tuple(complex_spans),
    )


# --------------------------------------------------------------- JSON

def _byte_offset(text: str, index: int) -> int:
    return len(text[:index].encode("utf-8"))


def _span_dict(text: str, start: int, end: int) -> dict:
    return {
        "start": start,
        "end": end,
        "byte_start": _byte_offset(text, start),
        "byte_end": _byte_offset(text, end),
    }


def report_to_dict(report: AnalysisReport, text: TextBuffer) -> dict:
    s, sc = report.statistics, report.scores
    return {
        "alt_report_version": REPORT_VERSION,
        "statistics": {
            "letters": s.letters,
            "syllables": s.syllables,
            "words": s.words,
            "sentences": s.sentences,
            "complex_words": s.complex_words,
            "letters_per_word": s.letters_per_word,
            "syllables_per_word": s.syllables_per_word,
            "words_per_sentence": s.words_per_sentence,
            "sentences_per_word": s.sentences_per_word,
            "complex_per_word": s.complex_per_word,
        },
        "scores": {
            "flesch_pt": sc.flesch_pt,
            "gulpease": sc.gulpease,
            "fk_pt": sc.fk_pt,
            "gf_pt": sc.gf_pt,
            "ari_pt": sc.ari_pt,
            "cl_pt": sc.cl_pt,
            "final_result": sc.final_result,
            "final_display": display_result(sc.final_result),
            "band": sc.band.value,
        },
        "keywords": [
            {"keyword": kw, "absolute": absolute, "relative": relative}
            for kw, absolute, relative in report.keyword_rows
        ],
        "cloud": [
            {"word": word, "count": count} for word, count in report.cloud
        ],
        "annotations": {
            "long_sentences": [
                {**_span_dict(text.text, f.span.start, f.span.end),
                 "word_count": f.span.word_count,
                 "severity": f.severity.value}
                for f in report.long_sentences
            ],
            "complex_words": [
                {**_span_dict(text.text, w.start, w.end),
                 "surface": w.surface}
                for w in report.complex_word_spans
            ],
        },
    }


def report_to_json(report: AnalysisReport, text: TextBuffer) -> str:
    return json.dumps(report_to_dict(report, text), sort_keys=True,
                      ensure_ascii=False, separators=(",", ": "), indent=2)


def report_from_dict(doc: dict) -> AnalysisReport:
    """Rebuilds a report value from its serialized form.

    Byte offsets are derived data and are not kept on the value; parsing
    then serializing against the same text reproduces the document.
    """
    if doc.get("alt_report_version") != REPORT_VERSION:
        raise ValueError(
            f"unsupported report version {doc.get('alt_report_version')!r}")
    st = doc["statistics"]
    statistics = TextStatistics(**st)
    sc = dict(doc["scores"])
    sc.pop("final_display")
    sc["band"] = Band(sc["band"])
    scores = ReadabilityScores(**sc)
    rows = tuple((r["keyword"], r["absolute"], r["relative"])
                 for r in doc["keywords"])
    cloud = tuple((c["word"], c["count"]) for c in doc["cloud"])
    long_sentences = tuple(
        FlaggedSentence(
            SentenceSpan(e["start"], e["end"], e["word_count"]),
            Severity(e["severity"]))
        for e in doc["annotations"]["long_sentences"]
    )
    complex_spans = tuple(
        WordSpan(e["start"], e["end"], e["surface"])
        for e in doc["annotations"]["complex_words"]
    )
    return AnalysisReport(statistics, scores, rows, cloud, long_sentences,
                          complex_spans)


def report_from_json(payload: str) -> AnalysisReport:
    return report_from_dict(json.loads(payload))
