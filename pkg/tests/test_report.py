"""Analysis reports: keyword rows, the cloud, annotations, serialization."""

import json

import hypothesis.strategies as st
import pytest
from hypothesis import given

from alt.errors import NoWords
from alt.lexicon import load_lexicon, load_stopwords
from alt.report import (
    AnalyzeConfig,
    Severity,
    analyze,
    cloud_frequencies,
    flag_complex_words,
    flag_long_sentences,
    keyword_frequencies,
    report_from_json,
    report_to_dict,
    report_to_json,
)
from alt.tokenizer import (
    normalize_text,
    segment_sentences,
    segment_words,
)

LEX = load_lexicon()
SW = load_stopwords()


def run(text: str, keywords=(), **cfg):
    buf = normalize_text(text)
    return analyze(buf, list(keywords), LEX, SW, AnalyzeConfig(**cfg)), buf


class TestKeywordFrequencies:
    def test_repeated_keyword(self):
        rows = keyword_frequencies(normalize_text("brasil é brasil."),
                                   ["brasil"])
        assert rows == [("brasil", 2, 2 / 3)]

    def test_absent_keyword(self):
        rows = keyword_frequencies(normalize_text("uma frase."), ["casa"])
        assert rows == [("casa", 0, 0.0)]

    def test_case_folded_both_sides(self):
        rows = keyword_frequencies(normalize_text("O Brasil cresce."),
                                   ["brasil", "BRASIL"])
        assert rows[0][1] == rows[1][1] == 1

    def test_accent_sensitive(self):
        rows = keyword_frequencies(normalize_text("é avó."), ["avo"])
        assert rows[0][1] == 0

    def test_whole_token_only(self):
        rows = keyword_frequencies(normalize_text("brasileiro."), ["brasil"])
        assert rows[0][1] == 0

    def test_stopwords_kept_in_denominator_by_default(self):
        report, _ = run("o pau e o pau.", keywords=["pau"])
        assert report.keyword_rows == (("pau", 2, 2 / 5),)

    def test_stopwords_removable_from_denominator(self):
        report, _ = run("o pau e o pau.", keywords=["pau"],
                        include_stopwords_in_totals=False)
        assert report.keyword_rows == (("pau", 2, 1.0),)


class TestCloud:
    def test_stopwords_removed(self):
        cloud = cloud_frequencies(
            normalize_text("o pau-brasil e o pau-brasil."), SW)
        assert cloud == [("pau-brasil", 2)]

    def test_all_stopwords_empty(self):
        assert cloud_frequencies(normalize_text("de a o."), SW) == []

    def test_case_folding(self):
        cloud = cloud_frequencies(normalize_text("Brasil brasil"), SW)
        assert cloud == [("brasil", 2)]

    def test_order_descending_then_alphabetical(self):
        cloud = cloud_frequencies(
            normalize_text("casa casa gato gato rua figo."), SW)
        assert cloud == [("casa", 2), ("gato", 2), ("figo", 1), ("rua", 1)]

    def test_cap_applies_to_report(self):
        report, _ = run("casa gato rua figo pão.", cloud_cap=2)
        assert len(report.cloud) == 2

    @given(st.lists(st.sampled_from(
        ["casa", "o", "de", "gato", "não", "rua", "é"]), min_size=1,
        max_size=30))
    def test_cloud_plus_stopwords_accounts_for_every_word(self, tokens):
        buf = normalize_text(" ".join(tokens) + ".")
        words = segment_words(buf)
        cloud = cloud_frequencies(buf, SW)
        stop_occurrences = sum(
            1 for w in words if w.surface.lower() in SW.words)
        assert sum(n for _, n in cloud) + stop_occurrences == len(words)


class TestAnnotations:
    def test_sentence_severity_boundaries(self):
        for count, severity in ((29, Severity.NORMAL), (30, Severity.LONG),
                                (45, Severity.LONG),
                                (46, Severity.VERY_LONG)):
            text = " ".join(["palavra"] * count) + "."
            flags = flag_long_sentences(
                segment_sentences(normalize_text(text)))
            assert flags[0].severity is severity, count

    def test_very_long_sentence_flagged_in_report(self):
        report, _ = run(" ".join(["palavra"] * 46) + ".")
        assert len(report.long_sentences) == 1
        assert report.long_sentences[0].severity is Severity.VERY_LONG

    def test_normal_sentences_not_reported(self):
        report, _ = run("Uma frase curta. Outra frase.")
        assert report.long_sentences == ()

    def test_complex_word_spans(self):
        buf = normalize_text("O heterozigoto apareceu.")
        spans = flag_complex_words(segment_words(buf), LEX)
        assert [s.surface for s in spans] == ["heterozigoto"]

    def test_flag_complex_empty(self):
        assert flag_complex_words([], LEX) == []


class TestAnalyze:
    def test_single_word_report(self):
        report, _ = run("Fim.")
        assert report.statistics.words == 1
        assert report.long_sentences == ()
        assert report.complex_word_spans == ()

    def test_no_words(self):
        with pytest.raises(NoWords):
            run("?!?")

    def test_deterministic(self):
        text = "O gato subiu. A casa é bonita, não é?"
        a, _ = run(text, keywords=["gato"])
        b, _ = run(text, keywords=["gato"])
        assert a == b


class TestSerialization:
    def test_version_and_top_level_keys(self):
        report, buf = run("A casa é bonita.")
        doc = report_to_dict(report, buf)
        assert doc["alt_report_version"] == 1
        assert set(doc) == {"alt_report_version", "statistics", "scores",
                            "keywords", "cloud", "annotations"}

    def test_round_trip_equality(self):
        report, buf = run("O heterozigoto mora na casa amarela, não é? "
                          + " ".join(["palavra"] * 31) + ".",
                          keywords=["casa", "Heterozigoto"])
        payload = report_to_json(report, buf)
        assert report_from_json(payload) == report

    def test_serialization_is_byte_stable(self):
        text = "Análise de texto. É rápida?"
        a, buf_a = run(text, keywords=["texto"])
        b, buf_b = run(text, keywords=["texto"])
        assert report_to_json(a, buf_a) == report_to_json(b, buf_b)

    def test_spans_carry_scalar_and_byte_offsets(self):
        report, buf = run("É heterozigoto.")
        doc = report_to_dict(report, buf)
        [entry] = doc["annotations"]["complex_words"]
        assert entry["start"] == 2
        assert entry["end"] == 14
        # "É" encodes to two bytes, shifting byte offsets by one
        assert entry["byte_start"] == 3
        assert entry["byte_end"] == 15
        assert buf.text[entry["start"]:entry["end"]] == "heterozigoto"

    def test_unsupported_version_rejected(self):
        report, buf = run("Fim.")
        doc = report_to_dict(report, buf)
        doc["alt_report_version"] = 99
        with pytest.raises(ValueError):
            report_from_json(json.dumps(doc))

    def test_band_serialized_as_string(self):
        report, buf = run("A casa é bonita.")
        doc = report_to_dict(report, buf)
        assert doc["scores"]["band"] in {"high", "medium", "low"}
        assert isinstance(doc["scores"]["final_display"], int)
