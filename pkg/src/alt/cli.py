"""Command-line interface: analysis, calibration, comparison, service.

Exit codes: 0 success, 1 I/O problems, 2 domain errors (empty text, no
words, degenerate samples). Table output mirrors the original interface
language; JSON output is canonical and byte-stable for identical inputs.
"""

from __future__ import annotations

import csv
import json
import os
import sys
from pathlib import Path

import click

from . import __version__
from .calibration import (
    CalibrationSample,
    RegressionFit,
    compare_series,
    fit_to_dict,
    load_samples,
    ols_fit,
    residual_histogram,
)
from .errors import AltError
from .lexicon import load_lexicon, load_stopwords
from .metrics import Band, display_points, display_result
from .report import (
    AnalysisReport,
    AnalyzeConfig,
    Severity,
    analyze as analyze_text,
    report_to_json,
)
from .tokenizer import normalize_text

EXIT_IO = 1
EXIT_DOMAIN = 2

BIND_ENV = "ALT_BIND"
DEFAULT_BIND = "127.0.0.1:8321"

BAND_LABELS = {
    Band.HIGH: "legibilidade alta",
    Band.MEDIUM: "legibilidade média",
    Band.LOW: "legibilidade baixa",
}


def _fail(code: int, message: str) -> None:
    click.echo(f"error: {message}", err=True)
    raise SystemExit(code)


def _read_input(source: str) -> bytes:
    if source == "-":
        return sys.stdin.buffer.read()
    return Path(source).read_bytes()


def _pick_format(explicit: str | None) -> str:
    if explicit:
        return explicit
    return "table" if sys.stdout.isatty() else "json"


def _canonical_json(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, ensure_ascii=False, indent=2)


@click.group()
@click.version_option(__version__, prog_name="alt")
def main() -> None:
    """Readability analysis for Brazilian Portuguese text."""


# ------------------------------------------------------------- analyze

def _analysis_table(report: AnalysisReport) -> str:
    s, sc = report.statistics, report.scores
    lines = [
        "Índices de legibilidade",
        f"  Flesch:           {display_points(sc.flesch_pt):>7.1f}",
        f"  Gulpease:         {display_points(sc.gulpease):>7.1f}",
        f"  Flesch-Kincaid:   {display_points(sc.fk_pt):>7.1f}",
        f"  Gunning Fog:      {display_points(sc.gf_pt):>7.1f}",
        f"  ARI:              {display_points(sc.ari_pt):>7.1f}",
        f"  Coleman-Liau:     {display_points(sc.cl_pt):>7.1f}",
        "",
        f"  Resultado: {display_result(sc.final_result)}"
        f" ({BAND_LABELS[sc.band]})",
        "",
        "Resumo descritivo",
        f"  Letras:              {s.letters:>7}",
        f"  Sílabas:             {s.syllables:>7}",
        f"  Palavras:            {s.words:>7}",
        f"  Sentenças:           {s.sentences:>7}",
        f"  Palavras complexas:  {s.complex_words:>7}"
        f"  ({100 * s.complex_per_word:.1f}%)",
        f"  Letras por palavra:     {s.letters_per_word:.2f}",
        f"  Sílabas por palavra:    {s.syllables_per_word:.2f}",
        f"  Palavras por sentença:  {s.words_per_sentence:.2f}",
    ]
    if report.keyword_rows:
        lines += ["", "Palavras-chave"]
        for kw, absolute, relative in report.keyword_rows:
            lines.append(f"  {kw}: {absolute} ({100 * relative:.2f}%)")
    long_count = sum(1 for f in report.long_sentences
                     if f.severity is Severity.LONG)
    very_long = sum(1 for f in report.long_sentences
                    if f.severity is Severity.VERY_LONG)
    lines += [
        "",
        "Anotações",
        f"  Sentenças longas (30–45 palavras):  {long_count}",
        f"  Sentenças muito longas (>45):       {very_long}",
        f"  Palavras complexas destacadas:      {len(report.complex_word_spans)}",
    ]
    return "\n".join(lines)


@main.command("analyze")
@click.argument("source", metavar="INPUT")
@click.option("--keywords", "-k", multiple=True,
              help="Keyword to count (repeatable).")
@click.option("--format", "output_format",
              type=click.Choice(["table", "json"]), default=None,
              help="Defaults to table on a terminal, json otherwise.")
@click.option("--lexicon", "lexicon_path", type=click.Path(), default=None,
              help="Replacement frequency list.")
@click.option("--stopwords", "stopword_path", type=click.Path(), default=None,
              help="Replacement stopword list.")
@click.option("--cloud-cap", type=int, default=100, show_default=True,
              help="Maximum word-cloud entries.")
@click.option("--include-stopwords-in-totals/--no-include-stopwords-in-totals",
              default=True, show_default=True,
              help="Count stopwords in keyword-frequency denominators.")
def cmd_analyze(source: str, keywords: tuple[str, ...],
                output_format: str | None, lexicon_path: str | None,
                stopword_path: str | None, cloud_cap: int,
                include_stopwords_in_totals: bool) -> None:
    """Score INPUT (a file path, or - for stdin) and print the report."""
    try:
        raw = _read_input(source)
    except OSError as exc:
        _fail(EXIT_IO, str(exc))
    try:
        buf = normalize_text(raw)
        lex = load_lexicon(lexicon_path)
        sw = load_stopwords(stopword_path)
        config = AnalyzeConfig(
            cloud_cap=cloud_cap,
            include_stopwords_in_totals=include_stopwords_in_totals)
        report = analyze_text(buf, list(keywords), lex, sw, config)
    except FileNotFoundError as exc:
        _fail(EXIT_IO, str(exc))
    except AltError as exc:
        _fail(EXIT_DOMAIN, str(exc))
    if _pick_format(output_format) == "json":
        click.echo(report_to_json(report, buf))
    else:
        click.echo(_analysis_table(report))


# ----------------------------------------------------------- calibrate

def _fit_table(fit: RegressionFit) -> str:
    rows = [
        ("c1", fit.c1, fit.se1, fit.p1),
        ("c2", fit.c2, fit.se2, fit.p2),
        ("c3", fit.c3, fit.se3, fit.p3),
    ]
    lines = [f"R² = {fit.r_squared:.6f}",
             f"{'':4}{'value':>14}{'std error':>14}{'p-value':>10}"]
    for name, value, se, p in rows:
        lines.append(f"{name:<4}{value:>14.6f}{se:>14.6f}{p:>10.5f}")
    return "\n".join(lines)


def _write_csv(path: Path, header: list[str], rows: list[tuple]) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        writer.writerows(rows)


def _calibration_plots(samples: list[CalibrationSample], fit: RegressionFit,
                       plot_dir: str, bin_width: float) -> list[Path]:
    from .plots import render_fit_scatter, render_residual_histogram

    out = Path(plot_dir)
    out.mkdir(parents=True, exist_ok=True)
    hist = residual_histogram(fit, bin_width)
    written = [
        render_residual_histogram(hist, bin_width, out / "residuals.png"),
        render_fit_scatter(samples, fit, out / "fit.png"),
    ]
    _write_csv(out / "residuals.csv", ["bin_center", "count"], hist)
    _write_csv(
        out / "fit.csv", ["id", "target", "predicted", "residual"],
        [(s.id, s.target, s.target - r, r)
         for s, r in zip(samples, fit.residuals)])
    return written + [out / "residuals.csv", out / "fit.csv"]


@main.command("calibrate")
@click.argument("samples_csv", metavar="SAMPLES_CSV")
@click.option("--format", "output_format",
              type=click.Choice(["table", "json"]), default=None)
@click.option("--plot-dir", default=None,
              help="Directory for figures and their data files.")
@click.option("--bin-width", type=float, default=1.0, show_default=True,
              help="Residual histogram bin width.")
def cmd_calibrate(samples_csv: str, output_format: str | None,
                  plot_dir: str | None, bin_width: float) -> None:
    """Fit target = c1 + c2*x + c3*y over SAMPLES_CSV (header id,x,y,target)."""
    try:
        samples = load_samples(samples_csv)
    except OSError as exc:
        _fail(EXIT_IO, str(exc))
    except (KeyError, ValueError) as exc:
        _fail(EXIT_DOMAIN, f"bad samples file: {exc}")
    try:
        fit = ols_fit(samples)
        outputs = (_calibration_plots(samples, fit, plot_dir, bin_width)
                   if plot_dir else [])
    except AltError as exc:
        _fail(EXIT_DOMAIN, str(exc))
    if _pick_format(output_format) == "json":
        click.echo(_canonical_json(fit_to_dict(fit)))
    else:
        click.echo(_fit_table(fit))
    for path in outputs:
        click.echo(f"wrote {path}", err=True)


# ------------------------------------------------------------- compare

def _load_series(path: str, columns: str | None,
                 ) -> tuple[list[float], list[float], str, str]:
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or len(reader.fieldnames) < 2:
            raise ValueError("need a CSV with at least two columns")
        if columns:
            first, _, second = columns.partition(",")
            if not second:
                raise ValueError("--columns takes two comma-separated names")
        else:
            first, second = reader.fieldnames[:2]
        a, b = [], []
        for row in reader:
            a.append(float(row[first]))
            b.append(float(row[second]))
    return a, b, first, second


@main.command("compare")
@click.argument("series_csv", metavar="SERIES_CSV")
@click.option("--columns", default=None, metavar="ADAPTED,REFERENCE",
              help="Column names to compare; defaults to the first two.")
@click.option("--format", "output_format",
              type=click.Choice(["table", "json"]), default=None)
@click.option("--plot-dir", default=None,
              help="Directory for the comparison figure and data.")
def cmd_compare(series_csv: str, columns: str | None,
                output_format: str | None, plot_dir: str | None) -> None:
    """Correlation and difference statistics between two index columns."""
    try:
        adapted, reference, name_a, name_b = _load_series(series_csv, columns)
    except OSError as exc:
        _fail(EXIT_IO, str(exc))
    except (KeyError, ValueError) as exc:
        _fail(EXIT_DOMAIN, f"bad series file: {exc}")
    try:
        stats = compare_series(adapted, reference)
    except AltError as exc:
        _fail(EXIT_DOMAIN, str(exc))
    if plot_dir:
        from .plots import render_comparison

        out = Path(plot_dir)
        out.mkdir(parents=True, exist_ok=True)
        render_comparison(adapted, reference, out / "comparison.png")
        _write_csv(out / "comparison.csv", [name_a, name_b],
                   list(zip(adapted, reference)))
        click.echo(f"wrote {out / 'comparison.png'}", err=True)
        click.echo(f"wrote {out / 'comparison.csv'}", err=True)
    if _pick_format(output_format) == "json":
        click.echo(_canonical_json({
            "pearson": stats.pearson,
            "mean_diff": stats.mean_diff,
            "two_sigma": stats.two_sigma,
        }))
    else:
        click.echo(f"{stats.pearson:.3f}, {stats.mean_diff:.1f}"
                   f" ± {stats.two_sigma:.1f}")


# --------------------------------------------------------------- serve

def parse_bind(value: str) -> tuple[str, int]:
    host, _, port = value.rpartition(":")
    if not host or not port.isdigit():
        raise ValueError(f"bind address {value!r} is not host:port")
    return host, int(port)


@main.command("serve")
@click.option("--bind", default=None, metavar="HOST:PORT",
              help=f"Defaults to ${BIND_ENV} or {DEFAULT_BIND}.")
@click.option("--allow-origin", multiple=True,
              help="CORS origin allowlist entry (repeatable).")
def cmd_serve(bind: str | None, allow_origin: tuple[str, ...]) -> None:
    """Run the HTTP analysis service."""
    import uvicorn

    from .service import create_app

    value = bind or os.environ.get(BIND_ENV) or DEFAULT_BIND
    try:
        host, port = parse_bind(value)
    except ValueError as exc:
        _fail(EXIT_DOMAIN, str(exc))
    app = create_app(allowed_origins=list(allow_origin) or None)
    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
