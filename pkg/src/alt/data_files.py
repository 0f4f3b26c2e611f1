"""Access to bundled data files.

All files are UTF-8 text with one entry per line; lines starting with "#"
are comments. The directory holding them can be overridden with the
ALT_DATA_DIR environment variable, which lets deployments swap in their own
frequency list or stopword inventory without touching the package.
"""

from __future__ import annotations

import csv
import os
from pathlib import Path

from .errors import MalformedLine

DATA_DIR_ENV = "ALT_DATA_DIR"

FREQUENCY_FILE = "frequency_pt_top5000.txt"
STOPWORDS_FILE = "stopwords_pt.txt"
SYLLABLE_ORACLE_FILE = "syllable_oracle_pt.tsv"
TABLE6_FILE = "table6.csv"
TRACTATUS_FILE = "tractatus.txt"


def data_dir() -> Path:
    env = os.environ.get(DATA_DIR_ENV)
    if env:
        return Path(env)
    return Path(__file__).parent / "data"


def data_path(name: str) -> Path:
    return data_dir() / name


def read_entries(path: str | Path) -> list[tuple[int, str]]:
    """Non-blank, non-comment lines as (line number, stripped text)."""
    entries = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            entries.append((lineno, line))
    return entries


def load_wordlist(path: str | Path) -> list[str]:
    return [line for _, line in read_entries(path)]


def load_syllable_oracle(path: str | Path | None = None) -> dict[str, int]:
    """word -> hand-counted syllables, from a two-column TSV."""
    path = Path(path) if path else data_path(SYLLABLE_ORACLE_FILE)
    oracle: dict[str, int] = {}
    for lineno, line in read_entries(path):
        parts = line.split("\t")
        if len(parts) != 2 or not parts[1].isdigit():
            raise MalformedLine(str(path), lineno, line)
        oracle[parts[0]] = int(parts[1])
    return oracle


def load_table6(path: str | Path | None = None) -> list[dict[str, float]]:
    """Published evaluation rows: per-text index values, ours and reference."""
    path = Path(path) if path else data_path(TABLE6_FILE)
    rows: list[dict[str, float]] = []
    with open(path, encoding="utf-8", newline="") as fh:
        for row in csv.DictReader(fh):
            rows.append({k: float(v) for k, v in row.items()})
    return rows


def tractatus_text() -> str:
    return data_path(TRACTATUS_FILE).read_text(encoding="utf-8")
