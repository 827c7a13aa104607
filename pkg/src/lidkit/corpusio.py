"""Labeled corpus files: one ``code<TAB>text`` sample per line."""

from __future__ import annotations

import re
from typing import Iterable, Sequence

from .encoding import esc, unesc
from .errors import IoError, ParseError


def read_corpus(path) -> list[tuple[str, str]]:
    """Read rows, unescaping ``\\t``/``\\n``/``\\r``/``\\\\`` in the text field."""
    rows: list[tuple[str, str]] = []
    try:
        fh = open(path, encoding="utf-8")
    except OSError as e:
        raise IoError(f"cannot read corpus {path}: {e}") from e
    with fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.rstrip("\n")
            if not line:
                continue
            code, sep, text = line.partition("\t")
            if not sep:
                raise ParseError(f"{path}: line {lineno}: missing tab after language code")
            try:
                rows.append((code, unesc(text)))
            except ValueError as e:
                raise ParseError(f"{path}: line {lineno}: {e}") from None
    return rows


def write_corpus(path, rows: Iterable[tuple[str, str]]) -> None:
    try:
        with open(path, "w", encoding="utf-8") as fh:
            for code, text in rows:
                fh.write(f"{code}\t{esc(text)}\n")
    except OSError as e:
        raise IoError(f"cannot write corpus {path}: {e}") from e


_URL_RE = re.compile(r"(?:https?://|www\.)\S+", re.IGNORECASE)
_HANDLE_RE = re.compile(r"@\w+")


def clean_social(text: str) -> str:
    """Strip URLs and @-handles; collapse the leftover whitespace."""
    text = _URL_RE.sub(" ", text)
    text = _HANDLE_RE.sub(" ", text)
    return " ".join(text.split())


def read_f1_report(path) -> dict[str, float]:
    """Read a per-language F1 file: ``code<TAB>f1`` rows, ``#`` comments."""
    scores: dict[str, float] = {}
    try:
        fh = open(path, encoding="utf-8")
    except OSError as e:
        raise IoError(f"cannot read report {path}: {e}") from e
    with fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise ParseError(f"{path}: line {lineno}: expected code<TAB>f1")
            code, value = parts
            try:
                scores[code] = float(value)
            except ValueError:
                raise ParseError(f"{path}: line {lineno}: bad F1 {value!r}") from None
    return scores
