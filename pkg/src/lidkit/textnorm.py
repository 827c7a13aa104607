"""Unicode normalization, script detection, and char/word tokenization."""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass
from enum import Enum
from typing import Final, Mapping

from .errors import NoScriptContent
from .registry import Script


class Form(Enum):
    COMPOSED = "composed"      # canonical composition (NFC)
    DECOMPOSED = "decomposed"  # canonical decomposition (NFD)


class Unit(Enum):
    CHAR = "char"
    WORD = "word"
    BPE = "bpe"


@dataclass(frozen=True)
class NormalizedText:
    text: str
    form: Form


@dataclass(frozen=True)
class TokenStream:
    unit: Unit
    tokens: tuple[str, ...]
    source_len: int


def collapse_whitespace(text: str) -> str:
    """Strip the ends and collapse interior whitespace runs to single spaces."""
    return " ".join(text.split())


def normalize(text: str, form: Form = Form.COMPOSED) -> NormalizedText:
    """Put text into the requested canonical form. Idempotent."""
    mode = "NFC" if form is Form.COMPOSED else "NFD"
    return NormalizedText(unicodedata.normalize(mode, text), form)


# Unicode block intervals (inclusive) per script. Combining marks, digits,
# punctuation, and anything else outside these intervals carry no script
# and are excluded from script counting.
DEFAULT_SCRIPT_RANGES: Final[Mapping[Script, tuple[tuple[int, int], ...]]] = {
    Script.Latin: (
        (0x0041, 0x005A),
        (0x0061, 0x007A),
        (0x00C0, 0x00D6),
        (0x00D8, 0x00F6),
        (0x00F8, 0x02AF),
        (0x1E00, 0x1EFF),
        (0x2C60, 0x2C7F),
        (0xA722, 0xA7FF),
        (0xAB30, 0xAB6F),
    ),
    Script.Ethiopic: (
        (0x1200, 0x137F),
        (0x1380, 0x139F),
        (0x2D80, 0x2DDF),
        (0xAB00, 0xAB2F),
    ),
    Script.Arabic: (
        (0x0600, 0x06FF),
        (0x0750, 0x077F),
        (0x08A0, 0x08FF),
        (0xFB50, 0xFDFF),
        (0xFE70, 0xFEFF),
    ),
    Script.Vai: ((0xA500, 0xA63F),),
    Script.Coptic: (
        (0x03E2, 0x03EF),
        (0x2C80, 0x2CFF),
    ),
}


@dataclass(frozen=True)
class ScriptProfile:
    counts: Mapping[Script, int]
    dominant: Script
    coverage: float


def detect_script(
    text: NormalizedText,
    ranges: Mapping[Script, tuple[tuple[int, int], ...]] | None = None,
) -> ScriptProfile:
    """Count scalars per script and pick the dominant one.

    Ties break lexicographically on the script name.
    """
    table = DEFAULT_SCRIPT_RANGES if ranges is None else ranges
    counts: dict[Script, int] = {}
    for ch in text.text:
        cp = ord(ch)
        for script, intervals in table.items():
            if any(lo <= cp <= hi for lo, hi in intervals):
                counts[script] = counts.get(script, 0) + 1
                break
    total = sum(counts.values())
    if total == 0:
        raise NoScriptContent("no scalar falls in any known script range")
    dominant = min(counts, key=lambda s: (-counts[s], s.name))
    return ScriptProfile(
        counts=counts, dominant=dominant, coverage=counts[dominant] / total
    )


def tokenize_chars(text: NormalizedText) -> TokenStream:
    """One token per scalar of the whitespace-collapsed source."""
    source = collapse_whitespace(text.text)
    return TokenStream(unit=Unit.CHAR, tokens=tuple(source), source_len=len(source))


def _is_word_char(ch: str) -> bool:
    return not ch.isspace() and not unicodedata.category(ch).startswith("P")


def tokenize_words(text: NormalizedText) -> TokenStream:
    """Maximal runs of non-whitespace, non-punctuation scalars."""
    source = collapse_whitespace(text.text)
    tokens: list[str] = []
    run: list[str] = []
    for ch in source:
        if _is_word_char(ch):
            run.append(ch)
        elif run:
            tokens.append("".join(run))
            run = []
    if run:
        tokens.append("".join(run))
    return TokenStream(unit=Unit.WORD, tokens=tuple(tokens), source_len=len(source))
