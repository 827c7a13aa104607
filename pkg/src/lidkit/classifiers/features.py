"""Per-language feature aggregation shared by the classifier trainers."""

from __future__ import annotations

from collections import Counter
from typing import Iterable

from ..errors import EmptyClass
from ..profiles import GramUnit, NGramCounts, extract_ngrams
from ..textnorm import NormalizedText
from ..tokenizer import TokenizerSpec


def aggregate_stream_counts(
    texts: Iterable[NormalizedText],
    tokenizer: TokenizerSpec,
    n_min: int,
    n_max: int,
    pad: str | None,
) -> NGramCounts:
    """Sum n-gram counts over the tokenized form of each text."""
    agg = NGramCounts(
        unit=GramUnit.CHAR,
        n_min=n_min,
        n_max=n_max,
        counts={n: Counter() for n in range(n_min, n_max + 1)},
        totals={n: 0 for n in range(n_min, n_max + 1)},
        padding=pad,
    )
    for text in texts:
        agg.merge(extract_ngrams(tokenizer.stream(text), n_min, n_max, pad=pad))
    return agg


def aggregate_byte_counts(
    texts: Iterable[NormalizedText], n_min: int, n_max: int
) -> NGramCounts:
    """Sum UTF-8 byte n-gram counts over each text."""
    agg = NGramCounts(
        unit=GramUnit.BYTE,
        n_min=n_min,
        n_max=n_max,
        counts={n: Counter() for n in range(n_min, n_max + 1)},
        totals={n: 0 for n in range(n_min, n_max + 1)},
        padding=None,
    )
    for text in texts:
        agg.merge(extract_ngrams(text.text.encode("utf-8"), n_min, n_max))
    return agg


def require_grams(counts: NGramCounts, code: str) -> None:
    if all(t == 0 for t in counts.totals.values()):
        raise EmptyClass(code)
