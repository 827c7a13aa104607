"""N-gram counting, rank profiles, and additive smoothing."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Mapping, Union

from .errors import BadParams, EmptyInput
from .textnorm import TokenStream, Unit

Gram = Union[str, bytes]


class GramUnit(Enum):
    CHAR = "char"
    BYTE = "byte"


@dataclass
class NGramCounts:
    unit: GramUnit
    n_min: int
    n_max: int
    counts: dict[int, Counter]
    totals: dict[int, int]
    padding: str | None

    def get(self, n: int, gram: Gram) -> int:
        return self.counts.get(n, {}).get(gram, 0)

    def merge(self, other: "NGramCounts") -> None:
        for n, grams in other.counts.items():
            self.counts[n].update(grams)
            self.totals[n] += other.totals[n]


def _count_windows(counts: dict[int, Counter], s, n_min: int, n_max: int) -> None:
    length = len(s)
    for n in range(n_min, n_max + 1):
        if length < n:
            continue
        counts[n].update(s[i : i + n] for i in range(length - n + 1))


def extract_ngrams(
    source: TokenStream | bytes | bytearray,
    n_min: int,
    n_max: int,
    pad: str | None = "_",
) -> NGramCounts:
    """Count sliding windows of each order over the source.

    Char streams are padded once around the whole stream; word and BPE
    streams pad each token separately; byte input is never padded.
    """
    if n_min < 1 or n_max < n_min:
        raise BadParams(f"bad n-gram range {n_min}..{n_max}")
    counts: dict[int, Counter] = {n: Counter() for n in range(n_min, n_max + 1)}
    if isinstance(source, (bytes, bytearray)):
        data = bytes(source)
        if not data:
            raise EmptyInput("empty byte input")
        _count_windows(counts, data, n_min, n_max)
        unit, padding = GramUnit.BYTE, None
    else:
        if not source.tokens:
            raise EmptyInput("empty token stream")
        if source.unit is Unit.CHAR:
            segments = ["".join(source.tokens)]
        else:
            segments = list(source.tokens)
        for seg in segments:
            if pad is not None:
                seg = pad + seg + pad
            _count_windows(counts, seg, n_min, n_max)
        unit, padding = GramUnit.CHAR, pad
    totals = {n: sum(c.values()) for n, c in counts.items()}
    return NGramCounts(
        unit=unit, n_min=n_min, n_max=n_max, counts=counts, totals=totals, padding=padding
    )


@dataclass(frozen=True)
class RankProfile:
    ordered: tuple[Gram, ...]
    rank_of: Mapping[Gram, int]


def build_rank_profile(counts: NGramCounts, max_rank: int = 400) -> RankProfile:
    """Rank grams of all orders together by count desc, gram asc; truncate."""
    if max_rank < 1:
        raise BadParams("max_rank must be >= 1")
    items: list[tuple[Gram, int]] = []
    for n in sorted(counts.counts):
        items.extend(counts.counts[n].items())
    if not items:
        raise EmptyInput("no grams to rank")
    items.sort(key=lambda kv: (-kv[1], kv[0]))
    ordered = tuple(g for g, _ in items[:max_rank])
    return RankProfile(ordered=ordered, rank_of={g: i for i, g in enumerate(ordered)})


@dataclass(frozen=True)
class RelFreqTable:
    """Per-order additively smoothed relative frequencies.

    relfreq(g, n) = (count + alpha) / (totals[n] + alpha * vocab_sizes[n]);
    unseen grams get the same formula with count 0.
    """

    alpha: float
    table: Mapping[int, Mapping[Gram, float]]
    totals: Mapping[int, int]
    vocab_sizes: Mapping[int, int]

    def unseen(self, n: int) -> float:
        denom = self.totals.get(n, 0) + self.alpha * self.vocab_sizes.get(n, 0)
        if denom == 0:
            return 0.0
        return self.alpha / denom

    def lookup(self, n: int, gram: Gram) -> float:
        hit = self.table.get(n, {}).get(gram)
        return self.unseen(n) if hit is None else hit


def relfreq(
    counts: NGramCounts,
    alpha: float = 0.0,
    vocab_size_per_order: Mapping[int, int] | None = None,
) -> RelFreqTable:
    if alpha < 0:
        raise BadParams("smoothing alpha must be >= 0")
    vocab_sizes = dict(
        vocab_size_per_order
        if vocab_size_per_order is not None
        else {n: len(c) for n, c in counts.counts.items()}
    )
    table: dict[int, dict[Gram, float]] = {}
    for n, grams in counts.counts.items():
        denom = counts.totals[n] + alpha * vocab_sizes.get(n, 0)
        table[n] = {g: (c + alpha) / denom for g, c in grams.items()} if denom else {}
    return RelFreqTable(
        alpha=alpha, table=table, totals=dict(counts.totals), vocab_sizes=vocab_sizes
    )
