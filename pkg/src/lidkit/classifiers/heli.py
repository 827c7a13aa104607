"""Backoff n-gram scoring: highest applicable order, penalty as smoothing."""

from __future__ import annotations

import math
from typing import ClassVar, Mapping, Sequence

from ..encoding import esc, unesc
from ..errors import BadParams, EmptyInput
from ..textnorm import NormalizedText, Unit
from ..tokenizer import TokenizerSpec
from .base import LanguageModel
from .features import aggregate_stream_counts

PAD = "_"


class HeliModel(LanguageModel):
    """Mean negative log10 relative frequency with per-position backoff.

    Each scoring position uses the highest order <= nmax whose gram is known
    to any language; languages lacking that gram at that order take
    ``penalty`` for the position. The penalty acts as the smoothing mass, so
    it must exceed every stored value. Lower mean is better.

    With a char tokenizer, positions run over the unpadded character stream;
    with word or BPE tokenizers, over each padded token separately.
    """

    method: ClassVar[str] = "heli"
    distance_based: ClassVar[bool] = True
    PARAM_TYPES: ClassVar[dict] = {"nmax": int, "penalty": float, "top_f": int}

    def __init__(
        self,
        labels: Sequence[str],
        tokenizer: TokenizerSpec,
        kept_counts: Mapping[str, Mapping[int, Mapping[str, int]]],
        totals: Mapping[str, Mapping[int, int]],
        nmax: int,
        penalty: float,
        top_f: int,
    ):
        super().__init__(labels, tokenizer)
        self.nmax = nmax
        self.penalty = penalty
        self.top_f = top_f
        self.per_word = tokenizer.unit is not Unit.CHAR
        self.kept_counts = {
            code: {n: dict(kept_counts[code].get(n, {})) for n in range(1, nmax + 1)}
            for code in self.labels
        }
        self.totals = {
            code: {n: totals[code].get(n, 0) for n in range(1, nmax + 1)}
            for code in self.labels
        }
        self._values: dict[str, dict[int, dict[str, float]]] = {}
        self._domain: dict[int, set[str]] = {n: set() for n in range(1, nmax + 1)}
        worst = 0.0
        for code in self.labels:
            per_order: dict[int, dict[str, float]] = {}
            for n in range(1, nmax + 1):
                total = self.totals[code][n]
                vals = {
                    g: -math.log10(c / total)
                    for g, c in self.kept_counts[code][n].items()
                }
                per_order[n] = vals
                self._domain[n].update(vals)
                if vals:
                    worst = max(worst, max(vals.values()))
            self._values[code] = per_order
        if penalty <= worst:
            raise BadParams(
                f"penalty {penalty} must exceed the largest stored value "
                f"{worst:.6f}; raise --penalty"
            )

    def params(self) -> dict:
        return {"nmax": self.nmax, "penalty": self.penalty, "top_f": self.top_f}

    @classmethod
    def train(
        cls,
        prepared: Mapping[str, list[NormalizedText]],
        tokenizer: TokenizerSpec,
        nmax: int = 6,
        penalty: float = 7.0,
        top_f: int = 10000,
    ) -> "HeliModel":
        if nmax < 1:
            raise BadParams("nmax must be >= 1")
        if top_f < 1:
            raise BadParams("top_f must be >= 1")
        if penalty <= 0:
            raise BadParams("penalty must be > 0")
        per_word = tokenizer.unit is not Unit.CHAR
        pad = PAD if per_word else None
        kept_counts: dict[str, dict[int, dict[str, int]]] = {}
        totals: dict[str, dict[int, int]] = {}
        for code, texts in prepared.items():
            agg = aggregate_stream_counts(texts, tokenizer, 1, nmax, pad)
            totals[code] = dict(agg.totals)
            kept: dict[int, dict[str, int]] = {}
            for n in range(1, nmax + 1):
                items = sorted(agg.counts[n].items(), key=lambda kv: (-kv[1], kv[0]))
                kept[n] = dict(items[:top_f])
            kept_counts[code] = kept
        return cls(
            labels=list(prepared),
            tokenizer=tokenizer,
            kept_counts=kept_counts,
            totals=totals,
            nmax=nmax,
            penalty=penalty,
            top_f=top_f,
        )

    def _segments(self, prepared: NormalizedText) -> list[str]:
        if self.per_word:
            return [PAD + tok + PAD for tok in self.tokenizer.stream(prepared).tokens]
        # prepare() already collapsed whitespace, so the stream is the text.
        return [prepared.text]

    def raw_scores(self, prepared: NormalizedText) -> dict[str, float]:
        segments = self._segments(prepared)
        sums = {code: 0.0 for code in self.labels}
        positions = 0
        for seg in segments:
            length = len(seg)
            for i in range(length):
                positions += 1
                hit: tuple[int, str] | None = None
                for n in range(min(self.nmax, length - i), 0, -1):
                    gram = seg[i : i + n]
                    if gram in self._domain[n]:
                        hit = (n, gram)
                        break
                if hit is None:
                    for code in self.labels:
                        sums[code] += self.penalty
                    continue
                n, gram = hit
                for code in self.labels:
                    value = self._values[code][n].get(gram)
                    sums[code] += self.penalty if value is None else value
        if positions == 0:
            raise EmptyInput("no scorable positions in input")
        return {code: sums[code] / positions for code in self.labels}

    def payload_lines(self) -> list[str]:
        lines: list[str] = []
        for code in self.labels:
            for n in range(1, self.nmax + 1):
                lines.append(f"htotal\t{code}\t{n}\t{self.totals[code][n]}")
        for code in self.labels:
            for n in range(1, self.nmax + 1):
                grams = self.kept_counts[code][n]
                lines.append(f"hcounts\t{code}\t{n}\t{len(grams)}")
                for gram in sorted(grams):
                    lines.append(f"g\t{esc(gram)}\t{grams[gram]}")
        return lines

    @classmethod
    def parse_payload(cls, reader, labels, tokenizer, params) -> "HeliModel":
        nmax = params["nmax"]
        totals: dict[str, dict[int, int]] = {code: {} for code in labels}
        for code in labels:
            for n in range(1, nmax + 1):
                _, got_code, got_n, total = reader.take("htotal", 4, f"htotal {code}")
                reader.check(
                    got_code == code and reader.to_int(got_n, "htotal") == n,
                    f"htotal {code}",
                    "order mismatch",
                )
                totals[code][n] = reader.to_int(total, f"htotal {code}")
        kept_counts: dict[str, dict[int, dict[str, int]]] = {code: {} for code in labels}
        for code in labels:
            for n in range(1, nmax + 1):
                section = f"hcounts {code} {n}"
                _, got_code, got_n, n_entries = reader.take("hcounts", 4, section)
                reader.check(
                    got_code == code and reader.to_int(got_n, section) == n,
                    section,
                    "order mismatch",
                )
                grams: dict[str, int] = {}
                for _ in range(reader.to_int(n_entries, section)):
                    _, gram_raw, cnt = reader.take("g", 3, section)
                    grams[unesc(gram_raw)] = reader.to_int(cnt, section)
                kept_counts[code][n] = grams
        return cls(
            labels=labels,
            tokenizer=tokenizer,
            kept_counts=kept_counts,
            totals=totals,
            nmax=nmax,
            penalty=params["penalty"],
            top_f=params["top_f"],
        )
