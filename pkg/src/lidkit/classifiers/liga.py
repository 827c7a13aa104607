"""Additive trigram/4-gram relative-frequency scoring."""

from __future__ import annotations

from typing import ClassVar, Mapping, Sequence

from ..encoding import esc, unesc
from ..profiles import extract_ngrams
from ..textnorm import NormalizedText
from ..tokenizer import TokenizerSpec
from .base import LanguageModel
from .features import aggregate_stream_counts

PAD = "_"
ORDERS = (3, 4)


class LigaModel(LanguageModel):
    """Sum of per-language relative frequencies over document 3/4-grams.

    Each document gram occurrence adds the language's relative frequency of
    that gram (0 when absent). Higher is better.
    """

    method: ClassVar[str] = "liga"
    distance_based: ClassVar[bool] = False
    PARAM_TYPES: ClassVar[dict] = {}

    def __init__(
        self,
        labels: Sequence[str],
        tokenizer: TokenizerSpec,
        counts: Mapping[str, Mapping[int, Mapping[str, int]]],
    ):
        super().__init__(labels, tokenizer)
        self.counts = {
            code: {n: dict(counts[code].get(n, {})) for n in ORDERS}
            for code in self.labels
        }
        # Grams of order 3 and 4 never collide by length, so one flat map
        # per language is enough at scoring time.
        self._freq: dict[str, dict[str, float]] = {}
        for code in self.labels:
            flat: dict[str, float] = {}
            for n in ORDERS:
                grams = self.counts[code][n]
                total = sum(grams.values())
                if total:
                    for g, c in grams.items():
                        flat[g] = c / total
            self._freq[code] = flat

    def params(self) -> dict:
        return {}

    @classmethod
    def train(
        cls,
        prepared: Mapping[str, list[NormalizedText]],
        tokenizer: TokenizerSpec,
    ) -> "LigaModel":
        counts: dict[str, dict[int, dict[str, int]]] = {}
        for code, texts in prepared.items():
            agg = aggregate_stream_counts(texts, tokenizer, ORDERS[0], ORDERS[-1], PAD)
            counts[code] = {n: dict(agg.counts[n]) for n in ORDERS}
        return cls(labels=list(prepared), tokenizer=tokenizer, counts=counts)

    def raw_scores(self, prepared: NormalizedText) -> dict[str, float]:
        stream = self.tokenizer.stream(prepared)
        doc = extract_ngrams(stream, ORDERS[0], ORDERS[-1], pad=PAD)
        scores: dict[str, float] = {}
        for code in self.labels:
            freq = self._freq[code]
            total = 0.0
            for n in ORDERS:
                for gram, cnt in doc.counts[n].items():
                    hit = freq.get(gram)
                    if hit is not None:
                        total += cnt * hit
            scores[code] = total
        return scores

    def payload_lines(self) -> list[str]:
        lines: list[str] = []
        for code in self.labels:
            for n in ORDERS:
                grams = self.counts[code][n]
                lines.append(f"lcounts\t{code}\t{n}\t{len(grams)}")
                for gram in sorted(grams):
                    lines.append(f"g\t{esc(gram)}\t{grams[gram]}")
        return lines

    @classmethod
    def parse_payload(cls, reader, labels, tokenizer, params) -> "LigaModel":
        counts: dict[str, dict[int, dict[str, int]]] = {code: {} for code in labels}
        for code in labels:
            for n in ORDERS:
                section = f"lcounts {code} {n}"
                _, got_code, got_n, n_entries = reader.take("lcounts", 4, section)
                reader.check(
                    got_code == code and reader.to_int(got_n, section) == n,
                    section,
                    "order mismatch",
                )
                grams: dict[str, int] = {}
                for _ in range(reader.to_int(n_entries, section)):
                    _, gram_raw, cnt = reader.take("g", 3, section)
                    grams[unesc(gram_raw)] = reader.to_int(cnt, section)
                counts[code][n] = grams
        return cls(labels=labels, tokenizer=tokenizer, counts=counts)
