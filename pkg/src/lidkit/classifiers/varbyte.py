"""Variable-length byte n-gram profiles with substring suppression."""

from __future__ import annotations

from typing import ClassVar, Mapping, Sequence

from ..errors import BadParams
from ..profiles import extract_ngrams
from ..textnorm import NormalizedText
from ..tokenizer import TokenizerSpec
from .base import LanguageModel
from .features import aggregate_byte_counts

N_MIN = 3
N_MAX = 12

# A kept gram must not have a kept extension carrying at least this share
# of its count; the shorter gram is the one dropped.
EXTENSION_SHARE = 0.62


def filter_substrings(candidates: Mapping[bytes, int]) -> dict[bytes, int]:
    """Drop grams whose longer containing gram has >= 62% of their count.

    Removal is decided against the full candidate set, which implies the
    invariant also holds within any subset of the survivors.
    """
    removed: set[bytes] = set()
    for longer, longer_count in candidates.items():
        max_sub = len(longer) - 1
        for sub_len in range(N_MIN, max_sub + 1):
            for i in range(len(longer) - sub_len + 1):
                shorter = longer[i : i + sub_len]
                count = candidates.get(shorter)
                if count is not None and longer_count >= EXTENSION_SHARE * count:
                    removed.add(shorter)
    return {g: c for g, c in candidates.items() if g not in removed}


class VarByteModel(LanguageModel):
    """Kept byte grams of lengths 3..12 weighted by length * relfreq.

    Score = sum over document gram occurrences of the matching kept gram's
    weight; longer grams at equal relative frequency weigh more. Higher is
    better.
    """

    method: ClassVar[str] = "varbyte"
    distance_based: ClassVar[bool] = False
    PARAM_TYPES: ClassVar[dict] = {"kmax": int}

    def __init__(
        self,
        labels: Sequence[str],
        tokenizer: TokenizerSpec,
        kept_counts: Mapping[str, Mapping[bytes, int]],
        totals: Mapping[str, Mapping[int, int]],
        kmax: int,
    ):
        super().__init__(labels, tokenizer)
        self.kmax = kmax
        self.kept_counts = {code: dict(kept_counts[code]) for code in self.labels}
        self.totals = {
            code: {n: totals[code].get(n, 0) for n in range(N_MIN, N_MAX + 1)}
            for code in self.labels
        }
        self._weights: dict[str, dict[bytes, float]] = {}
        for code in self.labels:
            weights: dict[bytes, float] = {}
            for gram, count in self.kept_counts[code].items():
                n = len(gram)
                total = self.totals[code][n]
                if total:
                    weights[gram] = n * (count / total)
            self._weights[code] = weights

    def params(self) -> dict:
        return {"kmax": self.kmax}

    @classmethod
    def train(
        cls,
        prepared: Mapping[str, list[NormalizedText]],
        tokenizer: TokenizerSpec,
        kmax: int = 3000,
    ) -> "VarByteModel":
        if kmax < 1:
            raise BadParams("kmax must be >= 1")
        kept_counts: dict[str, dict[bytes, int]] = {}
        totals: dict[str, dict[int, int]] = {}
        for code, texts in prepared.items():
            agg = aggregate_byte_counts(texts, N_MIN, N_MAX)
            totals[code] = dict(agg.totals)
            candidates: dict[bytes, int] = {}
            for n in range(N_MIN, N_MAX + 1):
                candidates.update(agg.counts[n])
            survivors = filter_substrings(candidates)
            top = sorted(survivors.items(), key=lambda kv: (-kv[1], kv[0]))[:kmax]
            kept_counts[code] = dict(top)
        return cls(
            labels=list(prepared),
            tokenizer=tokenizer,
            kept_counts=kept_counts,
            totals=totals,
            kmax=kmax,
        )

    def raw_scores(self, prepared: NormalizedText) -> dict[str, float]:
        doc = extract_ngrams(prepared.text.encode("utf-8"), N_MIN, N_MAX)
        flat_doc: list[tuple[bytes, int]] = []
        for n in range(N_MIN, N_MAX + 1):
            flat_doc.extend(doc.counts[n].items())
        scores: dict[str, float] = {}
        for code in self.labels:
            weights = self._weights[code]
            total = 0.0
            for gram, cnt in flat_doc:
                hit = weights.get(gram)
                if hit is not None:
                    total += cnt * hit
            scores[code] = total
        return scores

    def payload_lines(self) -> list[str]:
        lines: list[str] = []
        for code in self.labels:
            for n in range(N_MIN, N_MAX + 1):
                lines.append(f"vtotal\t{code}\t{n}\t{self.totals[code][n]}")
        for code in self.labels:
            kept = self.kept_counts[code]
            lines.append(f"kept\t{code}\t{len(kept)}")
            for gram in sorted(kept):
                lines.append(f"g\t{gram.hex()}\t{kept[gram]}")
        return lines

    @classmethod
    def parse_payload(cls, reader, labels, tokenizer, params) -> "VarByteModel":
        totals: dict[str, dict[int, int]] = {code: {} for code in labels}
        for code in labels:
            for n in range(N_MIN, N_MAX + 1):
                section = f"vtotal {code}"
                _, got_code, got_n, total = reader.take("vtotal", 4, section)
                reader.check(
                    got_code == code and reader.to_int(got_n, section) == n,
                    section,
                    "order mismatch",
                )
                totals[code][n] = reader.to_int(total, section)
        kept_counts: dict[str, dict[bytes, int]] = {}
        for code in labels:
            section = f"kept {code}"
            _, got_code, n_entries = reader.take("kept", 3, section)
            reader.check(got_code == code, section, "label order mismatch")
            kept: dict[bytes, int] = {}
            for _ in range(reader.to_int(n_entries, section)):
                _, gram_hex, cnt = reader.take("g", 3, section)
                kept[reader.to_bytes(gram_hex, section)] = reader.to_int(cnt, section)
            kept_counts[code] = kept
        return cls(
            labels=labels,
            tokenizer=tokenizer,
            kept_counts=kept_counts,
            totals=totals,
            kmax=params["kmax"],
        )
