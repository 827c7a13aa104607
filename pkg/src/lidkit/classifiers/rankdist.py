"""Out-of-place rank distance over mixed-order n-gram profiles."""

from __future__ import annotations

from typing import ClassVar, Mapping, Sequence

from ..encoding import esc, unesc
from ..errors import BadParams
from ..profiles import build_rank_profile, extract_ngrams
from ..textnorm import NormalizedText
from ..tokenizer import TokenizerSpec
from .base import LanguageModel
from .features import aggregate_stream_counts

PAD = "_"


def out_of_place_distance(
    doc_ordered: Sequence[str],
    lang_rank_of: Mapping[str, int],
    missing_penalty: float,
) -> float:
    """Sum |doc rank - language rank|; absent grams cost the penalty."""
    total = 0.0
    for doc_rank, gram in enumerate(doc_ordered):
        lang_rank = lang_rank_of.get(gram)
        total += missing_penalty if lang_rank is None else abs(doc_rank - lang_rank)
    return total


class RankDistanceModel(LanguageModel):
    """Per-language rank profile; documents score by out-of-place distance.

    Distance = sum over document-profile grams of |doc rank - language rank|,
    with ``missing_penalty`` for grams absent from the language profile.
    Lower is better.
    """

    method: ClassVar[str] = "rank"
    distance_based: ClassVar[bool] = True
    PARAM_TYPES: ClassVar[dict] = {
        "max_rank": int,
        "missing_penalty": float,
        "n_max": int,
        "n_min": int,
    }

    def __init__(
        self,
        labels: Sequence[str],
        tokenizer: TokenizerSpec,
        profile_counts: Mapping[str, Mapping[str, int]],
        n_min: int,
        n_max: int,
        max_rank: int,
        missing_penalty: float,
    ):
        super().__init__(labels, tokenizer)
        self.n_min = n_min
        self.n_max = n_max
        self.max_rank = max_rank
        self.missing_penalty = missing_penalty
        # Stored counts are the already-truncated profile; rebuilding ranks
        # from them reproduces the training-time order exactly.
        self.profile_counts = {code: dict(profile_counts[code]) for code in self.labels}
        self._rank_of: dict[str, dict[str, int]] = {}
        for code in self.labels:
            items = sorted(self.profile_counts[code].items(), key=lambda kv: (-kv[1], kv[0]))
            self._rank_of[code] = {g: i for i, (g, _) in enumerate(items)}

    def params(self) -> dict:
        return {
            "max_rank": self.max_rank,
            "missing_penalty": self.missing_penalty,
            "n_max": self.n_max,
            "n_min": self.n_min,
        }

    @classmethod
    def train(
        cls,
        prepared: Mapping[str, list[NormalizedText]],
        tokenizer: TokenizerSpec,
        n_min: int = 1,
        n_max: int = 5,
        max_rank: int = 400,
        missing_penalty: float | None = None,
    ) -> "RankDistanceModel":
        if n_min < 1 or n_max < n_min:
            raise BadParams(f"bad n-gram range {n_min}..{n_max}")
        if max_rank < 1:
            raise BadParams("max_rank must be >= 1")
        if missing_penalty is None:
            missing_penalty = float(max_rank)
        if missing_penalty <= 0:
            raise BadParams("missing_penalty must be > 0")
        profile_counts: dict[str, dict[str, int]] = {}
        for code, texts in prepared.items():
            agg = aggregate_stream_counts(texts, tokenizer, n_min, n_max, PAD)
            profile = build_rank_profile(agg, max_rank)
            flat: dict[str, int] = {}
            for gram in profile.ordered:
                flat[gram] = agg.counts[len(gram)][gram]
            profile_counts[code] = flat
        return cls(
            labels=list(prepared),
            tokenizer=tokenizer,
            profile_counts=profile_counts,
            n_min=n_min,
            n_max=n_max,
            max_rank=max_rank,
            missing_penalty=float(missing_penalty),
        )

    def raw_scores(self, prepared: NormalizedText) -> dict[str, float]:
        stream = self.tokenizer.stream(prepared)
        doc_counts = extract_ngrams(stream, self.n_min, self.n_max, pad=PAD)
        doc_profile = build_rank_profile(doc_counts, self.max_rank)
        return {
            code: out_of_place_distance(
                doc_profile.ordered, self._rank_of[code], self.missing_penalty
            )
            for code in self.labels
        }

    def payload_lines(self) -> list[str]:
        lines: list[str] = []
        for code in self.labels:
            grams = self.profile_counts[code]
            lines.append(f"profile\t{code}\t{len(grams)}")
            for gram in sorted(grams):
                lines.append(f"g\t{esc(gram)}\t{grams[gram]}")
        return lines

    @classmethod
    def parse_payload(cls, reader, labels, tokenizer, params) -> "RankDistanceModel":
        profile_counts: dict[str, dict[str, int]] = {}
        for code in labels:
            _, got_code, n_entries = reader.take("profile", 3, f"profile {code}")
            reader.check(got_code == code, f"profile {code}", "label order mismatch")
            count = reader.to_int(n_entries, f"profile {code}")
            flat: dict[str, int] = {}
            for _ in range(count):
                _, gram_raw, cnt = reader.take("g", 3, f"profile {code}")
                flat[unesc(gram_raw)] = reader.to_int(cnt, f"profile {code}")
            profile_counts[code] = flat
        return cls(
            labels=labels,
            tokenizer=tokenizer,
            profile_counts=profile_counts,
            n_min=params["n_min"],
            n_max=params["n_max"],
            max_rank=params["max_rank"],
            missing_penalty=params["missing_penalty"],
        )
