"""Multinomial naive Bayes over UTF-8 byte n-grams."""

from __future__ import annotations

import math
from typing import ClassVar, Mapping, Sequence

from ..errors import BadParams
from ..profiles import extract_ngrams
from ..textnorm import NormalizedText
from ..tokenizer import TokenizerSpec
from .base import LanguageModel
from .features import aggregate_byte_counts


class NaiveBayesModel(LanguageModel):
    """Log-posterior = log-prior + sum of smoothed byte-gram log-likelihoods.

    Likelihoods use additive smoothing over the vocabulary shared by all
    languages at each order, so unseen grams still discriminate by class
    totals. Higher is better.
    """

    method: ClassVar[str] = "nb"
    distance_based: ClassVar[bool] = False
    PARAM_TYPES: ClassVar[dict] = {
        "alpha": float,
        "n_max": int,
        "n_min": int,
        "uniform_priors": bool,
    }

    def __init__(
        self,
        labels: Sequence[str],
        tokenizer: TokenizerSpec,
        counts: Mapping[str, Mapping[int, Mapping[bytes, int]]],
        class_sizes: Mapping[str, int],
        n_min: int,
        n_max: int,
        alpha: float,
        uniform_priors: bool,
    ):
        super().__init__(labels, tokenizer)
        self.n_min = n_min
        self.n_max = n_max
        self.alpha = alpha
        self.uniform_priors = uniform_priors
        self.counts = {
            code: {n: dict(counts[code].get(n, {})) for n in range(n_min, n_max + 1)}
            for code in self.labels
        }
        self.class_sizes = {code: class_sizes[code] for code in self.labels}
        vocab: dict[int, set[bytes]] = {n: set() for n in range(n_min, n_max + 1)}
        for code in self.labels:
            for n in range(n_min, n_max + 1):
                vocab[n].update(self.counts[code][n])
        self.vocab_sizes = {n: len(v) for n, v in vocab.items()}
        total_samples = sum(self.class_sizes.values())
        self._log_prior: dict[str, float] = {}
        for code in self.labels:
            if uniform_priors:
                self._log_prior[code] = -math.log(len(self.labels))
            else:
                self._log_prior[code] = math.log(self.class_sizes[code]) - math.log(
                    total_samples
                )
        # Byte grams of different orders differ in length, so each language
        # gets one flat log-likelihood map plus per-order unseen values.
        self._loglik: dict[str, dict[bytes, float]] = {}
        self._unseen: dict[str, dict[int, float]] = {}
        for code in self.labels:
            flat: dict[bytes, float] = {}
            unseen: dict[int, float] = {}
            for n in range(n_min, n_max + 1):
                total = sum(self.counts[code][n].values())
                denom = total + alpha * self.vocab_sizes[n]
                unseen[n] = math.log(alpha) - math.log(denom) if denom else 0.0
                for g, c in self.counts[code][n].items():
                    flat[g] = math.log(c + alpha) - math.log(denom)
            self._loglik[code] = flat
            self._unseen[code] = unseen

    def params(self) -> dict:
        return {
            "alpha": self.alpha,
            "n_max": self.n_max,
            "n_min": self.n_min,
            "uniform_priors": self.uniform_priors,
        }

    @classmethod
    def train(
        cls,
        prepared: Mapping[str, list[NormalizedText]],
        tokenizer: TokenizerSpec,
        n_min: int = 1,
        n_max: int = 4,
        alpha: float = 1.0,
        uniform_priors: bool = False,
    ) -> "NaiveBayesModel":
        if n_min < 1 or n_max < n_min:
            raise BadParams(f"bad n-gram range {n_min}..{n_max}")
        if alpha <= 0:
            raise BadParams("alpha must be > 0")
        counts: dict[str, dict[int, dict[bytes, int]]] = {}
        class_sizes: dict[str, int] = {}
        for code, texts in prepared.items():
            agg = aggregate_byte_counts(texts, n_min, n_max)
            counts[code] = {n: dict(agg.counts[n]) for n in range(n_min, n_max + 1)}
            class_sizes[code] = len(texts)
        return cls(
            labels=list(prepared),
            tokenizer=tokenizer,
            counts=counts,
            class_sizes=class_sizes,
            n_min=n_min,
            n_max=n_max,
            alpha=alpha,
            uniform_priors=uniform_priors,
        )

    def raw_scores(self, prepared: NormalizedText) -> dict[str, float]:
        doc = extract_ngrams(prepared.text.encode("utf-8"), self.n_min, self.n_max)
        flat_doc: list[tuple[bytes, int]] = []
        for n in range(self.n_min, self.n_max + 1):
            flat_doc.extend(doc.counts[n].items())
        scores: dict[str, float] = {}
        for code in self.labels:
            loglik = self._loglik[code]
            unseen = self._unseen[code]
            total = self._log_prior[code]
            for gram, cnt in flat_doc:
                value = loglik.get(gram)
                if value is None:
                    value = unseen[len(gram)]
                total += cnt * value
            scores[code] = total
        return scores

    def payload_lines(self) -> list[str]:
        lines: list[str] = []
        for code in self.labels:
            lines.append(f"classn\t{code}\t{self.class_sizes[code]}")
        for code in self.labels:
            for n in range(self.n_min, self.n_max + 1):
                grams = self.counts[code][n]
                lines.append(f"bcounts\t{code}\t{n}\t{len(grams)}")
                for gram in sorted(grams):
                    lines.append(f"g\t{gram.hex()}\t{grams[gram]}")
        return lines

    @classmethod
    def parse_payload(cls, reader, labels, tokenizer, params) -> "NaiveBayesModel":
        class_sizes: dict[str, int] = {}
        for code in labels:
            _, got_code, size = reader.take("classn", 3, f"classn {code}")
            reader.check(got_code == code, f"classn {code}", "label order mismatch")
            class_sizes[code] = reader.to_int(size, f"classn {code}")
        n_min, n_max = params["n_min"], params["n_max"]
        counts: dict[str, dict[int, dict[bytes, int]]] = {code: {} for code in labels}
        for code in labels:
            for n in range(n_min, n_max + 1):
                section = f"bcounts {code} {n}"
                _, got_code, got_n, n_entries = reader.take("bcounts", 4, section)
                reader.check(
                    got_code == code and reader.to_int(got_n, section) == n,
                    section,
                    "order mismatch",
                )
                grams: dict[bytes, int] = {}
                for _ in range(reader.to_int(n_entries, section)):
                    _, gram_hex, cnt = reader.take("g", 3, section)
                    grams[reader.to_bytes(gram_hex, section)] = reader.to_int(cnt, section)
                counts[code][n] = grams
        return cls(
            labels=labels,
            tokenizer=tokenizer,
            counts=counts,
            class_sizes=class_sizes,
            n_min=n_min,
            n_max=n_max,
            alpha=params["alpha"],
            uniform_priors=params["uniform_priors"],
        )
