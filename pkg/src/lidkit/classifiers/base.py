"""Shared prediction surface for all classification methods."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import ClassVar, Mapping, Sequence

from ..errors import BadParams, EmptyInput
from ..textnorm import NormalizedText
from ..tokenizer import TokenizerSpec

# Inputs shorter than this many scalars trigger a reliability warning.
MIN_RELIABLE_SCALARS = 10

# Raw scores are compared after rounding to this many decimals so ties
# are reproducible across platforms.
SCORE_DECIMALS = 12


@dataclass(frozen=True)
class Prediction:
    code: str
    raw_score: float
    confidence: float


class LanguageModel:
    """Common shape of a trained model.

    ``raw_scores`` maps a prepared input to one scalar per language;
    ``distance_based`` says whether lower is better.
    """

    method: ClassVar[str] = ""
    distance_based: ClassVar[bool] = False
    PARAM_TYPES: ClassVar[dict] = {}

    def __init__(self, labels: Sequence[str], tokenizer: TokenizerSpec):
        self.labels: tuple[str, ...] = tuple(sorted(labels))
        self.tokenizer = tokenizer

    def params(self) -> dict:
        raise NotImplementedError

    def raw_scores(self, prepared: NormalizedText) -> dict[str, float]:
        raise NotImplementedError

    def payload_lines(self) -> list[str]:
        raise NotImplementedError


def rank_predictions(
    raw: Mapping[str, float], distance_based: bool, tau: float = 1.0
) -> list[Prediction]:
    """Convert raw scores into a best-first list with softmax confidences.

    Distances are negated before the softmax. Ordering uses the raw score
    rounded to 12 decimals, then the language code.
    """
    if tau <= 0:
        raise BadParams("tau must be > 0")
    if not raw:
        raise EmptyInput("no languages to rank")
    sign = -1.0 if distance_based else 1.0
    zs = {code: sign * score / tau for code, score in raw.items()}
    top = max(zs.values())
    exps = {code: math.exp(z - top) for code, z in zs.items()}
    norm = sum(exps.values())
    order = sorted(zs, key=lambda code: (-round(zs[code], SCORE_DECIMALS), code))
    return [Prediction(code, raw[code], exps[code] / norm) for code in order]


def identify(
    model: LanguageModel,
    text: str,
    top_k: int | None = None,
    tau: float = 1.0,
) -> list[Prediction]:
    """Classify one input: prepare, score, rank, truncate to top_k.

    Confidences are computed over the full label set before truncation.
    """
    if top_k is not None and top_k < 1:
        raise BadParams("top_k must be >= 1")
    prepared = model.tokenizer.prepare(text)
    if not prepared.text:
        raise EmptyInput("input is empty after normalization")
    if len(prepared.text) < MIN_RELIABLE_SCALARS:
        warnings.warn(
            f"input has only {len(prepared.text)} scalars; "
            "identification is unreliable on very short text",
            stacklevel=2,
        )
    preds = rank_predictions(model.raw_scores(prepared), model.distance_based, tau)
    return preds[:top_k] if top_k is not None else preds
