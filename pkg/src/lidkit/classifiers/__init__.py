"""Trainable classification methods behind one train/identify contract."""

from __future__ import annotations

from typing import Mapping, Sequence

from ..errors import BadParams, EmptyClass, EmptyCorpus, UnknownLanguage
from ..registry import Registry, check_code
from ..textnorm import NormalizedText
from ..tokenizer import TokenizerSpec
from .base import LanguageModel, Prediction, identify, rank_predictions
from .heli import HeliModel
from .liga import LigaModel
from .markov import MarkovModel
from .naive_bayes import NaiveBayesModel
from .rankdist import RankDistanceModel
from .varbyte import VarByteModel

METHODS: Mapping[str, type[LanguageModel]] = {
    cls.method: cls
    for cls in (
        RankDistanceModel,
        HeliModel,
        LigaModel,
        NaiveBayesModel,
        MarkovModel,
        VarByteModel,
    )
}


def train(
    method: str,
    corpus: Sequence[tuple[str, str]],
    tokenizer: TokenizerSpec | None = None,
    registry: Registry | None = None,
    **params,
) -> LanguageModel:
    """Train one model on a labeled corpus of (code, text) rows.

    Codes are shape-checked always and membership-checked when a registry
    is given. A language whose every sample normalizes to nothing is an
    error, not a silent skip.
    """
    cls = METHODS.get(method)
    if cls is None:
        raise BadParams(f"unknown method {method!r}; choose one of {sorted(METHODS)}")
    if tokenizer is None:
        tokenizer = TokenizerSpec()
    grouped: dict[str, list[str]] = {}
    for code, text in corpus:
        folded = check_code(code)
        if registry is not None and folded not in registry:
            raise UnknownLanguage(f"language {folded!r} is not in the registry")
        grouped.setdefault(folded, []).append(text)
    if not grouped:
        raise EmptyCorpus("training corpus is empty")
    prepared: dict[str, list[NormalizedText]] = {}
    for code in sorted(grouped):
        texts = [tokenizer.prepare(t) for t in grouped[code]]
        texts = [t for t in texts if t.text]
        if not texts:
            raise EmptyClass(code)
        prepared[code] = texts
    return cls.train(prepared, tokenizer, **params)


__all__ = [
    "METHODS",
    "HeliModel",
    "LanguageModel",
    "LigaModel",
    "MarkovModel",
    "NaiveBayesModel",
    "Prediction",
    "RankDistanceModel",
    "VarByteModel",
    "identify",
    "rank_predictions",
    "train",
]
