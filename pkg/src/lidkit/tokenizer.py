"""Tokenizer configuration shared by training and classification."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .bpe import BpeModel, bpe_encode, bpe_train
from .errors import BadParams
from .textnorm import (
    Form,
    NormalizedText,
    TokenStream,
    Unit,
    collapse_whitespace,
    normalize,
    tokenize_chars,
    tokenize_words,
)


@dataclass(frozen=True)
class TokenizerSpec:
    """How raw text becomes tokens: unit, canonical form, case folding.

    Preparation order is fixed: lowercase (if enabled), canonical
    normalization, whitespace collapsing. Classification and training share
    this pipeline so features always come from identical text.
    """

    unit: Unit = Unit.CHAR
    form: Form = Form.COMPOSED
    case_fold: bool = True
    bpe: BpeModel | None = None

    def prepare(self, text: str) -> NormalizedText:
        if self.case_fold:
            text = text.lower()
        normalized = normalize(text, self.form)
        return NormalizedText(collapse_whitespace(normalized.text), self.form)

    def stream(self, prepared: NormalizedText) -> TokenStream:
        """Tokenize text that already went through prepare()."""
        if self.unit is Unit.CHAR:
            return tokenize_chars(prepared)
        if self.unit is Unit.WORD:
            return tokenize_words(prepared)
        if self.bpe is None:
            raise BadParams("bpe unit requires a trained BpeModel")
        return bpe_encode(self.bpe, prepared)

    def tokenize(self, text: str) -> TokenStream:
        return self.stream(self.prepare(text))


def fit_tokenizer(
    unit: Unit,
    texts: Iterable[str] = (),
    form: Form = Form.COMPOSED,
    case_fold: bool = True,
    bpe_vocab: int = 2000,
) -> TokenizerSpec:
    """Build a TokenizerSpec, training the BPE table when unit is BPE."""
    spec = TokenizerSpec(unit=unit, form=form, case_fold=case_fold)
    if unit is not Unit.BPE:
        return spec
    prepared = [spec.prepare(t) for t in texts]
    model = bpe_train([p for p in prepared if p.text], bpe_vocab)
    return TokenizerSpec(unit=unit, form=form, case_fold=case_fold, bpe=model)
