"""Trainable byte-pair merges over word-internal character sequences."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

from .errors import BadParams, EmptyCorpus
from .textnorm import (
    Form,
    NormalizedText,
    TokenStream,
    Unit,
    collapse_whitespace,
    tokenize_words,
)

# Private-use scalar so the marker never collides with real text and,
# sorting above all letters, never wins a lexicographic pair tie against
# a letter pair of equal frequency.
END_OF_WORD: str = ""
END_OF_WORD_DISPLAY: str = "<eow>"


@dataclass(frozen=True)
class BpeModel:
    merges: tuple[tuple[str, str], ...]
    vocab: frozenset[str]
    target_vocab_size: int
    end_of_word_marker: str = END_OF_WORD


def _apply_merge(seq: tuple[str, ...], pair: tuple[str, str]) -> tuple[str, ...]:
    a, b = pair
    out: list[str] = []
    i = 0
    while i < len(seq):
        if i + 1 < len(seq) and seq[i] == a and seq[i + 1] == b:
            out.append(a + b)
            i += 2
        else:
            out.append(seq[i])
            i += 1
    return tuple(out)


def bpe_train(
    corpus: Iterable[NormalizedText | str],
    target_vocab_size: int,
    min_pair_freq: int = 1,
) -> BpeModel:
    """Learn merges by repeatedly joining the most frequent adjacent pair.

    Merges happen within words only; every word carries a trailing
    end-of-word marker which may appear as the right element of a pair.
    Frequency ties break on the lexicographically smallest concatenated
    pair. Merging stops when the vocabulary reaches the target size or no
    pair occurs at least ``min_pair_freq`` times.
    """
    if min_pair_freq < 1:
        raise BadParams("min_pair_freq must be >= 1")
    words: Counter[tuple[str, ...]] = Counter()
    for doc in corpus:
        if not isinstance(doc, NormalizedText):
            doc = NormalizedText(doc, Form.COMPOSED)
        for word in tokenize_words(doc).tokens:
            words[tuple(word) + (END_OF_WORD,)] += 1
    if not words:
        raise EmptyCorpus("no words in BPE training corpus")
    base: set[str] = set()
    for seq in words:
        base.update(seq)
    if target_vocab_size < len(base):
        raise BadParams(
            f"target_vocab_size {target_vocab_size} is below the "
            f"{len(base)} base symbols"
        )
    vocab = set(base)
    merges: list[tuple[str, str]] = []
    seqs: dict[tuple[str, ...], int] = dict(words)
    while len(vocab) < target_vocab_size:
        pairs: Counter[tuple[str, str]] = Counter()
        for seq, cnt in seqs.items():
            for a, b in zip(seq, seq[1:]):
                pairs[(a, b)] += cnt
        eligible = [(p, c) for p, c in pairs.items() if c >= min_pair_freq]
        if not eligible:
            break
        # Concatenations can collide ("ab"+"c" vs "a"+"bc"), so the pair
        # itself is the final tie-break; order never depends on dict layout.
        best = min(eligible, key=lambda pc: (-pc[1], pc[0][0] + pc[0][1], pc[0]))[0]
        merges.append(best)
        vocab.add(best[0] + best[1])
        merged: dict[tuple[str, ...], int] = {}
        for seq, cnt in seqs.items():
            new_seq = _apply_merge(seq, best)
            merged[new_seq] = merged.get(new_seq, 0) + cnt
        seqs = merged
    return BpeModel(
        merges=tuple(merges),
        vocab=frozenset(vocab),
        target_vocab_size=target_vocab_size,
    )


def bpe_encode(model: BpeModel, text: NormalizedText) -> TokenStream:
    """Apply merges in training order to each word of the input.

    Scalars unseen at training time pass through as singleton tokens.
    """
    source = collapse_whitespace(text.text)
    tokens: list[str] = []
    for word in tokenize_words(text).tokens:
        seq = tuple(word) + (model.end_of_word_marker,)
        for pair in model.merges:
            seq = _apply_merge(seq, pair)
        tokens.extend(seq)
    return TokenStream(unit=Unit.BPE, tokens=tuple(tokens), source_len=len(source))


def bpe_decode(tokens: Iterable[str], marker: str = END_OF_WORD) -> tuple[str, ...]:
    """Invert encoding back to the word tokenization."""
    text = "".join(tokens)
    return tuple(w for w in text.split(marker) if w)


def display_token(token: str, marker: str = END_OF_WORD) -> str:
    """Human-readable form of a BPE symbol for CLI output."""
    return token.replace(marker, END_OF_WORD_DISPLAY)
