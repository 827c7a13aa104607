"""Synthetic corpus generators shared across test modules.

All text produced here is lowercase with single interior spaces, so text
preparation (case folding, normalization, whitespace collapsing) is the
identity and production code and oracles see the same strings.
"""

from __future__ import annotations

import random


def random_sentence(rng: random.Random, alphabet: str, n_words: int,
                    word_len: tuple[int, int]) -> str:
    words = []
    for _ in range(n_words):
        k = rng.randint(*word_len)
        words.append("".join(rng.choice(alphabet) for _ in range(k)))
    return " ".join(words)


def tiny_instance(rng: random.Random):
    """A small random training set plus one query document."""
    n_langs = rng.randint(2, 4)
    codes = ["aaa", "bbb", "ccc", "ddd"][:n_langs]
    alphabet = "abcdef"[: rng.randint(3, 6)]
    lang_texts: dict[str, list[str]] = {}
    for code in codes:
        n_sents = rng.randint(2, 12)
        lang_texts[code] = [
            random_sentence(rng, alphabet, rng.randint(1, 3), (1, 5))
            for _ in range(n_sents)
        ]
    doc = random_sentence(rng, alphabet, rng.randint(1, 3), (1, 5))
    return lang_texts, doc


class MarkovSource:
    """Character chain with a language-specific successor preference."""

    def __init__(self, rng: random.Random, alphabet: str, bias: float = 0.75):
        self.alphabet = alphabet
        self.bias = bias
        succ = list(alphabet)
        rng.shuffle(succ)
        self.successor = {c: succ[i] for i, c in enumerate(alphabet)}
        self.rng = rng

    def word(self, length: int) -> str:
        out = [self.rng.choice(self.alphabet)]
        while len(out) < length:
            if self.rng.random() < self.bias:
                out.append(self.successor[out[-1]])
            else:
                out.append(self.rng.choice(self.alphabet))
        return "".join(out)

    def sentence(self, min_chars: int, max_chars: int) -> str:
        words = []
        total = 0
        while total < min_chars:
            w = self.word(self.rng.randint(3, 8))
            words.append(w)
            total += len(w) + 1
        return " ".join(words)[:max_chars]


def block_sentence(rng: random.Random, base: int, span: int, n_words: int) -> str:
    """Sentence drawn from a contiguous Unicode block starting at ``base``."""
    words = []
    for _ in range(n_words):
        k = rng.randint(2, 6)
        words.append("".join(chr(base + rng.randrange(span)) for _ in range(k)))
    return " ".join(words)
