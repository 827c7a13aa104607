from __future__ import annotations

import pytest

from lidkit import TokenizerSpec, train


@pytest.fixture(scope="session")
def two_lang_corpus():
    """Two languages over disjoint letters; trivially separable."""
    rows = []
    for text in ("aba ab aab", "ba abba ab", "aa bab ab"):
        rows.append(("aaa", text))
    for text in ("xyz zyx xy", "zz xyx yz", "zyz xz yy"):
        rows.append(("zzz", text))
    return rows


@pytest.fixture(scope="session")
def small_models(two_lang_corpus):
    """One trained model per method, shared by read-only tests."""
    spec = TokenizerSpec()
    return {
        method: train(method, two_lang_corpus, tokenizer=spec)
        for method in ("rank", "heli", "liga", "nb", "markov", "varbyte")
    }
