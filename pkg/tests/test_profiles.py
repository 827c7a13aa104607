from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lidkit import (
    BadParams,
    EmptyInput,
    Form,
    GramUnit,
    build_rank_profile,
    extract_ngrams,
    normalize,
    relfreq,
    tokenize_chars,
    tokenize_words,
)
from oracles import count_grams

text_strategy = st.text(alphabet=st.sampled_from("abc .ሀ"), min_size=0, max_size=30)


def char_stream(text):
    return tokenize_chars(normalize(text, Form.COMPOSED))


def test_char_grams_pad_whole_stream_once():
    counts = extract_ngrams(char_stream("ab"), 1, 2)
    assert counts.unit is GramUnit.CHAR
    assert dict(counts.counts[1]) == {"_": 2, "a": 1, "b": 1}
    assert dict(counts.counts[2]) == {"_a": 1, "ab": 1, "b_": 1}
    assert counts.totals == {1: 4, 2: 3}


def test_word_grams_pad_each_token():
    stream = tokenize_words(normalize("ab a", Form.COMPOSED))
    counts = extract_ngrams(stream, 2, 2)
    assert dict(counts.counts[2]) == {"_a": 2, "ab": 1, "b_": 1, "a_": 1}


def test_no_padding_when_disabled():
    counts = extract_ngrams(char_stream("aaa"), 1, 1, pad=None)
    assert dict(counts.counts[1]) == {"a": 3}


def test_byte_grams_never_padded():
    counts = extract_ngrams("é".encode("utf-8"), 1, 2)
    assert counts.unit is GramUnit.BYTE
    assert counts.totals == {1: 2, 2: 1}
    assert dict(counts.counts[2]) == {b"\xc3\xa9": 1}


def test_bad_ranges_rejected():
    with pytest.raises(BadParams):
        extract_ngrams(char_stream("ab"), 0, 2)
    with pytest.raises(BadParams):
        extract_ngrams(char_stream("ab"), 3, 2)


def test_empty_input_rejected():
    with pytest.raises(EmptyInput):
        extract_ngrams(char_stream(""), 1, 2)
    with pytest.raises(EmptyInput):
        extract_ngrams(b"", 1, 2)


@given(text_strategy, st.integers(1, 4), st.integers(0, 3))
@settings(max_examples=100, deadline=None)
def test_char_counts_match_window_enumeration(text, n_min, extra):
    n_max = n_min + extra
    prepared = normalize(text, Form.COMPOSED)
    stream = tokenize_chars(prepared)
    if not stream.tokens:
        with pytest.raises(EmptyInput):
            extract_ngrams(stream, n_min, n_max)
        return
    counts = extract_ngrams(stream, n_min, n_max)
    expected = count_grams("_" + "".join(stream.tokens) + "_", n_min, n_max)
    flat = {}
    for per_order in counts.counts.values():
        for g, c in per_order.items():
            flat[g] = flat.get(g, 0) + c
    assert flat == expected
    for n in range(n_min, n_max + 1):
        assert counts.totals[n] == sum(counts.counts[n].values())


def test_merge_adds_counts():
    a = extract_ngrams(char_stream("ab"), 1, 1)
    b = extract_ngrams(char_stream("b"), 1, 1)
    a.merge(b)
    assert dict(a.counts[1]) == {"_": 4, "a": 1, "b": 2}
    assert a.totals[1] == 7


def test_rank_profile_orders_and_truncates():
    counts = extract_ngrams(char_stream("aab"), 1, 2, pad=None)
    # counts: a:2 b:1 aa:1 ab:1
    profile = build_rank_profile(counts, max_rank=3)
    assert profile.ordered == ("a", "aa", "ab")
    assert profile.rank_of == {"a": 0, "aa": 1, "ab": 2}
    full = build_rank_profile(counts, max_rank=400)
    assert full.ordered == ("a", "aa", "ab", "b")


@given(st.dictionaries(st.text(alphabet="abc", min_size=1, max_size=3),
                       st.integers(1, 50), min_size=1, max_size=20),
       st.integers(1, 10))
@settings(max_examples=100, deadline=None)
def test_rank_profile_is_truncation_of_full_order(gram_counts, max_rank):
    from collections import Counter

    from lidkit.profiles import NGramCounts

    lengths = {len(g) for g in gram_counts}
    per_order = {n: Counter() for n in range(min(lengths), max(lengths) + 1)}
    for g, c in gram_counts.items():
        per_order[len(g)][g] = c
    counts = NGramCounts(
        unit=GramUnit.CHAR,
        n_min=min(lengths),
        n_max=max(lengths),
        counts=per_order,
        totals={n: sum(c.values()) for n, c in per_order.items()},
        padding=None,
    )
    expected = sorted(gram_counts, key=lambda g: (-gram_counts[g], g))[:max_rank]
    profile = build_rank_profile(counts, max_rank=max_rank)
    assert list(profile.ordered) == expected
    full = build_rank_profile(counts, max_rank=len(gram_counts))
    assert profile.ordered == full.ordered[:max_rank]


def test_relfreq_plain_and_smoothed():
    counts = extract_ngrams(char_stream("aaab"), 1, 1, pad=None)
    plain = relfreq(counts)
    assert plain.lookup(1, "a") == 0.75
    assert plain.lookup(1, "b") == 0.25
    assert plain.unseen(1) == 0.0
    smoothed = relfreq(counts, alpha=1.0, vocab_size_per_order={1: 2})
    assert smoothed.lookup(1, "a") == pytest.approx(4 / 6, abs=1e-12)
    assert smoothed.lookup(1, "b") == pytest.approx(2 / 6, abs=1e-12)
    assert smoothed.unseen(1) == pytest.approx(1 / 6, abs=1e-12)


@given(text_strategy.filter(lambda t: t.strip()), st.integers(1, 3))
@settings(max_examples=100, deadline=None)
def test_relfreq_sums_to_one_without_smoothing(text, n):
    stream = char_stream(text)
    counts = extract_ngrams(stream, 1, n)
    table = relfreq(counts)
    for order in range(1, n + 1):
        total = sum(table.lookup(order, g) for g in counts.counts[order])
        assert abs(total - 1.0) < 1e-12
