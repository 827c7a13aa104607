from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lidkit import IoError, ParseError, read_corpus, read_f1_report, write_corpus
from lidkit.corpusio import clean_social
from lidkit.encoding import esc, fmt_scalar, parse_scalar, unesc
from lidkit.errors import CorruptTable

tricky_text = st.text(
    alphabet=st.sampled_from("ab\t\n\r\\ ሀ"), min_size=0, max_size=30
)


def test_corpus_round_trip_with_control_chars(tmp_path):
    rows = [
        ("yor", "plain text"),
        ("ibo", "tab\there"),
        ("hau", "line\nbreak and \\ backslash and \r return"),
    ]
    path = tmp_path / "corpus.tsv"
    write_corpus(path, rows)
    assert read_corpus(path) == rows
    # escaped file stays one line per row
    assert len(path.read_text(encoding="utf-8").splitlines()) == 3


@given(st.lists(st.tuples(st.sampled_from(["yor", "ibo"]), tricky_text), max_size=20))
@settings(max_examples=50, deadline=None)
def test_corpus_round_trip_random(tmp_path_factory, rows):
    path = tmp_path_factory.mktemp("corpus") / "c.tsv"
    write_corpus(path, rows)
    assert read_corpus(path) == rows


def test_read_corpus_errors(tmp_path):
    missing_tab = tmp_path / "bad.tsv"
    missing_tab.write_text("yor no tab here\n".replace("\t", " "), encoding="utf-8")
    with pytest.raises(ParseError) as err:
        read_corpus(missing_tab)
    assert "line 1" in str(err.value)

    bad_escape = tmp_path / "esc.tsv"
    bad_escape.write_text("yor\tbad \\x escape\n", encoding="utf-8")
    with pytest.raises(ParseError):
        read_corpus(bad_escape)

    with pytest.raises(IoError):
        read_corpus(tmp_path / "nope.tsv")


def test_read_corpus_skips_blank_lines(tmp_path):
    path = tmp_path / "gaps.tsv"
    path.write_text("yor\tone\n\n\nibo\ttwo\n", encoding="utf-8")
    assert read_corpus(path) == [("yor", "one"), ("ibo", "two")]


def test_clean_social():
    assert clean_social("see https://ex.am/ple?q=1 now") == "see now"
    assert clean_social("ping @someone_22 ok") == "ping ok"
    assert clean_social("www.site.org/x and HTTP://UP.per") == "and"
    assert clean_social("plain words stay") == "plain words stay"
    assert clean_social("@only") == ""


def test_read_f1_report(tmp_path):
    path = tmp_path / "f1.tsv"
    path.write_text("# comment\nyor\t0.91\nibo\t0.5\n\n", encoding="utf-8")
    assert read_f1_report(path) == {"yor": 0.91, "ibo": 0.5}

    bad = tmp_path / "bad.tsv"
    bad.write_text("yor\tnot-a-number\n", encoding="utf-8")
    with pytest.raises(ParseError):
        read_f1_report(bad)

    shape = tmp_path / "shape.tsv"
    shape.write_text("yor 0.9\n", encoding="utf-8")
    with pytest.raises(ParseError):
        read_f1_report(shape)

    with pytest.raises(IoError):
        read_f1_report(tmp_path / "nope.tsv")


# --- field escaping and scalar formatting ---

def test_esc_unesc_examples():
    assert esc("a\tb\nc\rd\\e") == "a\\tb\\nc\\rd\\\\e"
    assert unesc("a\\tb\\nc\\rd\\\\e") == "a\tb\nc\rd\\e"
    with pytest.raises(ValueError):
        unesc("bad \\x")
    with pytest.raises(ValueError):
        unesc("dangling \\")


@given(tricky_text)
@settings(max_examples=100, deadline=None)
def test_esc_round_trips_and_is_single_line(text):
    escaped = esc(text)
    assert "\n" not in escaped and "\t" not in escaped and "\r" not in escaped
    assert unesc(escaped) == text


def test_fmt_scalar_types():
    assert fmt_scalar(True) == "1"
    assert fmt_scalar(False) == "0"
    assert fmt_scalar(3) == "3"
    assert fmt_scalar(2.5) == "2.5"
    assert fmt_scalar(1.0) == "1.0"


def test_parse_scalar_round_trip():
    assert parse_scalar("1", bool, "s") is True
    assert parse_scalar("0", bool, "s") is False
    assert parse_scalar("42", int, "s") == 42
    assert parse_scalar("2.5", float, "s") == 2.5
    with pytest.raises(CorruptTable):
        parse_scalar("x", int, "s")
    with pytest.raises(CorruptTable):
        parse_scalar("2", bool, "s")


@given(st.floats(allow_nan=False, allow_infinity=False))
@settings(max_examples=100, deadline=None)
def test_float_repr_round_trips_exactly(value):
    assert parse_scalar(fmt_scalar(value), float, "s") == value
