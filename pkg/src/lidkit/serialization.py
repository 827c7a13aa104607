"""Versioned single-file model bundle with canonical bytes.

Layout (UTF-8, ``\\n`` line endings, tab-separated fields):

    AFLIDMB1 1
    method<TAB>{rank|heli|liga|nb|markov|varbyte}
    tokenizer<TAB>unit<TAB>form<TAB>case_fold(0|1)
    [bpe<TAB>target_vocab<TAB>marker<TAB>n_merges, then merge lines]
    labels<TAB>k, then one label line per code (sorted)
    params<TAB>k, then param<TAB>key<TAB>value (key-sorted)
    method payload sections (counts, key-sorted)
    end

Tables store integer counts, never derived frequencies; every derived
number is recomputed on load through the same code path training uses, so
a round trip changes nothing. Saving the same model twice yields identical
bytes. Optional gzip compression (fixed mtime) sits outside the
canonical-bytes guarantee.
"""

from __future__ import annotations

import gzip
import io
from typing import Iterable

from .bpe import BpeModel
from .classifiers import METHODS, LanguageModel
from .encoding import esc, fmt_scalar, parse_scalar, unesc
from .errors import BadMagic, CorruptTable, IoError, UnsupportedVersion
from .textnorm import Form, Unit
from .tokenizer import TokenizerSpec

MAGIC = "AFLIDMB1"
FORMAT_VERSION = 1


class Reader:
    """Sequential line reader with section-aware error reporting."""

    def __init__(self, lines: list[str]):
        self._lines = lines
        self._pos = 0

    def next_line(self, section: str) -> str:
        if self._pos >= len(self._lines):
            raise CorruptTable(section, "file truncated")
        line = self._lines[self._pos]
        self._pos += 1
        return line

    def take(self, tag: str, nfields: int, section: str) -> list[str]:
        fields = self.next_line(section).split("\t")
        if fields[0] != tag or len(fields) != nfields:
            raise CorruptTable(
                section, f"expected a {nfields}-field {tag!r} line, got {fields[0]!r}"
            )
        return fields

    def check(self, condition: bool, section: str, detail: str) -> None:
        if not condition:
            raise CorruptTable(section, detail)

    def to_int(self, text: str, section: str) -> int:
        try:
            return int(text)
        except ValueError:
            raise CorruptTable(section, f"bad integer {text!r}") from None

    def to_bytes(self, text: str, section: str) -> bytes:
        try:
            return bytes.fromhex(text)
        except ValueError:
            raise CorruptTable(section, f"bad hex gram {text!r}") from None

    def at_end(self) -> bool:
        return self._pos >= len(self._lines)


def bundle_lines(model: LanguageModel) -> list[str]:
    tok = model.tokenizer
    lines = [f"{MAGIC} {FORMAT_VERSION}"]
    lines.append(f"method\t{model.method}")
    lines.append(
        f"tokenizer\t{tok.unit.value}\t{tok.form.value}\t{1 if tok.case_fold else 0}"
    )
    if tok.unit is Unit.BPE:
        bpe = tok.bpe
        if bpe is None:
            raise IoError("cannot save a BPE tokenizer without its merge table")
        lines.append(
            f"bpe\t{bpe.target_vocab_size}\t{esc(bpe.end_of_word_marker)}\t{len(bpe.merges)}"
        )
        for left, right in bpe.merges:
            lines.append(f"merge\t{esc(left)}\t{esc(right)}")
    lines.append(f"labels\t{len(model.labels)}")
    for code in model.labels:
        lines.append(f"label\t{code}")
    params = model.params()
    lines.append(f"params\t{len(params)}")
    for key in sorted(params):
        lines.append(f"param\t{key}\t{fmt_scalar(params[key])}")
    lines.extend(model.payload_lines())
    lines.append("end")
    return lines


def bundle_bytes(model: LanguageModel) -> bytes:
    return ("\n".join(bundle_lines(model)) + "\n").encode("utf-8")


def save_bundle(model: LanguageModel, path, compress: bool = False) -> None:
    data = bundle_bytes(model)
    try:
        if compress:
            with open(path, "wb") as fh:
                with gzip.GzipFile(
                    filename="", mode="wb", fileobj=fh, mtime=0
                ) as gz:
                    gz.write(data)
        else:
            with open(path, "wb") as fh:
                fh.write(data)
    except OSError as e:
        raise IoError(f"cannot write bundle to {path}: {e}") from e


def _rebuild_vocab(merges: Iterable[tuple[str, str]], marker: str) -> frozenset[str]:
    # Base symbols are not stored; the vocab invariant only needs the
    # merge products plus every symbol mentioned by a merge.
    vocab: set[str] = {marker}
    for left, right in merges:
        vocab.add(left)
        vocab.add(right)
        vocab.add(left + right)
    return frozenset(vocab)


def parse_bundle(data: bytes) -> LanguageModel:
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as e:
        raise CorruptTable("header", f"not UTF-8: {e}") from None
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    reader = Reader(lines)
    header = reader.next_line("header")
    parts = header.split(" ")
    if len(parts) != 2 or parts[0] != MAGIC:
        raise BadMagic(f"not a model bundle (header {header!r})")
    version = reader.to_int(parts[1], "header")
    if version > FORMAT_VERSION:
        raise UnsupportedVersion(f"bundle format version {version} is too new")
    _, method = reader.take("method", 2, "method")
    cls = METHODS.get(method)
    if cls is None:
        raise CorruptTable("method", f"unknown method {method!r}")
    _, unit_raw, form_raw, fold_raw = reader.take("tokenizer", 4, "tokenizer")
    try:
        unit = Unit(unit_raw)
        form = Form(form_raw)
    except ValueError as e:
        raise CorruptTable("tokenizer", str(e)) from None
    reader.check(fold_raw in ("0", "1"), "tokenizer", "case_fold must be 0 or 1")
    bpe_model = None
    if unit is Unit.BPE:
        _, vocab_raw, marker_raw, n_merges = reader.take("bpe", 4, "bpe")
        marker = unesc(marker_raw)
        merges: list[tuple[str, str]] = []
        for _ in range(reader.to_int(n_merges, "bpe")):
            _, left, right = reader.take("merge", 3, "bpe")
            merges.append((unesc(left), unesc(right)))
        bpe_model = BpeModel(
            merges=tuple(merges),
            vocab=_rebuild_vocab(merges, marker),
            target_vocab_size=reader.to_int(vocab_raw, "bpe"),
            end_of_word_marker=marker,
        )
    tokenizer = TokenizerSpec(
        unit=unit, form=form, case_fold=fold_raw == "1", bpe=bpe_model
    )
    _, n_labels = reader.take("labels", 2, "labels")
    labels: list[str] = []
    for _ in range(reader.to_int(n_labels, "labels")):
        _, code = reader.take("label", 2, "labels")
        labels.append(code)
    reader.check(labels == sorted(set(labels)), "labels", "labels must be sorted and unique")
    reader.check(len(labels) > 0, "labels", "bundle has no languages")
    _, n_params = reader.take("params", 2, "params")
    params: dict = {}
    for _ in range(reader.to_int(n_params, "params")):
        _, key, value = reader.take("param", 3, "params")
        kind = cls.PARAM_TYPES.get(key)
        reader.check(kind is not None, "params", f"unknown param {key!r} for {method}")
        params[key] = parse_scalar(value, kind, "params")
    reader.check(
        sorted(params) == sorted(cls.PARAM_TYPES),
        "params",
        f"expected params {sorted(cls.PARAM_TYPES)}, got {sorted(params)}",
    )
    model = cls.parse_payload(reader, tuple(labels), tokenizer, params)
    end = reader.next_line("end")
    reader.check(end == "end", "end", "missing end marker")
    reader.check(reader.at_end(), "end", "trailing data after end marker")
    return model


def load_bundle(path) -> LanguageModel:
    try:
        with open(path, "rb") as fh:
            head = fh.read(2)
            fh.seek(0)
            if head == b"\x1f\x8b":
                with gzip.GzipFile(fileobj=fh) as gz:
                    data = gz.read()
            else:
                data = fh.read()
    except OSError as e:
        raise IoError(f"cannot read bundle from {path}: {e}") from e
    return parse_bundle(data)
