from __future__ import annotations

import gzip

import pytest

from lidkit import (
    BadMagic,
    CorruptTable,
    Form,
    IoError,
    TokenizerSpec,
    Unit,
    UnsupportedVersion,
    bundle_bytes,
    fit_tokenizer,
    identify,
    load_bundle,
    parse_bundle,
    save_bundle,
    train,
)

METHOD_NAMES = ("rank", "heli", "liga", "nb", "markov", "varbyte")


def save_load(model, tmp_path, name="m.lid", compress=False):
    path = tmp_path / name
    save_bundle(model, path, compress=compress)
    return load_bundle(path), path


@pytest.mark.parametrize("method", METHOD_NAMES)
def test_round_trip_is_byte_identical(method, small_models, tmp_path):
    model = small_models[method]
    loaded, path = save_load(model, tmp_path, f"{method}.lid")
    assert bundle_bytes(loaded) == bundle_bytes(model)
    again, _ = save_load(loaded, tmp_path, f"{method}2.lid")
    assert bundle_bytes(again) == bundle_bytes(model)


@pytest.mark.parametrize("method", METHOD_NAMES)
def test_loaded_model_identifies_identically(method, small_models, tmp_path):
    model = small_models[method]
    loaded, _ = save_load(model, tmp_path, f"{method}.lid")
    for text in ("aba ab aab", "xyz zyx", "ab xy ab xy", "aaaa bbbb xxxx"):
        assert identify(loaded, text) == identify(model, text)


def test_word_and_bpe_tokenizers_round_trip(two_lang_corpus, tmp_path):
    texts = [t for _, t in two_lang_corpus]
    word_spec = TokenizerSpec(unit=Unit.WORD, form=Form.DECOMPOSED, case_fold=False)
    bpe_spec = fit_tokenizer(Unit.BPE, texts, bpe_vocab=20)
    for name, spec in (("word", word_spec), ("bpe", bpe_spec)):
        model = train("heli", two_lang_corpus, tokenizer=spec)
        loaded, _ = save_load(model, tmp_path, f"{name}.lid")
        assert bundle_bytes(loaded) == bundle_bytes(model)
        assert loaded.tokenizer.unit is spec.unit
        assert loaded.tokenizer.form is spec.form
        assert loaded.tokenizer.case_fold == spec.case_fold
        if spec.bpe is not None:
            assert loaded.tokenizer.bpe.merges == spec.bpe.merges
            assert loaded.tokenizer.bpe.end_of_word_marker == spec.bpe.end_of_word_marker
        assert identify(loaded, "aba xyz ab") == identify(model, "aba xyz ab")


def test_gzip_round_trip(small_models, tmp_path):
    model = small_models["nb"]
    plain_path = tmp_path / "plain.lid"
    save_bundle(model, plain_path)
    loaded, gz_path = save_load(model, tmp_path, "model.lid.gz", compress=True)
    assert gz_path.read_bytes()[:2] == b"\x1f\x8b"
    assert bundle_bytes(loaded) == bundle_bytes(model)
    # compression is reproducible byte for byte (fixed mtime, no filename)
    again = tmp_path / "model2.lid.gz"
    save_bundle(model, again, compress=True)
    assert again.read_bytes() == gz_path.read_bytes()
    assert gzip.decompress(gz_path.read_bytes()) == plain_path.read_bytes()


def test_bad_magic_and_version(small_models):
    with pytest.raises(BadMagic):
        parse_bundle(b"NOTMAGIC 1\nend\n")
    data = bundle_bytes(small_models["nb"]).replace(b"AFLIDMB1 1", b"AFLIDMB1 999", 1)
    with pytest.raises(UnsupportedVersion):
        parse_bundle(data)


def test_truncation_and_trailing_data_rejected(small_models):
    data = bundle_bytes(small_models["markov"])
    lines = data.decode().splitlines()
    truncated = ("\n".join(lines[:-3]) + "\n").encode()
    with pytest.raises(CorruptTable):
        parse_bundle(truncated)
    trailing = data + b"extra\n"
    with pytest.raises(CorruptTable):
        parse_bundle(trailing)


def test_tampered_fields_rejected(small_models):
    data = bundle_bytes(small_models["nb"])
    with pytest.raises(CorruptTable):
        parse_bundle(data.replace(b"method\tnb", b"method\tnosuch", 1))
    with pytest.raises(CorruptTable):
        parse_bundle(data.replace(b"param\talpha", b"param\tbogus", 1))
    with pytest.raises(CorruptTable):
        parse_bundle(data.replace(b"tokenizer\tchar", b"tokenizer\tnope", 1))
    with pytest.raises(CorruptTable):
        parse_bundle(b"\xff\xfe AFLIDMB1 1\n")


def test_unsorted_labels_rejected(small_models):
    data = bundle_bytes(small_models["liga"])
    swapped = data.replace(b"label\taaa\nlabel\tzzz", b"label\tzzz\nlabel\taaa", 1)
    assert swapped != data
    with pytest.raises(CorruptTable):
        parse_bundle(swapped)


def test_missing_param_rejected(small_models):
    data = bundle_bytes(small_models["markov"])
    # drop the only param line but keep the declared count
    broken = data.replace(b"params\t1\nparam\talpha\t1.0\n", b"params\t1\n", 1)
    assert broken != data
    with pytest.raises(CorruptTable):
        parse_bundle(broken)


def test_unwritable_path_raises_io_error(small_models, tmp_path):
    with pytest.raises(IoError):
        save_bundle(small_models["nb"], tmp_path / "missing" / "out.lid")
    with pytest.raises(IoError):
        load_bundle(tmp_path / "nonexistent.lid")


def test_corrupt_table_names_section(small_models):
    data = bundle_bytes(small_models["nb"])
    lines = data.decode().splitlines()
    truncated = ("\n".join(lines[:4]) + "\n").encode()
    with pytest.raises(CorruptTable) as err:
        parse_bundle(truncated)
    assert err.value.section
