"""Escaping and scalar formatting shared by the bundle format and corpus I/O."""

from __future__ import annotations

from .errors import CorruptTable


def esc(text: str) -> str:
    """Make a string safe for one tab-separated field on one line."""
    return (
        text.replace("\\", "\\\\")
        .replace("\t", "\\t")
        .replace("\n", "\\n")
        .replace("\r", "\\r")
    )


def unesc(text: str) -> str:
    out: list[str] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch != "\\":
            out.append(ch)
            i += 1
            continue
        if i + 1 >= len(text):
            raise ValueError("dangling escape at end of field")
        nxt = text[i + 1]
        mapped = {"\\": "\\", "t": "\t", "n": "\n", "r": "\r"}.get(nxt)
        if mapped is None:
            raise ValueError(f"bad escape \\{nxt}")
        out.append(mapped)
        i += 2
    return "".join(out)


def fmt_scalar(value) -> str:
    """Canonical text for a param value: bools as 0/1, floats via repr."""
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return repr(value)
    return esc(str(value))


def parse_scalar(text: str, kind: type, section: str):
    try:
        if kind is bool:
            if text not in ("0", "1"):
                raise ValueError(f"bool must be 0 or 1, got {text!r}")
            return text == "1"
        if kind is int:
            return int(text)
        if kind is float:
            return float(text)
        if kind is str:
            return unesc(text)
    except ValueError as e:
        raise CorruptTable(section, str(e)) from None
    raise CorruptTable(section, f"unsupported param type {kind!r}")
