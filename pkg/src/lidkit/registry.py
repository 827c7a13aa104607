"""Closed set of identifiable languages with script and family metadata."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from importlib import resources
from typing import Iterable, Mapping

from .errors import DuplicateCode, MalformedTag, ParseError, UnknownLanguage


class Script(Enum):
    Latin = "Latin"
    Ethiopic = "Ethiopic"
    Arabic = "Arabic"
    Vai = "Vai"
    Coptic = "Coptic"


class Family(Enum):
    AfroAsiatic = "AfroAsiatic"
    Austronesian = "Austronesian"
    Creole = "Creole"
    IndoEuropean = "IndoEuropean"
    KhoeKwadi = "KhoeKwadi"
    NigerCongo = "NigerCongo"
    NiloSaharan = "NiloSaharan"
    Other = "Other"


_CODE_RE = re.compile(r"^[a-z]{3}$")

# Built-in evaluation groups. These ship with every registry so grouped
# error reports work out of the box; they are injected verbatim even when
# the loaded registry file covers only a subset of their members.
BUILTIN_GROUPS: Mapping[str, frozenset[str]] = {
    "nonlatin": frozenset(
        {"amh", "bst", "mdy", "sgw", "tir", "xan", "fub", "fuv", "rif", "vai", "cop"}
    ),
    "creole": frozenset(
        {"kri", "pcm", "wes", "crs", "mfe", "ktu", "sag", "kea", "pov"}
    ),
    "southafrica": frozenset(
        {"afr", "nbl", "nso", "sot", "ssw", "tsn", "tso", "ven", "xho", "zul"}
    ),
}


def check_code(code: str) -> str:
    """Case-fold and validate a three-letter language code."""
    folded = code.lower()
    if not _CODE_RE.match(folded):
        raise MalformedTag(f"language code must be 3 alphabetic characters, got {code!r}")
    return folded


@dataclass(frozen=True)
class LanguageTag:
    code: str
    name: str
    family: Family
    scripts: frozenset[Script]
    uses_diacritics: bool

    def __post_init__(self) -> None:
        if not _CODE_RE.match(self.code):
            raise MalformedTag(f"bad code {self.code!r}")
        if not self.scripts:
            raise ValueError(f"language {self.code!r} declares no script")


@dataclass(frozen=True)
class Registry:
    entries: Mapping[str, LanguageTag]
    groups: Mapping[str, frozenset[str]]

    def parse_tag(self, raw: str) -> LanguageTag:
        code = check_code(raw)
        try:
            return self.entries[code]
        except KeyError:
            raise UnknownLanguage(f"language {code!r} is not in the registry") from None

    def __contains__(self, code: str) -> bool:
        return code in self.entries


def build_registry(
    tags: Iterable[LanguageTag],
    groups: Mapping[str, Iterable[str]] | None = None,
) -> Registry:
    """Assemble a registry, injecting built-in groups when absent.

    User-supplied groups must only reference registered codes; the built-in
    groups are exempt so small registries still expose them.
    """
    entries: dict[str, LanguageTag] = {}
    for tag in tags:
        if tag.code in entries:
            raise DuplicateCode(f"duplicate language code {tag.code!r}")
        entries[tag.code] = tag
    merged: dict[str, frozenset[str]] = {}
    for name, codes in (groups or {}).items():
        codeset = frozenset(codes)
        for code in sorted(codeset):
            if code not in entries:
                raise UnknownLanguage(
                    f"group {name!r} references unregistered code {code!r}"
                )
        merged[name] = codeset
    for name, codeset in BUILTIN_GROUPS.items():
        merged.setdefault(name, codeset)
    return Registry(entries=dict(sorted(entries.items())), groups=merged)


def _parse_registry_line(line: str, lineno: int) -> LanguageTag:
    parts = line.split("\t")
    if len(parts) != 5:
        raise ParseError(f"line {lineno}: expected 5 tab-separated fields, got {len(parts)}")
    code_raw, name, family_raw, scripts_raw, diac_raw = parts
    if not _CODE_RE.match(code_raw):
        raise ParseError(f"line {lineno}: bad language code {code_raw!r}")
    try:
        family = Family[family_raw]
    except KeyError:
        raise ParseError(f"line {lineno}: unknown family {family_raw!r}") from None
    scripts: set[Script] = set()
    for token in scripts_raw.split(","):
        try:
            scripts.add(Script[token])
        except KeyError:
            raise ParseError(f"line {lineno}: unknown script {token!r}") from None
    if diac_raw not in ("0", "1"):
        raise ParseError(f"line {lineno}: diacritics flag must be 0 or 1, got {diac_raw!r}")
    return LanguageTag(
        code=code_raw,
        name=name,
        family=family,
        scripts=frozenset(scripts),
        uses_diacritics=diac_raw == "1",
    )


def load_registry(path, groups_path=None) -> Registry:
    """Load a registry file, optionally with a group file.

    Registry rows: ``code<TAB>name<TAB>family<TAB>scripts,comma<TAB>0|1``.
    Group rows: ``group_name<TAB>code,code,...``. Lines starting ``#`` and
    blank lines are ignored in both files.
    """
    tags: list[LanguageTag] = []
    seen: set[str] = set()
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            tag = _parse_registry_line(line, lineno)
            if tag.code in seen:
                raise DuplicateCode(f"line {lineno}: duplicate language code {tag.code!r}")
            seen.add(tag.code)
            tags.append(tag)
    groups: dict[str, list[str]] = {}
    if groups_path is not None:
        groups = load_groups(groups_path)
    return build_registry(tags, groups)


def load_groups(path) -> dict[str, list[str]]:
    """Parse a group file into name -> code list (no registry validation here)."""
    groups: dict[str, list[str]] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise ParseError(f"line {lineno}: expected name<TAB>codes, got {line!r}")
            name, codes_raw = parts
            codes = [c for c in codes_raw.split(",") if c]
            if not codes:
                raise ParseError(f"line {lineno}: group {name!r} lists no codes")
            for code in codes:
                if not _CODE_RE.match(code):
                    raise ParseError(f"line {lineno}: bad code {code!r} in group {name!r}")
            groups[name] = codes
    return groups


def load_default_registry() -> Registry:
    """Load the language table shipped with the package."""
    ref = resources.files("lidkit").joinpath("data/languages.tsv")
    with resources.as_file(ref) as path:
        return load_registry(path)
