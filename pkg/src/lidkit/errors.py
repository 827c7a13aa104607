"""Exception types shared across the toolkit."""


class LidError(Exception):
    """Base class for all toolkit errors."""


# --- registry ---

class MalformedTag(LidError):
    """Language tag is not three alphabetic characters."""


class UnknownLanguage(LidError):
    """Language code is not present in the registry / model label set."""


class DuplicateCode(LidError):
    """Registry file declares the same code twice."""


class ParseError(LidError):
    """A data file could not be parsed; message carries the line number."""


# --- text / tokenization ---

class NoScriptContent(LidError):
    """No scalar of the input falls in any known script range."""


class EmptyCorpus(LidError):
    """A training corpus contained no usable text."""


class EmptyInput(LidError):
    """Operation requires nonempty input text."""


# --- classifiers ---

class EmptyClass(LidError):
    """A declared language ended up with zero usable training samples."""

    def __init__(self, code: str):
        super().__init__(f"language {code!r} has no usable training samples")
        self.code = code


class BadParams(LidError):
    """Training/scoring parameters are out of range or inconsistent."""


# --- evaluation ---

class UnknownGoldLabel(LidError):
    """A gold label in the evaluation set is outside the model's label set."""


class EmptyGroup(LidError):
    """Group error analysis was given an empty group."""


# --- serialization ---

class BadMagic(LidError):
    """File does not start with the model-bundle magic tag."""


class UnsupportedVersion(LidError):
    """Bundle format version is newer than this build understands."""


class CorruptTable(LidError):
    """A bundle section failed validation; message names the section."""

    def __init__(self, section: str, detail: str = ""):
        msg = f"corrupt bundle section [{section}]"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)
        self.section = section


class IoError(LidError):
    """Underlying file I/O failed."""
