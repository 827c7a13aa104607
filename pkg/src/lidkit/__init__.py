"""Trainable language identification: n-gram classifiers, metrics, CLI."""

from .bpe import (
    END_OF_WORD,
    END_OF_WORD_DISPLAY,
    BpeModel,
    bpe_decode,
    bpe_encode,
    bpe_train,
    display_token,
)
from .classifiers import (
    METHODS,
    HeliModel,
    LanguageModel,
    LigaModel,
    MarkovModel,
    NaiveBayesModel,
    Prediction,
    RankDistanceModel,
    VarByteModel,
    identify,
    rank_predictions,
    train,
)
from .corpusio import clean_social, read_corpus, read_f1_report, write_corpus
from .errors import (
    BadMagic,
    BadParams,
    CorruptTable,
    DuplicateCode,
    EmptyClass,
    EmptyCorpus,
    EmptyGroup,
    EmptyInput,
    IoError,
    LidError,
    MalformedTag,
    NoScriptContent,
    ParseError,
    UnknownGoldLabel,
    UnknownLanguage,
    UnsupportedVersion,
)
from .evaluation import (
    HIST_BUCKETS,
    ClassMetrics,
    ComparisonTable,
    ConfusionMatrix,
    EvalReport,
    GroupErrorReport,
    GroupLanguageRow,
    SplitSpec,
    compare,
    evaluate,
    group_errors,
    render_comparison,
    render_eval_report,
    render_group_report,
    report_from_pairs,
    split_corpus,
)
from .profiles import (
    GramUnit,
    NGramCounts,
    RankProfile,
    RelFreqTable,
    build_rank_profile,
    extract_ngrams,
    relfreq,
)
from .prng import SplitMix64, fisher_yates, fnv1a64
from .registry import (
    BUILTIN_GROUPS,
    Family,
    LanguageTag,
    Registry,
    Script,
    build_registry,
    check_code,
    load_default_registry,
    load_groups,
    load_registry,
)
from .serialization import bundle_bytes, load_bundle, parse_bundle, save_bundle
from .textnorm import (
    Form,
    NormalizedText,
    ScriptProfile,
    TokenStream,
    Unit,
    collapse_whitespace,
    detect_script,
    normalize,
    tokenize_chars,
    tokenize_words,
)
from .tokenizer import TokenizerSpec, fit_tokenizer

__version__ = "0.1.0"

__all__ = [
    "BUILTIN_GROUPS",
    "BadMagic",
    "BadParams",
    "BpeModel",
    "ClassMetrics",
    "ComparisonTable",
    "ConfusionMatrix",
    "CorruptTable",
    "DuplicateCode",
    "EmptyClass",
    "EmptyCorpus",
    "EmptyGroup",
    "EmptyInput",
    "END_OF_WORD",
    "END_OF_WORD_DISPLAY",
    "EvalReport",
    "Family",
    "Form",
    "GramUnit",
    "GroupErrorReport",
    "GroupLanguageRow",
    "HIST_BUCKETS",
    "HeliModel",
    "IoError",
    "LanguageModel",
    "LanguageTag",
    "LidError",
    "LigaModel",
    "METHODS",
    "MalformedTag",
    "MarkovModel",
    "NGramCounts",
    "NaiveBayesModel",
    "NoScriptContent",
    "NormalizedText",
    "ParseError",
    "Prediction",
    "RankDistanceModel",
    "RankProfile",
    "Registry",
    "RelFreqTable",
    "Script",
    "ScriptProfile",
    "SplitMix64",
    "SplitSpec",
    "TokenStream",
    "TokenizerSpec",
    "UnknownGoldLabel",
    "UnknownLanguage",
    "UnsupportedVersion",
    "VarByteModel",
    "bpe_decode",
    "bpe_encode",
    "bpe_train",
    "build_rank_profile",
    "build_registry",
    "bundle_bytes",
    "check_code",
    "clean_social",
    "collapse_whitespace",
    "compare",
    "detect_script",
    "display_token",
    "evaluate",
    "extract_ngrams",
    "fisher_yates",
    "fit_tokenizer",
    "fnv1a64",
    "group_errors",
    "identify",
    "load_bundle",
    "load_default_registry",
    "load_groups",
    "load_registry",
    "normalize",
    "parse_bundle",
    "rank_predictions",
    "read_corpus",
    "read_f1_report",
    "relfreq",
    "render_comparison",
    "render_eval_report",
    "render_group_report",
    "report_from_pairs",
    "save_bundle",
    "split_corpus",
    "tokenize_chars",
    "tokenize_words",
    "train",
    "write_corpus",
]
