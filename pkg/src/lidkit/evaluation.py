"""Corpus splitting, metrics, grouped error analysis, and tool comparison."""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .classifiers import LanguageModel, identify
from .errors import BadParams, EmptyGroup, UnknownGoldLabel
from .prng import SplitMix64, fisher_yates, fnv1a64


@dataclass(frozen=True)
class SplitSpec:
    """Per-language split sizes with an inclusion floor."""

    train_n: int = 5000
    dev_n: int = 50
    test_n: int = 100
    min_total: int = 2000
    seed: int = 1

    def __post_init__(self) -> None:
        if min(self.train_n, self.dev_n, self.test_n, self.min_total) <= 0:
            raise BadParams("split sizes must all be positive")
        if self.dev_n + self.test_n > self.min_total:
            raise BadParams("dev_n + test_n must not exceed min_total")


def split_corpus(
    corpus: Sequence[tuple[str, str]], spec: SplitSpec
) -> tuple[list[tuple[str, str]], list[tuple[str, str]], list[tuple[str, str]], list[str]]:
    """Deterministic per-language train/dev/test split.

    Languages below ``min_total`` sentences are excluded entirely. For the
    rest, a per-language Fisher-Yates shuffle (splitmix64 seeded with
    ``spec.seed XOR fnv1a64(code)``) assigns ``dev_n`` sentences, then
    ``test_n``, then ``min(train_n, remaining)`` to train.
    """
    by_code: dict[str, list[tuple[str, str]]] = {}
    for code, text in corpus:
        by_code.setdefault(code, []).append((code, text))
    train: list[tuple[str, str]] = []
    dev: list[tuple[str, str]] = []
    test: list[tuple[str, str]] = []
    excluded: list[str] = []
    for code in sorted(by_code):
        rows = by_code[code]
        if len(rows) < spec.min_total:
            excluded.append(code)
            continue
        rng = SplitMix64(spec.seed ^ fnv1a64(code))
        fisher_yates(rows, rng)
        dev.extend(rows[: spec.dev_n])
        test.extend(rows[spec.dev_n : spec.dev_n + spec.test_n])
        rest = rows[spec.dev_n + spec.test_n :]
        train.extend(rest[: spec.train_n])
    return train, dev, test, excluded


@dataclass(frozen=True)
class ClassMetrics:
    precision: float
    recall: float
    f1: float
    support: int


@dataclass(frozen=True)
class ConfusionMatrix:
    labels: tuple[str, ...]
    cells: Mapping[str, Mapping[str, int]]  # gold -> pred -> count

    def count(self, gold: str, pred: str) -> int:
        return self.cells.get(gold, {}).get(pred, 0)

    def row_support(self, gold: str) -> int:
        return sum(self.cells.get(gold, {}).values())

    def to_csv(self) -> str:
        lines = ["," + ",".join(self.labels)]
        for gold in self.labels:
            row = [str(self.count(gold, pred)) for pred in self.labels]
            lines.append(gold + "," + ",".join(row))
        return "\n".join(lines) + "\n"


HIST_BUCKETS = ("100", "95-99", "90-95", "<90")


@dataclass(frozen=True)
class EvalReport:
    accuracy: float
    macro_f1: float
    per_class: Mapping[str, ClassMetrics]
    confusion: ConfusionMatrix
    f1_histogram: Mapping[str, int]
    n_samples: int


def _f1_bucket(f1: float) -> str:
    # Buckets are =100, [95,100), [90,95), <90 on the percent scale; the
    # boundary value 95 belongs to the middle bucket.
    if f1 == 1.0:
        return "100"
    if f1 >= 0.95:
        return "95-99"
    if f1 >= 0.90:
        return "90-95"
    return "<90"


def report_from_pairs(
    pairs: Sequence[tuple[str, str]],
    labels: Iterable[str] | None = None,
    macro_over_all_labels: bool = False,
) -> EvalReport:
    """Build the full report from (gold, predicted) rows.

    Macro-F1 averages over classes present in the gold labels unless
    ``macro_over_all_labels`` widens it to every known label.
    """
    if not pairs:
        raise BadParams("no prediction pairs to evaluate")
    label_set = {g for g, _ in pairs} | {p for _, p in pairs} | set(labels or ())
    ordered_labels = tuple(sorted(label_set))
    cells: dict[str, dict[str, int]] = {}
    for gold, pred in pairs:
        row = cells.setdefault(gold, {})
        row[pred] = row.get(pred, 0) + 1
    confusion = ConfusionMatrix(labels=ordered_labels, cells=cells)
    gold_present = {g for g, _ in pairs}
    scored = ordered_labels if macro_over_all_labels else tuple(sorted(gold_present))
    per_class: dict[str, ClassMetrics] = {}
    for code in scored:
        tp = confusion.count(code, code)
        support = confusion.row_support(code)
        predicted = sum(confusion.count(g, code) for g in ordered_labels)
        precision = tp / predicted if predicted else 0.0
        recall = tp / support if support else 0.0
        f1 = (
            2 * precision * recall / (precision + recall)
            if precision + recall > 0
            else 0.0
        )
        per_class[code] = ClassMetrics(precision, recall, f1, support)
    correct = sum(1 for gold, pred in pairs if gold == pred)
    accuracy = correct / len(pairs)
    macro_f1 = sum(m.f1 for m in per_class.values()) / len(per_class)
    histogram = {bucket: 0 for bucket in HIST_BUCKETS}
    for metrics in per_class.values():
        histogram[_f1_bucket(metrics.f1)] += 1
    return EvalReport(
        accuracy=accuracy,
        macro_f1=macro_f1,
        per_class=per_class,
        confusion=confusion,
        f1_histogram=histogram,
        n_samples=len(pairs),
    )


def evaluate(
    model: LanguageModel,
    labeled: Sequence[tuple[str, str]],
    macro_over_all_labels: bool = False,
) -> EvalReport:
    """Run top-1 identification over a labeled set and score it."""
    known = set(model.labels)
    for gold, _ in labeled:
        if gold not in known:
            raise UnknownGoldLabel(f"gold label {gold!r} is outside the model's label set")
    pairs = [
        (gold, identify(model, text, top_k=1)[0].code) for gold, text in labeled
    ]
    return report_from_pairs(
        pairs, labels=model.labels, macro_over_all_labels=macro_over_all_labels
    )


@dataclass(frozen=True)
class GroupLanguageRow:
    code: str
    correct: float
    within: float
    outside: float
    support: int


@dataclass(frozen=True)
class GroupErrorReport:
    name: str
    rows: tuple[GroupLanguageRow, ...]
    within_error_share: float | None  # None when the group made no errors


def group_errors(
    report: EvalReport, group: Iterable[str], name: str = "group"
) -> GroupErrorReport:
    """Split each group member's confusion row into correct/within/outside.

    ``within_error_share`` aggregates the errors of all members: the share
    confused with other group members rather than with outside languages.
    """
    members = sorted(set(group))
    if not members:
        raise EmptyGroup(f"group {name!r} is empty")
    confusion = report.confusion
    known = set(confusion.labels)
    rows: list[GroupLanguageRow] = []
    within_total = 0
    outside_total = 0
    member_set = set(members)
    for code in members:
        if code not in known:
            warnings.warn(f"group member {code!r} absent from report; skipped")
            continue
        support = confusion.row_support(code)
        if support == 0:
            warnings.warn(f"group member {code!r} has no gold samples; skipped")
            continue
        correct = confusion.count(code, code)
        within = sum(
            confusion.count(code, other) for other in member_set if other != code
        )
        outside = support - correct - within
        within_total += within
        outside_total += outside
        rows.append(
            GroupLanguageRow(
                code=code,
                correct=correct / support,
                within=within / support,
                outside=outside / support,
                support=support,
            )
        )
    errors = within_total + outside_total
    share = within_total / errors if errors else None
    return GroupErrorReport(name=name, rows=tuple(rows), within_error_share=share)


@dataclass(frozen=True)
class ComparisonTable:
    tools: tuple[str, ...]
    languages: tuple[str, ...]
    cells: Mapping[str, Mapping[str, float]]  # tool -> code -> F1
    shared: tuple[str, ...]  # languages supported by every tool
    wins: Mapping[str, int]
    ties: int

    def cell(self, tool: str, code: str) -> float | None:
        return self.cells[tool].get(code)


def compare(reports: Mapping[str, Mapping[str, float]]) -> ComparisonTable:
    """Join per-tool F1 maps; unsupported pairs stay None (rendered as dash).

    Win counts run only over languages supported by every tool; an exact
    shared maximum counts as a tie.
    """
    if len(reports) < 2:
        raise BadParams("compare needs at least 2 report sources")
    tools = tuple(sorted(reports))
    languages = tuple(sorted({code for scores in reports.values() for code in scores}))
    shared = tuple(
        code
        for code in languages
        if all(code in reports[tool] for tool in tools)
    )
    wins = {tool: 0 for tool in tools}
    ties = 0
    for code in shared:
        best = max(reports[tool][code] for tool in tools)
        winners = [tool for tool in tools if reports[tool][code] == best]
        if len(winners) == 1:
            wins[winners[0]] += 1
        else:
            ties += 1
    cells = {tool: dict(reports[tool]) for tool in tools}
    return ComparisonTable(
        tools=tools,
        languages=languages,
        cells=cells,
        shared=shared,
        wins=wins,
        ties=ties,
    )


def render_eval_report(report: EvalReport) -> str:
    """Versioned, key-sorted text rendering of an EvalReport."""
    lines = [
        "lidkit-eval-report 1",
        f"accuracy\t{report.accuracy:.12f}",
        f"macro_f1\t{report.macro_f1:.12f}",
        f"n_samples\t{report.n_samples}",
    ]
    for bucket in HIST_BUCKETS:
        lines.append(f"f1_bucket\t{bucket}\t{report.f1_histogram[bucket]}")
    for code in sorted(report.per_class):
        m = report.per_class[code]
        lines.append(
            f"class\t{code}\t{m.precision:.12f}\t{m.recall:.12f}"
            f"\t{m.f1:.12f}\t{m.support}"
        )
    return "\n".join(lines) + "\n"


def render_group_report(report: GroupErrorReport) -> str:
    share = (
        "-" if report.within_error_share is None else f"{report.within_error_share:.12f}"
    )
    lines = [
        "lidkit-group-report 1",
        f"group\t{report.name}",
        f"within_error_share\t{share}",
    ]
    for row in report.rows:
        lines.append(
            f"lang\t{row.code}\t{row.correct:.12f}\t{row.within:.12f}"
            f"\t{row.outside:.12f}\t{row.support}"
        )
    return "\n".join(lines) + "\n"


DASH = "-"


def render_comparison(table: ComparisonTable) -> str:
    """TSV rendering with a dash for unsupported (tool, language) pairs."""
    lines = ["language\t" + "\t".join(table.tools)]
    for code in table.languages:
        row = [code]
        for tool in table.tools:
            value = table.cell(tool, code)
            row.append(DASH if value is None else f"{value:.6f}")
        lines.append("\t".join(row))
    lines.append(
        "# wins over "
        + f"{len(table.shared)} shared languages: "
        + ", ".join(f"{tool}={table.wins[tool]}" for tool in table.tools)
        + f", ties={table.ties}"
    )
    return "\n".join(lines) + "\n"
