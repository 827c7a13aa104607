"""Figure rendering for evaluation and comparison reports."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from .evaluation import HIST_BUCKETS, ComparisonTable, EvalReport, GroupErrorReport


def plot_f1_histogram(report: EvalReport, path) -> None:
    fig, ax = plt.subplots(figsize=(5, 3.5))
    counts = [report.f1_histogram[b] for b in HIST_BUCKETS]
    ax.bar(range(len(HIST_BUCKETS)), counts, color="#4878a8")
    ax.set_xticks(range(len(HIST_BUCKETS)))
    ax.set_xticklabels(HIST_BUCKETS)
    ax.set_xlabel("F1 bucket (%)")
    ax.set_ylabel("languages")
    ax.set_title("Per-language F1 distribution")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_confusion(report: EvalReport, path) -> None:
    labels = report.confusion.labels
    grid = [
        [report.confusion.count(gold, pred) for pred in labels] for gold in labels
    ]
    size = max(4.0, 0.3 * len(labels) + 2.0)
    fig, ax = plt.subplots(figsize=(size, size))
    im = ax.imshow(grid, cmap="Blues")
    ax.set_xticks(range(len(labels)))
    ax.set_xticklabels(labels, rotation=90, fontsize=7)
    ax.set_yticks(range(len(labels)))
    ax.set_yticklabels(labels, fontsize=7)
    ax.set_xlabel("predicted")
    ax.set_ylabel("gold")
    ax.set_title("Confusion matrix")
    fig.colorbar(im, ax=ax, fraction=0.046)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_group_errors(report: GroupErrorReport, path) -> None:
    codes = [row.code for row in report.rows]
    correct = [row.correct for row in report.rows]
    within = [row.within for row in report.rows]
    outside = [row.outside for row in report.rows]
    fig, ax = plt.subplots(figsize=(6, 0.5 * max(len(codes), 4) + 1.5))
    ax.barh(codes, correct, color="#4a8c5a", label="correct")
    ax.barh(codes, within, left=correct, color="#d0a84a", label="within group")
    left = [c + w for c, w in zip(correct, within)]
    ax.barh(codes, outside, left=left, color="#b05050", label="others")
    ax.set_xlim(0, 1)
    ax.set_xlabel("fraction of gold samples")
    title = f"Group errors: {report.name}"
    if report.within_error_share is not None:
        title += f" (within-group error share {report.within_error_share:.0%})"
    ax.set_title(title)
    ax.legend(loc="lower right", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_comparison(table: ComparisonTable, path) -> None:
    fig, ax = plt.subplots(figsize=(max(6.0, 0.5 * len(table.languages)), 4))
    width = 0.8 / len(table.tools)
    for t_idx, tool in enumerate(table.tools):
        xs = []
        ys = []
        for l_idx, code in enumerate(table.languages):
            value = table.cell(tool, code)
            if value is None:
                continue
            xs.append(l_idx + t_idx * width)
            ys.append(value)
        ax.bar(xs, ys, width=width, label=tool)
    ax.set_xticks([i + 0.4 - width / 2 for i in range(len(table.languages))])
    ax.set_xticklabels(table.languages, rotation=90, fontsize=7)
    ax.set_ylabel("F1")
    ax.set_title("Per-language F1 by tool (missing bar = unsupported)")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
