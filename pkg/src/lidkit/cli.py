"""Command-line surface: split, train, identify, evaluate, compare, inspect."""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

from .bpe import display_token
from .classifiers import METHODS, identify, train
from .corpusio import clean_social, read_corpus, read_f1_report, write_corpus
from .errors import EmptyInput, LidError
from .evaluation import (
    SplitSpec,
    compare,
    evaluate,
    group_errors,
    render_comparison,
    render_eval_report,
    render_group_report,
    split_corpus,
)
from .registry import load_default_registry, load_groups, load_registry
from .serialization import load_bundle, save_bundle
from .textnorm import Form, Unit
from .tokenizer import fit_tokenizer

MODEL_ENV_VAR = "LIDKIT_MODEL"

EXIT_OK = 0
EXIT_INPUT_ERROR = 2
EXIT_EMPTY_STRICT = 3


def _add_model_arg(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--model",
        default=os.environ.get(MODEL_ENV_VAR),
        help=f"model bundle path (default: ${MODEL_ENV_VAR})",
    )


def _load_registry(args) -> object | None:
    if getattr(args, "no_registry_check", False):
        return None
    if getattr(args, "registry", None):
        return load_registry(args.registry)
    return load_default_registry()


def cmd_split(args) -> int:
    corpus = read_corpus(args.input)
    spec = SplitSpec(
        train_n=args.train_n,
        dev_n=args.dev_n,
        test_n=args.test_n,
        min_total=args.min_total,
        seed=args.seed,
    )
    train_rows, dev_rows, test_rows, excluded = split_corpus(corpus, spec)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    write_corpus(out_dir / "train.tsv", train_rows)
    write_corpus(out_dir / "dev.tsv", dev_rows)
    write_corpus(out_dir / "test.tsv", test_rows)
    (out_dir / "excluded.txt").write_text(
        "".join(f"{code}\n" for code in excluded), encoding="utf-8"
    )
    print(
        f"split: {len(train_rows)} train, {len(dev_rows)} dev, "
        f"{len(test_rows)} test, {len(excluded)} excluded languages"
    )
    return EXIT_OK


def cmd_train(args) -> int:
    corpus = read_corpus(args.input)
    registry = _load_registry(args)
    tokenizer = fit_tokenizer(
        unit=Unit(args.tokenizer),
        texts=(text for _, text in corpus),
        form=Form(args.form),
        case_fold=not args.no_case_fold,
        bpe_vocab=args.bpe_vocab,
    )
    params: dict = {}
    if args.method == "rank":
        params = {
            "n_min": args.n_min,
            "n_max": args.n_max,
            "max_rank": args.max_rank,
            "missing_penalty": args.missing_penalty,
        }
    elif args.method == "heli":
        params = {"nmax": args.nmax, "penalty": args.penalty, "top_f": args.top_f}
    elif args.method == "nb":
        params = {
            "n_min": args.nb_n_min,
            "n_max": args.nb_n_max,
            "alpha": args.alpha,
            "uniform_priors": args.uniform_priors,
        }
    elif args.method == "markov":
        params = {"alpha": args.markov_alpha}
    elif args.method == "varbyte":
        params = {"kmax": args.varbyte_k}
    started = time.perf_counter()
    model = train(args.method, corpus, tokenizer=tokenizer, registry=registry, **params)
    elapsed = time.perf_counter() - started
    save_bundle(model, args.out, compress=args.compress)
    counts: dict[str, int] = {}
    for code, _ in corpus:
        counts[code.lower()] = counts.get(code.lower(), 0) + 1
    for code in sorted(counts):
        print(f"{code}\t{counts[code]} samples")
    print(f"trained {args.method} on {len(counts)} languages in {elapsed:.2f}s -> {args.out}")
    return EXIT_OK


def _iter_inputs(args):
    if args.text:
        yield from args.text
    if args.stdin:
        for line in sys.stdin:
            yield line.rstrip("\n")


def cmd_identify(args) -> int:
    if not args.model:
        print(f"error: no model given (set --model or ${MODEL_ENV_VAR})", file=sys.stderr)
        return EXIT_INPUT_ERROR
    model = load_bundle(args.model)
    exit_code = EXIT_OK
    for index, text in enumerate(_iter_inputs(args)):
        if args.clean_social:
            text = clean_social(text)
        try:
            preds = identify(model, text, top_k=args.top_k, tau=args.tau)
        except EmptyInput:
            if args.strict:
                print(f"error: input {index} is empty", file=sys.stderr)
                return EXIT_EMPTY_STRICT
            if args.format == "json-lines":
                print(json.dumps({"input_index": index, "warning": "empty input"}))
            else:
                print(f"# input {index}: empty input, skipped", file=sys.stderr)
            continue
        if args.format == "json-lines":
            record = {
                "input_index": index,
                "predictions": [
                    {"code": p.code, "confidence": round(p.confidence, 6)}
                    for p in preds
                ],
            }
            print(json.dumps(record))
        else:
            for rank, pred in enumerate(preds, start=1):
                print(f"{rank}\t{pred.code}\t{pred.confidence:.6f}")
    return exit_code


def cmd_evaluate(args) -> int:
    if not args.model:
        print(f"error: no model given (set --model or ${MODEL_ENV_VAR})", file=sys.stderr)
        return EXIT_INPUT_ERROR
    model = load_bundle(args.model)
    labeled = read_corpus(args.input)
    report = evaluate(model, labeled, macro_over_all_labels=args.all_labels)
    report_path = Path(args.report)
    report_path.parent.mkdir(parents=True, exist_ok=True)
    report_path.write_text(render_eval_report(report), encoding="utf-8")
    confusion_path = report_path.with_suffix(report_path.suffix + ".confusion.csv")
    confusion_path.write_text(report.confusion.to_csv(), encoding="utf-8")
    from . import plots  # deferred: pulls in matplotlib

    stem = str(report_path)
    plots.plot_f1_histogram(report, stem + ".f1_hist.png")
    plots.plot_confusion(report, stem + ".confusion.png")
    print(f"accuracy\t{report.accuracy:.6f}")
    print(f"macro_f1\t{report.macro_f1:.6f}")
    if args.groups:
        registry = load_default_registry()
        if Path(args.groups).exists():
            groups = load_groups(args.groups)
        else:
            name = args.groups
            if name not in registry.groups:
                print(f"error: unknown group {name!r}", file=sys.stderr)
                return EXIT_INPUT_ERROR
            groups = {name: sorted(registry.groups[name])}
        for name in sorted(groups):
            greport = group_errors(report, groups[name], name=name)
            gpath = stem + f".group_{name}.txt"
            Path(gpath).write_text(render_group_report(greport), encoding="utf-8")
            plots.plot_group_errors(greport, stem + f".group_{name}.png")
            share = greport.within_error_share
            share_text = "-" if share is None else f"{share:.3f}"
            print(f"group\t{name}\twithin_error_share\t{share_text}")
    return EXIT_OK


def cmd_compare(args) -> int:
    reports = {Path(p).stem: read_f1_report(p) for p in args.reports}
    table = compare(reports)
    rendered = render_comparison(table)
    out_path = Path(args.out)
    out_path.parent.mkdir(parents=True, exist_ok=True)
    out_path.write_text(rendered, encoding="utf-8")
    from . import plots  # deferred: pulls in matplotlib

    plots.plot_comparison(table, str(out_path) + ".png")
    sys.stdout.write(rendered)
    return EXIT_OK


def cmd_inspect(args) -> int:
    if not args.model:
        print(f"error: no model given (set --model or ${MODEL_ENV_VAR})", file=sys.stderr)
        return EXIT_INPUT_ERROR
    model = load_bundle(args.model)
    tok = model.tokenizer
    print(f"method\t{model.method}")
    print(f"languages\t{len(model.labels)}")
    print(f"labels\t{','.join(model.labels)}")
    print(f"tokenizer\t{tok.unit.value}\t{tok.form.value}\tcase_fold={int(tok.case_fold)}")
    if tok.bpe is not None:
        print(f"bpe_merges\t{len(tok.bpe.merges)}")
        head = ", ".join(
            f"({display_token(a)},{display_token(b)})" for a, b in tok.bpe.merges[:5]
        )
        print(f"bpe_head\t{head}")
    for key, value in sorted(model.params().items()):
        print(f"param\t{key}\t{value}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lidkit",
        description="Train and run n-gram language identification models.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_split = sub.add_parser("split", help="per-language train/dev/test split")
    p_split.add_argument("--input", required=True)
    p_split.add_argument("--out-dir", required=True)
    p_split.add_argument("--train-n", type=int, default=5000, dest="train_n")
    p_split.add_argument("--dev-n", type=int, default=50, dest="dev_n")
    p_split.add_argument("--test-n", type=int, default=100, dest="test_n")
    p_split.add_argument("--min-total", type=int, default=2000, dest="min_total")
    p_split.add_argument("--seed", type=int, default=1)
    p_split.set_defaults(func=cmd_split)

    p_train = sub.add_parser("train", help="train a model bundle")
    p_train.add_argument("--method", required=True, choices=sorted(METHODS))
    p_train.add_argument("--tokenizer", default="char", choices=[u.value for u in Unit])
    p_train.add_argument("--input", required=True)
    p_train.add_argument("--out", required=True)
    p_train.add_argument("--form", default="composed", choices=[f.value for f in Form])
    p_train.add_argument("--no-case-fold", action="store_true")
    p_train.add_argument("--registry", help="registry file (default: built-in table)")
    p_train.add_argument(
        "--no-registry-check",
        action="store_true",
        help="accept any well-formed code without registry lookup",
    )
    p_train.add_argument("--compress", action="store_true", help="gzip the bundle")
    p_train.add_argument("--bpe-vocab", type=int, default=2000, dest="bpe_vocab")
    p_train.add_argument("--n-min", type=int, default=1, dest="n_min")
    p_train.add_argument("--n-max", type=int, default=5, dest="n_max")
    p_train.add_argument("--max-rank", type=int, default=400, dest="max_rank")
    p_train.add_argument(
        "--missing-penalty", type=float, default=None, dest="missing_penalty"
    )
    p_train.add_argument("--nmax", type=int, default=6)
    p_train.add_argument("--penalty", type=float, default=7.0)
    p_train.add_argument("--top-f", type=int, default=10000, dest="top_f")
    p_train.add_argument("--nb-n-min", type=int, default=1, dest="nb_n_min")
    p_train.add_argument("--nb-n-max", type=int, default=4, dest="nb_n_max")
    p_train.add_argument("--alpha", type=float, default=1.0)
    p_train.add_argument("--uniform-priors", action="store_true", dest="uniform_priors")
    p_train.add_argument("--markov-alpha", type=float, default=1.0, dest="markov_alpha")
    p_train.add_argument("--varbyte-k", type=int, default=3000, dest="varbyte_k")
    p_train.set_defaults(func=cmd_train)

    p_id = sub.add_parser("identify", help="classify input text")
    _add_model_arg(p_id)
    p_id.add_argument("--text", action="append", help="inline input (repeatable)")
    p_id.add_argument("--stdin", action="store_true", help="read one input per line")
    p_id.add_argument("--top-k", type=int, default=3, dest="top_k")
    p_id.add_argument("--tau", type=float, default=1.0)
    p_id.add_argument("--format", default="tsv", choices=["tsv", "json-lines"])
    p_id.add_argument("--strict", action="store_true", help="exit 3 on empty input")
    p_id.add_argument(
        "--clean-social",
        action="store_true",
        dest="clean_social",
        help="strip URLs and @-handles first",
    )
    p_id.set_defaults(func=cmd_identify)

    p_eval = sub.add_parser("evaluate", help="score a model on labeled data")
    _add_model_arg(p_eval)
    p_eval.add_argument("--input", required=True)
    p_eval.add_argument("--report", required=True)
    p_eval.add_argument(
        "--groups", help="group name (built-in) or group file for error analysis"
    )
    p_eval.add_argument(
        "--all-labels",
        action="store_true",
        dest="all_labels",
        help="macro-average over all model labels, not just gold-present ones",
    )
    p_eval.set_defaults(func=cmd_evaluate)

    p_cmp = sub.add_parser("compare", help="join per-tool F1 reports")
    p_cmp.add_argument("--reports", nargs="+", required=True)
    p_cmp.add_argument("--out", required=True)
    p_cmp.set_defaults(func=cmd_compare)

    p_ins = sub.add_parser("inspect", help="print bundle metadata")
    _add_model_arg(p_ins)
    p_ins.set_defaults(func=cmd_inspect)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "compare" and len(args.reports) < 2:
        parser.error("compare needs at least 2 reports")
    if args.command == "identify" and not args.text and not args.stdin:
        parser.error("identify needs --text or --stdin")
    try:
        return args.func(args)
    except LidError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
