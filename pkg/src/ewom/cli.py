"""Command line entry point: ``ewom route|train|classify|evaluate``.

Logs and summaries go to stderr, data to stdout (or ``--output``).
Exit codes: 0 ok, 1 usage error, 2 data error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import logging
import sys
from collections import Counter

from ewom.classifier import UPDATE_RULES, classify, load_model, save_model
from ewom.config import PipelineConfig
from ewom.evaluation import EvalReport, evaluate, kfold_split, mean_report, write_tsv
from ewom.ingest import Format, ParseStats, Topic, iter_export, route_topic
from ewom.pipeline import fit, labeled_documents, load_lexicon, predict, tokenized
from ewom.vectorize import vectorize

log = logging.getLogger("ewom")

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@contextlib.contextmanager
def _output(path):
    if path in (None, "-"):
        yield sys.stdout
        sys.stdout.flush()
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            yield fh


def _config(args) -> PipelineConfig:
    cfg = PipelineConfig.from_file(args.config) if args.config else PipelineConfig()
    return cfg.with_overrides(
        alpha=getattr(args, "alpha", None),
        alpha_prime=getattr(args, "alpha_prime", None),
        learning_rate=getattr(args, "eta", None),
        epochs=getattr(args, "epochs", None),
        seed=getattr(args, "seed", None),
        feature_mode=getattr(args, "feature_mode", None),
        lexicon_path=args.lexicon,
        stopword_path=args.stopwords,
        positive_class=getattr(args, "positive_class", None),
        max_updates=getattr(args, "max_updates", None),
        update_rule=getattr(args, "update_rule", None),
    )


def _posts(args, stats: ParseStats):
    return iter_export(args.input, args.format, stats)


def _report_skips(stats: ParseStats) -> None:
    if stats.skipped:
        log.warning("%d malformed records skipped (%d read)", stats.skipped, stats.read)


def cmd_route(args) -> int:
    stats = ParseStats()
    counts = Counter({t: 0 for t in Topic})
    with _output(args.output) as out:
        for post in _posts(args, stats):
            assignment = route_topic(post)
            counts[assignment.topic] += 1
            record = post.to_json()
            record["topic"] = assignment.topic.value
            record["matched_rule"] = assignment.matched_rule
            out.write(json.dumps(record, ensure_ascii=False) + "\n")
    _report_skips(stats)
    for topic in Topic:
        print(f"{topic.value}\t{counts[topic]}", file=sys.stderr)
    return EXIT_OK


def cmd_train(args) -> int:
    cfg = _config(args)
    lexicon = load_lexicon(cfg)
    stats = ParseStats()
    docs = labeled_documents(_posts(args, stats), lexicon)
    _report_skips(stats)
    result = fit(docs, cfg)

    save_model(result.model, args.model)
    keywords_path = args.keywords or f"{args.model}.keywords.tsv"
    with open(keywords_path, "w", encoding="utf-8", newline="\n") as fh:
        result.report.write_tsv(fh)

    r = result.report
    print(
        f"documents {len(docs)}\tvocabulary {len(r.scores)}\t"
        f"positive_keywords {len(r.positive_keywords)}\tnegative_keywords {len(r.negative_keywords)}",
        file=sys.stderr,
    )
    print(
        f"updates {result.training.updates}\tepochs {result.training.epochs_run}\t"
        f"training_errors {result.training.last_epoch_errors}",
        file=sys.stderr,
    )
    return EXIT_OK


def cmd_classify(args) -> int:
    cfg = _config(args)
    lexicon = load_lexicon(cfg)
    model = load_model(args.model)
    stats = ParseStats()
    classified = 0
    with _output(args.output) as out:
        for post in _posts(args, stats):
            doc = tokenized(post, lexicon)
            record = {
                "id": post.id,
                "text": post.text,
                "expanded_urls": post.expanded_urls,
                "media_types": post.media_types,
                "topic": doc.topic.topic.value,
                "matched_rule": doc.topic.matched_rule,
            }
            if doc.topic.topic is Topic.ABOUT_IMPRESSIONS:
                record["sentiment"] = classify(model, vectorize(doc, model.space))
                classified += 1
            out.write(json.dumps(record, ensure_ascii=False) + "\n")
    _report_skips(stats)
    log.info("%d posts read, %d classified", stats.read, classified)
    return EXIT_OK


def cmd_evaluate(args) -> int:
    cfg = _config(args)
    lexicon = load_lexicon(cfg)
    stats = ParseStats()
    docs = labeled_documents(_posts(args, stats), lexicon)
    _report_skips(stats)
    if not docs:
        raise ValueError("no labeled documents to evaluate")
    truths = [cfg.label_of(d.sentiment) for d in docs]

    reports: list[tuple[str, EvalReport]] = []
    if args.kfold:
        folds = []
        for f, (train_idx, test_idx) in enumerate(kfold_split(len(docs), args.kfold, cfg.seed), 1):
            result = fit([docs[i] for i in train_idx], cfg)
            preds = predict(result.model, [docs[i] for i in test_idx])
            report = evaluate(preds, [truths[i] for i in test_idx])
            folds.append(report)
            reports.append((f"fold{f}", report))
        reports.append(("mean", mean_report(folds)))
    else:
        if not args.model:
            raise UsageError("evaluate needs --model or --kfold")
        model = load_model(args.model)
        reports.append(("holdout", evaluate(predict(model, docs), truths)))

    for name, report in reports:
        sys.stdout.write(report.as_text(name))
    if args.report:
        with open(args.report, "w", encoding="utf-8", newline="\n") as fh:
            write_tsv(reports, fh)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ewom", description="Topic routing and impression classification for short posts.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, need_output=False):
        p.add_argument("--input", required=True)
        p.add_argument("--format", choices=[f.value for f in Format], default="jsonl")
        p.add_argument("--config", help="key=value settings file; flags override it")
        p.add_argument("--lexicon", help="word list, one surface form per line")
        p.add_argument("--stopwords", help="stopword list, one per line")
        if need_output:
            p.add_argument("--output", help="output path (default stdout)")

    def training(p):
        p.add_argument("--alpha", type=float)
        p.add_argument("--alpha-prime", type=float)
        p.add_argument("--eta", type=float, help="learning rate")
        p.add_argument("--epochs", type=int)
        p.add_argument("--seed", type=int)
        p.add_argument("--max-updates", type=int)
        p.add_argument("--feature-mode", choices=["Binary", "Count"])
        p.add_argument("--update-rule", choices=UPDATE_RULES)
        p.add_argument("--positive-class", choices=["Positive", "Negative"])

    p = sub.add_parser("route", help="assign a topic to every post")
    common(p, need_output=True)
    p.set_defaults(func=cmd_route)

    p = sub.add_parser("train", help="select keywords and train a model")
    common(p)
    training(p)
    p.add_argument("--model", required=True, help="model output path")
    p.add_argument("--keywords", help="keyword report path (default MODEL.keywords.tsv)")
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("classify", help="route posts and classify impressions")
    common(p, need_output=True)
    p.add_argument("--model", required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("evaluate", help="precision/recall/F1 on labeled posts")
    common(p)
    training(p)
    p.add_argument("--model")
    p.add_argument("--kfold", type=int, help="retrain and evaluate with K folds")
    p.add_argument("--report", help="also write the reports as TSV")
    p.set_defaults(func=cmd_evaluate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"ewom: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"ewom: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"ewom: data error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
