"""Cross-validated F1 as a function of the keyword threshold.

    python scripts/alpha_sweep.py --docs 600 --folds 5
"""

import argparse
import logging

from ewom import synthetic
from ewom.config import PipelineConfig
from ewom.evaluation import evaluate, kfold_split, mean_report
from ewom.pipeline import fit, labeled_documents, load_lexicon, predict


def cross_validate(docs, cfg, folds):
    truths = [cfg.label_of(d.sentiment) for d in docs]
    reports = []
    for train_idx, test_idx in kfold_split(len(docs), folds, cfg.seed):
        try:
            model = fit([docs[i] for i in train_idx], cfg).model
        except ValueError:
            return None  # no keyword survived this threshold
        preds = predict(model, [docs[i] for i in test_idx])
        reports.append(evaluate(preds, [truths[i] for i in test_idx]))
    return mean_report(reports)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--docs", type=int, default=600)
    ap.add_argument("--folds", type=int, default=5)
    ap.add_argument("--noise", type=float, default=0.2)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--alphas", type=float, nargs="+", default=[1.1, 1.25, 1.5, 2.0, 3.0, 5.0])
    args = ap.parse_args()
    logging.basicConfig(level=logging.ERROR)

    base = PipelineConfig(seed=args.seed)
    posts = synthetic.labeled_corpus(args.docs, args.seed, noise=args.noise)
    docs = labeled_documents(posts, load_lexicon(base))
    print("alpha\tprecision\trecall\tf1")
    for a in args.alphas:
        r = cross_validate(docs, base.with_overrides(alpha=a, alpha_prime=a), args.folds)
        if r is None:
            print(f"{a:g}\t-\t-\t-")
        else:
            print(f"{a:g}\t{r.precision:.4f}\t{r.recall:.4f}\t{r.f1:.4f}")


if __name__ == "__main__":
    main()
