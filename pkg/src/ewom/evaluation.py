from __future__ import annotations

import random
from dataclasses import dataclass
from typing import IO, NamedTuple, Sequence


class Confusion(NamedTuple):
    tp: int
    fp: int
    fn: int
    tn: int

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.fn + self.tn


@dataclass(frozen=True)
class EvalReport:
    tp: int
    fp: int
    fn: int
    tn: int
    precision: float
    recall: float
    f1: float

    def as_text(self, title: str = "evaluation") -> str:
        return (
            f"{title}\n"
            f"  tp={self.tp} fp={self.fp} fn={self.fn} tn={self.tn}\n"
            f"  precision {self.precision:.4f}\n"
            f"  recall    {self.recall:.4f}\n"
            f"  f1        {self.f1:.4f}\n"
        )


TSV_HEADER = "name\ttp\tfp\tfn\ttn\tprecision\trecall\tf1\n"


def tsv_row(name: str, r: EvalReport) -> str:
    return (
        f"{name}\t{r.tp}\t{r.fp}\t{r.fn}\t{r.tn}\t"
        f"{r.precision:.4f}\t{r.recall:.4f}\t{r.f1:.4f}\n"
    )


def write_tsv(reports: Sequence[tuple[str, EvalReport]], fh: IO[str]) -> None:
    fh.write(TSV_HEADER)
    for name, r in reports:
        fh.write(tsv_row(name, r))


def confusion(predictions: Sequence[int], truths: Sequence[int]) -> Confusion:
    if len(predictions) != len(truths):
        raise ValueError(f"length mismatch: {len(predictions)} predictions, {len(truths)} truths")
    if not predictions:
        raise ValueError("nothing to evaluate")
    tp = fp = fn = tn = 0
    for p, t in zip(predictions, truths):
        if p not in (1, -1) or t not in (1, -1):
            raise ValueError("labels must be +1 or -1")
        if p == 1:
            if t == 1:
                tp += 1
            else:
                fp += 1
        elif t == 1:
            fn += 1
        else:
            tn += 1
    return Confusion(tp, fp, fn, tn)


def _ratio(num: float, den: float) -> float:
    # undefined ratios count as 0
    return num / den if den > 0 else 0.0


def f1_score(precision: float, recall: float) -> float:
    return _ratio(2 * precision * recall, precision + recall)


def metrics(counts: Confusion | Sequence[int]) -> EvalReport:
    tp, fp, fn, tn = counts
    if min(tp, fp, fn, tn) < 0:
        raise ValueError("counts must be nonnegative")
    p = _ratio(tp, tp + fp)
    r = _ratio(tp, tp + fn)
    return EvalReport(tp, fp, fn, tn, p, r, f1_score(p, r))


def evaluate(predictions: Sequence[int], truths: Sequence[int]) -> EvalReport:
    return metrics(confusion(predictions, truths))


def mean_report(reports: Sequence[EvalReport]) -> EvalReport:
    """Summed counts with macro-averaged P/R/F1 over folds."""
    n = len(reports)
    if not n:
        raise ValueError("no reports to average")
    return EvalReport(
        sum(r.tp for r in reports),
        sum(r.fp for r in reports),
        sum(r.fn for r in reports),
        sum(r.tn for r in reports),
        sum(r.precision for r in reports) / n,
        sum(r.recall for r in reports) / n,
        sum(r.f1 for r in reports) / n,
    )


def kfold_split(n: int, k: int, seed: int = 0) -> list[tuple[list[int], list[int]]]:
    """Seeded k-fold partition of range(n).

    The first ``n % k`` folds get one extra element.  Index lists are sorted.
    """
    if not 2 <= k <= n:
        raise ValueError(f"need 2 <= k <= n, got k={k}, n={n}")
    perm = list(range(n))
    random.Random(seed).shuffle(perm)
    base, extra = divmod(n, k)
    folds, start = [], 0
    for f in range(k):
        size = base + (1 if f < extra else 0)
        folds.append(sorted(perm[start : start + size]))
        start += size
    out = []
    for f, test in enumerate(folds):
        train = sorted(i for g, fold in enumerate(folds) if g != f for i in fold)
        out.append((train, test))
    return out
