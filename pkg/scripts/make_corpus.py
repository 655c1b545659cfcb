"""Write a synthetic corpus as JSONL.

    python scripts/make_corpus.py labeled 400 --seed 1 > corpus.jsonl
    python scripts/make_corpus.py stream 100000 > stream.jsonl
"""

import argparse
import sys

from ewom import synthetic
from ewom.ingest import write_jsonl


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("kind", choices=["labeled", "stream"])
    ap.add_argument("n", type=int)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--positive-fraction", type=float, default=0.5)
    ap.add_argument("--noise", type=float, default=0.1)
    args = ap.parse_args()
    if args.kind == "labeled":
        posts = synthetic.labeled_corpus(args.n, args.seed, args.positive_fraction, args.noise)
    else:
        posts = synthetic.mixed_stream(args.n, args.seed)
    write_jsonl(posts, sys.stdout)


if __name__ == "__main__":
    main()
