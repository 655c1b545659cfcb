"""Train on a small labeled set, then classify a large synthetic stream.

Reports wall time and the classifier process's peak resident memory.

    python scripts/scale_smoke.py --lines 500000
"""

import argparse
import os
import subprocess
import sys
import tempfile
import time
from pathlib import Path

from ewom import synthetic
from ewom.cli import main as ewom
from ewom.ingest import write_jsonl


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--lines", type=int, default=500_000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    with tempfile.TemporaryDirectory() as tmp:
        tmp = Path(tmp)
        labeled, stream, model = tmp / "labeled.jsonl", tmp / "stream.jsonl", tmp / "m.model"
        with open(labeled, "w", encoding="utf-8") as fh:
            write_jsonl(synthetic.labeled_corpus(400, args.seed), fh)
        with open(stream, "w", encoding="utf-8") as fh:
            write_jsonl(synthetic.mixed_stream(args.lines, args.seed), fh)
        if ewom(["train", "--input", str(labeled), "--model", str(model)]) != 0:
            sys.exit("training failed")

        t0 = time.perf_counter()
        proc = subprocess.Popen([sys.executable, "-m", "ewom", "classify", "--input", str(stream),
                                 "--model", str(model), "--output", os.devnull])
        _, status, usage = os.wait4(proc.pid, 0)
        elapsed = time.perf_counter() - t0
        code = os.waitstatus_to_exitcode(status)
        print(f"lines {args.lines}\texit {code}\tseconds {elapsed:.1f}\tpeak_rss_mb {usage.ru_maxrss / 1024:.0f}")


if __name__ == "__main__":
    main()
