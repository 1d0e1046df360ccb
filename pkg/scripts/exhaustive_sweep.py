"""Check both bounds on every labelled graph with n vertices, optionally with the lemma suite too.

    python3 scripts/exhaustive_sweep.py --n 7
    python3 scripts/exhaustive_sweep.py --n 6 --level all --output sweep6.json
"""

import argparse
import json
import sys
import time

from circumference.corpus import CorpusSpec, corpus_size
from circumference.harness import LEVELS, run_verify, summarize, sweep_exhaustive_theorems


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--n", type=int, default=7)
    ap.add_argument("--level", choices=LEVELS, default="theorems")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--output")
    args = ap.parse_args()

    t0 = time.time()
    if args.level == "theorems":
        summary = sweep_exhaustive_theorems(args.n, args.jobs)
        bad = len(summary["violation_records"])
    else:
        spec = CorpusSpec.exhaustive(args.n)
        summary = summarize(list(run_verify(spec, args.level, jobs=args.jobs)), corpus_size(spec))
        bad = summary["violations"]
    text = json.dumps(summary, sort_keys=True, indent=2) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    print(f"n={args.n} level={args.level}: {bad} violations in {time.time() - t0:.1f}s", file=sys.stderr)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
