"""Randomised search over G(n, p) and random regular graphs.

Writes the canonical JSON report and a JSON-lines file of violations (if any).
The default mix is 10,000 graphs with at most 14 vertices.

    python3 scripts/hunt.py --jobs 4 --report hunt.json --violations hunt-violations.jsonl
"""

import argparse
import sys
import time
from dataclasses import replace

from circumference.corpus import CorpusSpec
from circumference.harness import LEVELS, hunt

DEFAULT_MIX = [
    CorpusSpec.gnp(12, 0.3, 3000, seed=42),
    CorpusSpec.gnp(14, 0.25, 2000, seed=43),
    CorpusSpec.regular(10, 3, 2500, seed=7),
    CorpusSpec.regular(14, 4, 2500, seed=8),
]


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--level", choices=LEVELS, default="theorems")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--scale", type=float, default=1.0, help="multiply every corpus count")
    ap.add_argument("--stop-on-violation", action="store_true")
    ap.add_argument("--report")
    ap.add_argument("--violations")
    args = ap.parse_args()

    corpora = [replace(c, count=max(1, int(c.count * args.scale))) for c in DEFAULT_MIX]
    t0 = time.time()
    res = hunt(corpora, args.level, args.stop_on_violation, args.jobs, violations_path=args.violations)
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(res.report_text(corpora, args.level))
    s = res.summary
    print(f"{s['total']} graphs, {s['processed']} non-degenerate, {s['violations']} violations, "
          f"min slack {s['min_slack1']}/{s['min_slack2']}, sharp {s['sharp1']}/{s['sharp2']}, "
          f"{time.time() - t0:.1f}s")
    return res.exit_status


if __name__ == "__main__":
    sys.exit(main())
