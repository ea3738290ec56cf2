"""Run a sweep over identity ids and write the reports as JSON or CSV.

    python scripts/run_sweep.py --id MT1,MT2 --p 7,11,13 --d 3..6 --out mt.json
    HYPERCHAR_THREADS=4 python scripts/run_sweep.py --id ALL --p 7,11

Prints a one-line summary per id on stderr.
"""

import argparse
import sys
from collections import Counter

from hyperchar.cli import parse_ints, resolve_ids
from hyperchar.identities import SweepGrid, sweep
from hyperchar.report import to_csv, to_json


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--id", default="MT1,MT2")
    ap.add_argument("--p", default="5,7,11,13")
    ap.add_argument("--q", default="7,13")
    ap.add_argument("--d", default="3..6")
    ap.add_argument("--k", type=int, default=5)
    ap.add_argument("--out")
    ap.add_argument("--csv", action="store_true")
    args = ap.parse_args()

    ids = resolve_ids([args.id])
    grid = SweepGrid(ps=parse_ints(args.p), qs=parse_ints(args.q), ds=parse_ints(args.d), k=args.k)
    reports = sweep(ids, grid)

    by_id = {}
    for r in reports:
        by_id.setdefault(r.id, Counter())[r.status] += 1
    for id_, c in by_id.items():
        print(f"{id_:16s} pass={c['pass']} fail={c['fail']} skip={c['skip']}", file=sys.stderr)

    text = to_csv(reports) if args.csv else to_json(reports)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        print(text)
    return 1 if any(r.status == "fail" for r in reports) else 0


if __name__ == "__main__":
    sys.exit(main())
