"""Compare the two leading-coefficient forms of the MT4 point-count formula.

For each q and d, checks every lambda (or a sample for large q) with the
literal q*phi(-1) coefficient and with plain q, and prints the pass counts.

    python scripts/mt4_coefficient_survey.py --q 7,13,19,25 --d 3
"""

import argparse

from hyperchar.cli import parse_ints
from hyperchar.identities import check_mt4, field_from_q, select_values
from hyperchar.varieties import f_hypothesis


def survey(qs, ds, sample):
    rows = []
    for q in qs:
        ctx = field_from_q(q)
        for d in ds:
            reason = f_hypothesis(q, d)
            if reason:
                rows.append((q, d, None, None, reason))
                continue
            lams = select_values(ctx.units(), f"sample:{sample}" if q > 50 else "all", 0, f"survey-{q}")
            lit = sum(check_mt4(ctx, d, lam, "literal").passed for lam in lams)
            cor = sum(check_mt4(ctx, d, lam, "corrected").passed for lam in lams)
            rows.append((q, d, lit, cor, len(lams)))
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--q", default="7,13,19,25,31,37,43")
    ap.add_argument("--d", default="3")
    ap.add_argument("--sample", type=int, default=12)
    args = ap.parse_args()
    print(f"{'q':>4} {'d':>2} {'q mod 4':>7} {'literal':>9} {'corrected':>9}")
    for q, d, lit, cor, n in survey(parse_ints(args.q), parse_ints(args.d), args.sample):
        if lit is None:
            print(f"{q:>4} {d:>2} {q % 4:>7}   skipped: {n}")
        else:
            print(f"{q:>4} {d:>2} {q % 4:>7} {lit:>4}/{n:<4} {cor:>4}/{n:<4}")


if __name__ == "__main__":
    main()
