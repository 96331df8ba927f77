#!/usr/bin/env python3
"""Audit a grid of small Eulerian-form candidates and tabulate which checks
discriminate: every candidate here is *not* an odd perfect number, so each
violated check is a constraint doing real work.

Usage: python scripts/audit_grid.py [--q-bound 50] [--n-bound 200] [--k 1 5]
"""

import argparse
from collections import Counter

from opnlab.arith import primes_one_mod_four
from opnlab.eulerian import (
    CandidateError,
    classify_case,
    corollary_bounds,
    lemma_sums,
    remark_chains,
    theorem1_vector,
    validate,
)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--q-bound", type=int, default=50)
    ap.add_argument("--n-bound", type=int, default=200)
    ap.add_argument("--k", type=int, nargs="+", default=[1, 5])
    args = ap.parse_args()

    violation_counts: Counter[str] = Counter()
    case_counts: Counter[int] = Counter()
    agree = disagree = total = 0

    for q in primes_one_mod_four(args.q_bound + 1):
        for k in args.k:
            for n in range(3, args.n_bound + 1, 2):
                try:
                    c = validate(q, k, n)
                except CandidateError:
                    continue
                total += 1
                t1 = theorem1_vector(c)
                if t1.conditions_agree:
                    agree += 1
                else:
                    disagree += 1
                case_counts[classify_case(c).theorem2_case] += 1
                for report in (remark_chains(c), corollary_bounds(c), lemma_sums(c)):
                    for cid in report.violations:
                        violation_counts[cid] += 1

    print(f"{total} candidates audited (q <= {args.q_bound}, "
          f"odd n <= {args.n_bound}, k in {args.k})")
    print(f"four conditions agree on {agree}, disagree on {disagree} "
          "(their equivalence is conditional on perfection, so syntactic "
          "candidates may disagree)")
    print("\ncase distribution:")
    for case, count in sorted(case_counts.items()):
        print(f"  case {case}: {count}")
    print("\nmost-violated checks (top 15):")
    for cid, count in violation_counts.most_common(15):
        print(f"  {count:7d}  {cid}")


if __name__ == "__main__":
    main()
