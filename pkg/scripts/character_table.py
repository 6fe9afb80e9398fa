"""Traces of the filtration quotients next to Murnaghan-Nakayama characters.

    python3 scripts/character_table.py --n 3
"""

import argparse

from brauerlab.combinatorics import mn_character, two_partitions
from brauerlab.symgroup import conjugacy_class_reps
from brauerlab.xbasis import quotient_character


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--n", type=int, default=3)
    args = ap.parse_args()

    classes = conjugacy_class_reps(2 * args.n)
    width = max(len(str(rho)) for rho, _ in classes) + 2
    print("lambda".ljust(10) + "".join(str(rho).rjust(width) for rho, _ in classes))
    mismatches = 0
    for lam in two_partitions(args.n):
        cells = []
        for rho, rep in classes:
            got, want = quotient_character(lam, rep), mn_character(lam, rho)
            mismatches += got != want
            cells.append(str(got) if got == want else f"{got}!={want}")
        print(str(lam).ljust(10) + "".join(c.rjust(width) for c in cells))
    print(f"{mismatches} mismatches")
    raise SystemExit(1 if mismatches else 0)


if __name__ == "__main__":
    main()
