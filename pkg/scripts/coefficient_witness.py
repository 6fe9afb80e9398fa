"""The y/h identity and the coefficient of the distinguished diagram.

    python3 scripts/coefficient_witness.py --max-n 4

For every even partition lam this prints the multiplier that makes
X_lam*(w_lam y_lam') a multiple of X_lam*(w_lam h_lam), the coefficient of
the row-pairing diagram in the latter, and the gcd of all its coefficients.
A gcd of 1 is what keeps the vector nonzero over every ring.
"""

import argparse

from brauerlab.combinatorics import two_partitions
from brauerlab.xbasis import lemma27_check


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--max-n", type=int, default=4)
    args = ap.parse_args()

    print(f"{'lambda':<10} {'multiplier':>10} {'alt. formula':>12} {'identity':>8} {'coeff(d)':>8} {'gcd':>4}")
    for n in range(1, args.max_n + 1):
        for lam in two_partitions(n):
            d = lemma27_check(lam)["detail"]
            print(f"{str(lam):<10} {d['multiplier']:>10} {d['n_lambda_printed']:>12} {str(d['identity']):>8} "
                  f"{d['distinguished_coeff']:>8} {d['content']:>4}")


if __name__ == "__main__":
    main()
