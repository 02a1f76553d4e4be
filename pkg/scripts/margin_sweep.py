#!/usr/bin/env python3
"""Tabulate convex-function margins of the stochastic certificates.

For each order n the target spectrum (deleted-matrix zeros plus the
complementary recurrence coefficient) is a doubly stochastic image of the
zeros of p_n, so sums of any convex function can only shrink.  This script
prints the margins for f in {square, abs, exp} to show how much slack each
deletion leaves, and how it decays or grows with n.

Example:
    python scripts/margin_sweep.py --family legendre --n-max 20
    python scripts/margin_sweep.py --family jacobi --alpha 2 --beta 0.5 --k 3
"""
import argparse

from opmaj import classical_scheme, convex_report, matrix_A, matrix_B, matrix_C


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--family", default="legendre")
    parser.add_argument("--alpha", type=float)
    parser.add_argument("--beta", type=float)
    parser.add_argument("--n-max", type=int, default=16, dest="n_max")
    parser.add_argument("--k", type=int, help="fixed deletion index for the C column")
    args = parser.parse_args()

    scheme = classical_scheme(args.family, args.n_max + 2, alpha=args.alpha, beta=args.beta)
    tags = ("square", "abs", "exp")
    header = f"{'n':>3} {'thm':>4} " + " ".join(f"{t:>12}" for t in tags)
    print(header)
    print("-" * len(header))
    for n in range(2, args.n_max + 1):
        k = args.k if args.k is not None else max(n // 2, 1)
        if k > n:
            continue
        results = [("A", matrix_A(scheme, n)), ("B", matrix_B(scheme, n)), (f"C{k}", matrix_C(scheme, n, k))]
        for tag, res in results:
            margins = " ".join(f"{convex_report(res, t).margin:12.5e}" for t in tags)
            print(f"{n:>3} {tag:>4} {margins}")


if __name__ == "__main__":
    main()
