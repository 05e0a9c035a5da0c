"""Tabulate determinant growth for the even diamond family.

For each order n the 2n-by-2n diamond matrix is perturbed (zeros become
t), condensed symbolically, and the t -> 0 limit taken.  The table shows
how the full determinant and its limit grow, the tiling count recovered
at l = 1, and the time spent.  Orders up to 6 run in seconds; beyond
that the term counts, not the arithmetic, become the story.

Usage: python3 scripts/diamond_term_growth.py [--max-order N] [--eval L]
"""

from __future__ import annotations

import argparse
import time

from lambdadet.condensation import perturbed_det
from lambdadet.laurent import parse_rational
from lambdadet.matrices import diamond_even


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-order", type=int, default=5)
    parser.add_argument(
        "--eval", default="1", help="evaluate the limit at this rational l"
    )
    args = parser.parse_args()
    point = parse_rational(args.eval)

    header = "%5s %6s %10s %12s %22s %9s" % (
        "order", "size", "det terms", "limit terms", "limit at l=%s" % args.eval,
        "seconds",
    )
    print(header)
    print("-" * len(header))
    for order in range(1, args.max_order + 1):
        start = time.perf_counter()
        result = perturbed_det(diamond_even(order))
        elapsed = time.perf_counter() - start
        print(
            "%5d %6d %10d %12d %22s %9.3f"
            % (
                order,
                2 * order,
                result.det.term_count,
                result.limit.term_count,
                result.limit.eval_at(point),
                elapsed,
            )
        )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
