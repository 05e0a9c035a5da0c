"""Scan masked partial sums of alternating-sign matrices for negatives.

For each size n the nonzero pattern of the parity-matched diamond matrix
masks a region of cells; the scan minimizes the sum of entries over that
region (and over its complement) across every size-n alternating-sign
matrix.  A permutation matrix restricted to any region sums to at least
0, but the -1 entries make the general minimum a real question.  This is
the tool that turned up the first negative: at size 7 the diamond-masked
sum reaches -1, so non-negativity holds only through size 6 even though
it is provable for complements at every size.

Usage: python3 scripts/asm_partial_sum_scan.py [--max-size N] [--cap N]
"""

from __future__ import annotations

import argparse
import time

from lambdadet.asm import (
    complement_cells,
    count_asms,
    mask_cells,
    min_region_sum,
)
from lambdadet.matrices import diamond_even, diamond_odd


def sketch(asm) -> str:
    symbols = {0: ".", 1: "+", -1: "-"}
    return "/".join("".join(symbols[b] for b in row) for row in asm)


def diamond_pattern(size: int):
    if size % 2 == 0:
        return diamond_even(size // 2)
    return diamond_odd((size - 1) // 2)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-size", type=int, default=7)
    parser.add_argument(
        "--cap", type=int, default=None, help="enumeration size cap override"
    )
    args = parser.parse_args()

    header = "%4s %10s %10s %12s %9s" % (
        "size", "matrices", "mask min", "complement", "seconds"
    )
    print(header)
    print("-" * len(header))
    witnesses = []
    for size in range(2, args.max_size + 1):
        pattern = diamond_pattern(size)
        start = time.perf_counter()
        mask_min, mask_argmin = min_region_sum(
            size, mask_cells(pattern), cap=args.cap
        )
        comp_min, _ = min_region_sum(size, complement_cells(pattern), cap=args.cap)
        elapsed = time.perf_counter() - start
        print(
            "%4d %10d %10d %12d %9.2f"
            % (size, count_asms(size, cap=args.cap), mask_min, comp_min, elapsed)
        )
        if mask_min < 0:
            witnesses.append((size, mask_min, mask_argmin))
        if comp_min < 0:
            witnesses.append((size, comp_min, None))
    if witnesses:
        print()
        for size, value, argmin in witnesses:
            print("size %d reaches %d: %s" % (size, value, sketch(argmin)))
    else:
        print("\nno negative partial sums up to size %d" % args.max_size)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
