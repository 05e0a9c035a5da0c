"""Alternating-sign matrices: enumeration, statistics, summation formula.

An alternating-sign matrix (ASM) has entries in {-1, 0, 1}, every row and
column summing to 1 with the nonzero entries alternating in sign.  ASMs
are plain tuples of tuples of ints here.

Enumeration runs row by row over partial column-sum profiles.  After any
prefix of rows each column sum is 0 or 1, so the profile is a bitmask; a
row is admissible when its own prefix sums also stay in {0, 1} and it
ends at 1.  Each row raises the total sum by one, so depth n forces the
all-ones profile and every leaf of the search is a complete ASM.  Counts
grow fast (1, 2, 7, 42, 429, 7436, 218348, ...), so enumeration refuses
sizes above a cap: 7 by default, overridable via the LAMBDADET_CAP
environment variable or an explicit argument.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import CapExceeded, DivisionByZero, NonMonomialEntry
from .laurent import LAM, ONE, ONE_PLUS_LAM, LaurentPoly
from .matrices import PolyMatrix

ASM = tuple[tuple[int, ...], ...]

DEFAULT_CAP = 7
CAP_ENV_VAR = "LAMBDADET_CAP"


def resolve_cap(cap: int | None = None) -> int:
    """Explicit cap, else the LAMBDADET_CAP environment variable, else 7."""
    if cap is not None:
        return cap
    env = os.environ.get(CAP_ENV_VAR)
    return int(env) if env else DEFAULT_CAP


def check_cap(n: int, cap: int | None = None) -> None:
    limit = resolve_cap(cap)
    if n > limit:
        raise CapExceeded(
            "size %d exceeds the enumeration cap %d (raise it explicitly "
            "or via %s if you mean it)" % (n, limit, CAP_ENV_VAR)
        )


def _admissible_rows(profile: int, n: int) -> list[tuple[int, ...]]:
    """All rows that extend the given column-sum profile by one valid row."""
    row = [0] * n
    out: list[tuple[int, ...]] = []

    def walk(j: int, prefix: int) -> None:
        if j == n:
            if prefix == 1:
                out.append(tuple(row))
            return
        walk(j + 1, prefix)
        if prefix == 0 and not profile >> j & 1:
            row[j] = 1
            walk(j + 1, 1)
            row[j] = 0
        elif prefix == 1 and profile >> j & 1:
            row[j] = -1
            walk(j + 1, 0)
            row[j] = 0

    walk(0, 0)
    return out


def enumerate_asms(n: int, cap: int | None = None) -> Iterator[ASM]:
    """Yield every n-by-n alternating-sign matrix (CapExceeded past the cap)."""
    if n < 1:
        raise ValueError("size must be positive")
    check_cap(n, cap)
    rows_cache: dict[int, list[tuple[int, ...]]] = {}
    acc: list[tuple[int, ...]] = []

    def descend(profile: int, depth: int) -> Iterator[ASM]:
        if depth == n:
            yield tuple(acc)
            return
        rows = rows_cache.get(profile)
        if rows is None:
            rows = rows_cache[profile] = _admissible_rows(profile, n)
        for row in rows:
            mask = profile
            for j, b in enumerate(row):
                if b:
                    mask ^= 1 << j
            acc.append(row)
            yield from descend(mask, depth + 1)
            acc.pop()

    yield from descend(0, 0)


def count_asms(n: int, cap: int | None = None) -> int:
    """Count by exhaustive enumeration (subject to the cap)."""
    return sum(1 for _ in enumerate_asms(n, cap))


def asm_count_formula(n: int) -> int:
    """The closed-form count: product over k < n of (3k+1)! / (n+k)!."""
    value = Fraction(1)
    for k in range(n):
        value *= Fraction(math.factorial(3 * k + 1), math.factorial(n + k))
    if value.denominator != 1:
        raise ArithmeticError("count formula produced a non-integer")
    return value.numerator


def is_asm(candidate: Iterable[Iterable[int]]) -> bool:
    """Check the definition directly (row/column sums 1, signs alternating)."""
    rows = [tuple(r) for r in candidate]
    n = len(rows)
    if any(len(r) != n for r in rows):
        return False
    for line in list(rows) + [tuple(col) for col in zip(*rows)]:
        prefix = 0
        for b in line:
            if b not in (-1, 0, 1):
                return False
            prefix += b
            if prefix not in (0, 1):
                return False
        if prefix != 1:
            return False
    return True


@dataclass(frozen=True)
class ASMStats:
    """Inversion count I, negative-entry count N, and the exponent P = I - N."""

    inversions: int
    negatives: int

    @property
    def plus_exponent(self) -> int:
        return self.inversions - self.negatives


def asm_stats(asm: ASM) -> ASMStats:
    """I(B) = sum of b_ij * b_rs over pairs with i < r and j > s, plus N(B).

    Computed in one sweep: while scanning row r, prev[c] holds the sum of
    all entries above row r in columns 1..c, so the factor multiplying
    b_rs is prev[n] - prev[s].
    """
    n = len(asm)
    prev = [0] * (n + 1)
    inversions = 0
    negatives = 0
    for row in asm:
        for s, b in enumerate(row):
            if b:
                inversions += b * (prev[n] - prev[s + 1])
                if b < 0:
                    negatives += 1
        acc = 0
        for c, b in enumerate(row):
            acc += b
            prev[c + 1] += acc
    return ASMStats(inversions, negatives)


def _invert_entry(value: LaurentPoly) -> LaurentPoly:
    mono = value.as_monomial()
    if mono is None:
        if value.is_zero():
            raise DivisionByZero("matrix entry 0 raised to a negative power")
        raise NonMonomialEntry(
            "entry %s is not a monomial, so it has no inverse in the ring" % value
        )
    coeff, l_exp, t_exp = mono
    if l_exp:
        raise NonMonomialEntry("entry %s with a positive l-power has no inverse" % value)
    return LaurentPoly.monomial(Fraction(1, 1) / Fraction(coeff), 0, -t_exp)


def lambda_det_sum(matrix: PolyMatrix, cap: int | None = None) -> LaurentPoly:
    """The summation formula: sum over ASMs B of l^P(B) (1+l)^N(B) M^B.

    M^B multiplies entry (i, j) with exponent b_ij, so entries hit by a
    -1 must be invertible monomials.  Agrees with the condensation
    recurrence wherever both are defined.
    """
    n = matrix.size
    check_cap(n, cap)
    inverses: dict[tuple[int, int], LaurentPoly] = {}
    lam_pow: dict[int, LaurentPoly] = {}
    neg_pow: dict[int, LaurentPoly] = {}
    total = LaurentPoly.const(0)
    for asm in enumerate_asms(n, cap):
        stats = asm_stats(asm)
        p, negs = stats.plus_exponent, stats.negatives
        if p not in lam_pow:
            lam_pow[p] = LAM**p
        if negs not in neg_pow:
            neg_pow[negs] = ONE_PLUS_LAM**negs
        term = lam_pow[p] * neg_pow[negs]
        for i, row in enumerate(asm):
            for j, b in enumerate(row):
                if b == 1:
                    term = term * matrix.rows[i][j]
                elif b == -1:
                    inv = inverses.get((i, j))
                    if inv is None:
                        inv = inverses[(i, j)] = _invert_entry(matrix.rows[i][j])
                    term = term * inv
        total = total + term
    return total


def expanded_term_count(matrix_size: int, cap: int | None = None) -> int:
    """Number of monomials when every (1+l)^N(B) factor is distributed out,
    i.e. the sum of 2^N(B) over all ASMs of the given size."""
    return sum(2 ** asm_stats(asm).negatives for asm in enumerate_asms(matrix_size, cap))


# -- masked partial sums ------------------------------------------------


def mask_cells(matrix: PolyMatrix) -> frozenset[tuple[int, int]]:
    """1-based positions of the nonzero entries of a 0/1 pattern matrix."""
    return frozenset(
        (i + 1, j + 1)
        for i, row in enumerate(matrix.rows)
        for j, cell in enumerate(row)
        if not cell.is_zero()
    )


def complement_cells(matrix: PolyMatrix) -> frozenset[tuple[int, int]]:
    """1-based positions of the zero entries of a 0/1 pattern matrix."""
    return frozenset(
        (i + 1, j + 1)
        for i, row in enumerate(matrix.rows)
        for j, cell in enumerate(row)
        if cell.is_zero()
    )


def window_cells(
    cells: frozenset[tuple[int, int]], i0: int, j0: int, k: int
) -> frozenset[tuple[int, int]]:
    """Intersection of a cell set with the k-by-k window whose top left
    corner is (i0, j0), 1-based."""
    return frozenset(
        (i, j) for (i, j) in cells if i0 <= i < i0 + k and j0 <= j < j0 + k
    )


def region_sum(asm: ASM, cells: Iterable[tuple[int, int]]) -> int:
    """Sum of the ASM entries at the given 1-based positions."""
    return sum(asm[i - 1][j - 1] for (i, j) in cells)


def min_region_sum(
    n: int, cells: Iterable[tuple[int, int]], cap: int | None = None
) -> tuple[int, ASM]:
    """Minimum of region_sum over all n-by-n ASMs, with a minimizer."""
    cells = tuple(cells)
    best: tuple[int, ASM] | None = None
    for asm in enumerate_asms(n, cap):
        value = region_sum(asm, cells)
        if best is None or value < best[0]:
            best = (value, asm)
    if best is None:
        raise ValueError("no alternating-sign matrices of size %d" % n)
    return best
