"""Exact counts of sequency-ordered/complete matrices and maximal chains.

Every closed form has a brute-force counterpart that never touches a
binomial coefficient: it enumerates sign vectors or whole matrices and
counts sequencies directly.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Callable, NamedTuple, Optional

from .core import SequencyError, SignMatrix, sequency_bits

# Full 2^(n*n) enumeration stops here (65536 matrices at n = 4).
MAX_ENUMERATION_N = 4
# Exhaustive completeness check is done over all matrices only up to here.
MAX_COMPLETE_EXHAUSTIVE_N = 3
# Vector-level oracles walk 2^n sign vectors.
MAX_VECTOR_ORACLE_N = 20


class SearchSpaceTooLargeError(SequencyError):
    pass


def decimal_string(x: int) -> str:
    """``str(x)`` without the interpreter's digit-count cap on huge ints."""
    getter = getattr(sys, "get_int_max_str_digits", None)
    if getter is None:
        return str(x)
    limit = getter()
    try:
        sys.set_int_max_str_digits(0)
        return str(x)
    finally:
        sys.set_int_max_str_digits(limit)


@dataclass(frozen=True)
class CountReport:
    n: int
    what: str
    formula_value: int
    oracle_value: Optional[int] = None
    agree: Optional[bool] = field(init=False, default=None)

    def __post_init__(self) -> None:
        if self.oracle_value is not None:
            object.__setattr__(self, "agree", self.formula_value == self.oracle_value)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "what": self.what,
            "formula_value": decimal_string(self.formula_value),
            "oracle_value": None if self.oracle_value is None else decimal_string(self.oracle_value),
            "agree": self.agree,
        }


class GridCheck(NamedTuple):
    lhs: int
    rhs: Fraction
    agree: bool


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise SequencyError(f"n must be an integer >= 1, got {n!r}")


def _bound(n: int, limit: int, what: str) -> None:
    if n > limit:
        raise SearchSpaceTooLargeError(
            f"search space too large: {what} oracle supports n <= {limit}, got {n}"
        )


def columns_with_sequency(n: int, k: int) -> int:
    """How many vectors in {+1,-1}^n have exactly ``k`` sign changes."""
    _check_n(n)
    if not 0 <= k <= n - 1:
        raise SequencyError(f"sequency {k} out of range [0, {n - 1}]")
    return 2 * math.comb(n - 1, k)


def sequency_histogram(n: int) -> list[int]:
    """Brute-force count of length-``n`` sign vectors per sequency value."""
    _check_n(n)
    _bound(n, MAX_VECTOR_ORACLE_N, "vector enumeration")
    counts = [0] * n
    for bits in range(1 << n):
        counts[sequency_bits(bits, n)] += 1
    return counts


def binomial_product(n: int) -> int:
    """Product of C(n-1, k) over k = 0..n-1."""
    _check_n(n)
    return math.prod(math.comb(n - 1, k) for k in range(n))


def _matrix_columns(code: int, n: int) -> list[int]:
    # Row-major encoding: bit i*n + j holds entry (i, j).
    cols = [0] * n
    for i in range(n):
        row = (code >> (i * n)) & ((1 << n) - 1)
        for j in range(n):
            if (row >> j) & 1:
                cols[j] |= 1 << i
    return cols


def iter_matrices(n: int):
    """Every n x n sign matrix, in increasing order of the row-major code."""
    _check_n(n)
    _bound(n, MAX_ENUMERATION_N, "matrix enumeration")
    for code in range(1 << (n * n)):
        yield SignMatrix(tuple(_matrix_columns(code, n)))


def enumerate_ordered(n: int, visitor: Callable[[SignMatrix], None] | None = None) -> int:
    """Visit all 2^(n*n) matrices; call ``visitor`` on the sequency-ordered ones.

    Returns the number of matches.
    """
    _check_n(n)
    _bound(n, MAX_ENUMERATION_N, "matrix enumeration")
    matched = 0
    target = list(range(n))
    for code in range(1 << (n * n)):
        cols = _matrix_columns(code, n)
        if [sequency_bits(c, n) for c in cols] == target:
            matched += 1
            if visitor is not None:
                visitor(SignMatrix(tuple(cols)))
    return matched


def count_sequency_ordered(n: int, oracle: bool = False) -> CountReport:
    """2^n times the product of C(n-1, k).

    The oracle enumerates every matrix for n <= 4 and otherwise multiplies
    brute-force per-sequency vector counts column by column.
    """
    _check_n(n)
    formula = (1 << n) * binomial_product(n)
    value = None
    if oracle:
        if n <= MAX_ENUMERATION_N:
            value = enumerate_ordered(n)
        else:
            _bound(n, MAX_VECTOR_ORACLE_N, "ordered-count")
            value = math.prod(sequency_histogram(n))
    return CountReport(n, "ordered", formula, value)


def _is_complete(cols: list[int] | tuple[int, ...], n: int) -> bool:
    return sorted(sequency_bits(c, n) for c in cols) == list(range(n))


def _complete_by_permutation(n: int) -> int:
    # Every complete matrix sorts back to exactly one ordered matrix, so the
    # column permutations of the ordered set must be complete and pairwise
    # distinct for the n! factor to hold.
    ordered: list[SignMatrix] = []
    enumerate_ordered(n, ordered.append)
    seen = set()
    for a in ordered:
        for perm in permutations(range(n)):
            cols = tuple(a.columns[p] for p in perm)
            if not _is_complete(cols, n):
                raise AssertionError("column permutation broke completeness")
            seen.add(cols)
    if len(seen) != len(ordered) * math.factorial(n):
        raise AssertionError("column permutations of ordered matrices collide")
    return len(seen)


def count_sequency_complete(n: int, oracle: bool = False) -> CountReport:
    _check_n(n)
    formula = math.factorial(n) * count_sequency_ordered(n).formula_value
    value = None
    if oracle:
        _bound(n, MAX_ENUMERATION_N, "complete-count")
        if n <= MAX_COMPLETE_EXHAUSTIVE_N:
            value = sum(
                1 for code in range(1 << (n * n)) if _is_complete(_matrix_columns(code, n), n)
            )
        else:
            value = _complete_by_permutation(n)
    return CountReport(n, "complete", formula, value)


def count_maximal_chains(n: int, oracle: bool = False) -> CountReport:
    """Maximal ascending chains of the sequency preorder on {+1,-1}^n."""
    _check_n(n)
    formula = math.prod(math.factorial(2 * math.comb(n - 1, k)) for k in range(n))
    value = None
    if oracle:
        value = math.prod(math.factorial(c) for c in sequency_histogram(n))
    return CountReport(n, "chains", formula, value)


def per_sequency_counts(n: int, oracle: bool = False) -> list[CountReport]:
    """One report per sequency value k = 0..n-1."""
    _check_n(n)
    hist = sequency_histogram(n) if oracle else None
    return [
        CountReport(n, f"per-sequency:{k}", columns_with_sequency(n, k), hist[k] if hist else None)
        for k in range(n)
    ]


def grid_identity_check(n: int) -> GridCheck:
    """Compare the binomial product with the power product ``prod k^(2k-1-n)``.

    Both sides are evaluated exactly as printed; the right-hand side can be
    a proper fraction because exponents go negative.
    """
    _check_n(n)
    lhs = binomial_product(n)
    rhs = Fraction(1)
    for k in range(1, n + 1):
        rhs *= Fraction(k) ** (2 * k - 1 - n)
    return GridCheck(lhs, rhs, lhs == rhs)

