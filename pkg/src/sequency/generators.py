"""Parametric sign-matrix families and Walsh-Hadamard matrices."""

from __future__ import annotations

import enum
from fractions import Fraction

from .core import SequencyError, SequencyProfile, SignMatrix, profile
from .tensor import kronecker_power

H2 = SignMatrix.from_rows([[1, 1], [1, -1]])

# Sequency-ordered Walsh-Hadamard matrix of order 8 (normalisation dropped).
WALSH_SEQUENCY_8 = SignMatrix.from_rows([
    [1, 1, 1, 1, 1, 1, 1, 1],
    [1, 1, 1, 1, -1, -1, -1, -1],
    [1, 1, -1, -1, -1, -1, 1, 1],
    [1, 1, -1, -1, 1, 1, -1, -1],
    [1, -1, -1, 1, 1, -1, -1, 1],
    [1, -1, -1, 1, -1, 1, 1, -1],
    [1, -1, 1, -1, -1, 1, -1, 1],
    [1, -1, 1, -1, 1, -1, 1, -1],
])


class GeneratorKind(enum.Enum):
    POWER_RESIDUE = "power_residue"
    THRESHOLD = "threshold"
    ORDERED_THRESHOLD = "ordered_threshold"
    WALSH_NATURAL = "walsh_natural"
    WALSH_SEQUENCY = "walsh_sequency"

    @property
    def cli_name(self) -> str:
        return self.value.replace("_", "-")

    @classmethod
    def parse(cls, name: str) -> GeneratorKind:
        return cls(name.replace("-", "_"))


def _check_size(n: int) -> None:
    if not isinstance(n, int) or n < 2:
        raise SequencyError(f"matrix size must be an integer >= 2, got {n!r}")


def _log2_exact(n: int) -> int:
    if not isinstance(n, int) or n < 1 or n & (n - 1):
        raise SequencyError(f"Walsh matrices need a power-of-two size, got {n!r}")
    return n.bit_length() - 1


def _from_predicate(n: int, negative) -> SignMatrix:
    cols = []
    for j in range(n):
        bits = 0
        for i in range(n):
            if negative(i, j):
                bits |= 1 << i
        cols.append(bits)
    return SignMatrix(tuple(cols))


def power_residue(n: int) -> SignMatrix:
    """``A[i, j] = (-1)^t`` with ``t = i*j mod n``."""
    _check_size(n)
    return _from_predicate(n, lambda i, j: (i * j % n) & 1)


def power_residue_profile(n: int) -> SequencyProfile:
    """Closed-form column sequencies of :func:`power_residue`."""
    _check_size(n)
    if n % 2:
        vals = [0] + [j - 1 if j % 2 == 0 else n - j for j in range(1, n)]
    else:
        vals = [0 if j % 2 == 0 else n - 1 for j in range(n)]
    return SequencyProfile(tuple(vals))


def prefix_sign_changes(n: int, j: int, i: int) -> int:
    """Sign changes among rows ``0..i`` of column ``j`` of ``power_residue(n)``."""
    _check_size(n)
    if not 0 <= j <= n - 1:
        raise SequencyError(f"column index {j} out of range for n={n}")
    if not 0 < i <= n - 1:
        raise SequencyError(f"row index {i} must satisfy 0 < i <= {n - 1}")
    if n % 2:
        q = i * j // n
        return q if j % 2 == 0 else i - q
    return 0 if j % 2 == 0 else i


def threshold(n: int) -> SignMatrix:
    """+1 where ``i*j mod n`` falls in the lower half ``[0, ceil(n/2))``."""
    _check_size(n)
    return _from_predicate(n, lambda i, j: 2 * (i * j % n) >= n)


def ordered_threshold(n: int) -> SignMatrix:
    """Sequency-ordered family: +1 iff ``i*(j+1)/2 mod n < n/2``.

    Written with integers as ``i*(j+1) mod 2n < n``. For odd ``n`` this puts
    the wider band ``floor(i(j+1)/2) mod n <= m`` on even products
    ``i*(j+1)`` and the narrower ``<= m-1`` on odd ones (``n = 2m + 1``).
    """
    _check_size(n)
    return _from_predicate(n, lambda i, j: i * (j + 1) % (2 * n) >= n)


def walsh_natural(n: int) -> SignMatrix:
    """Kronecker power of H2 (natural, or Hadamard, order)."""
    return kronecker_power(H2, _log2_exact(n))


def sort_by_sequency(a: SignMatrix) -> SignMatrix:
    """Stable reordering of the columns by increasing sequency."""
    prof = profile(a)
    return a.permute_columns(sorted(range(a.n), key=prof.__getitem__))


def _walsh_value(k: int, a: int, d: int, memo: dict) -> int:
    # Evaluates W_k at x = a/d with integer arithmetic only.
    if a < 0 or a > d:
        return 0
    if k == 0:
        return 1
    key = (k, a)
    if key not in memo:
        half, odd = divmod(k, 2)
        sign = -1 if half % 2 else 1
        lo = _walsh_value(half, 2 * a, d, memo)
        hi = _walsh_value(half, 2 * a - d, d, memo)
        memo[key] = lo - sign * hi if odd else lo + sign * hi
    return memo[key]


def walsh_function(k: int, x) -> int:
    """Sequency-ordered Walsh function ``W_k`` evaluated exactly at ``x``.

    ``x`` may be an int, Fraction or decimal string. Values at dyadic
    breakpoints follow the recursion literally and are not meaningful;
    sample away from them.
    """
    x = Fraction(x)
    return _walsh_value(k, x.numerator, x.denominator, {})


def walsh_sequency(n: int) -> SignMatrix:
    """Columns are ``W_k`` sampled at the cell midpoints ``(i + 1/2)/n``."""
    _log2_exact(n)
    d = 2 * n
    memo: dict = {}
    cols = []
    for k in range(n):
        bits = 0
        for i in range(n):
            w = _walsh_value(k, 2 * i + 1, d, memo)
            if w not in (1, -1):
                raise AssertionError(f"W_{k} sampled to {w} at row {i}")
            if w < 0:
                bits |= 1 << i
        cols.append(bits)
    return SignMatrix(tuple(cols))


_BUILDERS = {
    GeneratorKind.POWER_RESIDUE: power_residue,
    GeneratorKind.THRESHOLD: threshold,
    GeneratorKind.ORDERED_THRESHOLD: ordered_threshold,
    GeneratorKind.WALSH_NATURAL: walsh_natural,
    GeneratorKind.WALSH_SEQUENCY: walsh_sequency,
}


def generate(kind: GeneratorKind | str, n: int) -> SignMatrix:
    if isinstance(kind, str):
        kind = GeneratorKind.parse(kind)
    return _BUILDERS[kind](n)
