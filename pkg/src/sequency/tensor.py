"""Kronecker products of sign matrices and closed-form column sequencies.

Column ``k`` of ``A (x) B`` with ``k = q0*k1 + k0`` is column ``k1`` of ``A``
with each entry replaced by that sign times column ``k0`` of ``B``. Its
sequency depends only on per-column sequencies and boundary flips of the
factors, which is what :class:`FactorSummary` carries.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import reduce
from typing import Sequence

from .core import SequencyError, SignMatrix, flip_bits, sequency_bits

# Products with more entries than this are verified column by column.
MATERIALIZE_LIMIT = 1 << 20


def _kron_bits(a_bits: int, q1: int, b_bits: int, q0: int) -> int:
    neg = b_bits ^ ((1 << q0) - 1)
    out = 0
    for i1 in range(q1):
        out |= (neg if (a_bits >> i1) & 1 else b_bits) << (i1 * q0)
    return out


def kronecker(a: SignMatrix, b: SignMatrix) -> SignMatrix:
    q1, q0 = a.n, b.n
    return SignMatrix(
        tuple(_kron_bits(ca, q1, cb, q0) for ca in a.columns for cb in b.columns)
    )


def kronecker_power(a: SignMatrix, n: int) -> SignMatrix:
    """``a`` tensored with itself ``n`` times; ``n = 0`` gives [[+1]]."""
    if n < 0:
        raise SequencyError("Kronecker power must be >= 0")
    return reduce(kronecker, [a] * n, SignMatrix((0,)))


def kron_column(factors: Sequence[SignMatrix], digits: Sequence[int]) -> tuple[int, int]:
    """Packed column of ``factors[0] (x) ... (x) factors[-1]`` without expanding.

    ``digits`` are most-significant first, one per factor. Returns
    ``(bits, length)``.
    """
    if len(digits) != len(factors):
        raise SequencyError("need one digit per factor")
    bits, length = 0, 1
    for f, k in zip(factors, digits):
        if not 0 <= k < f.n:
            raise SequencyError(f"digit {k} out of range for a {f.n}x{f.n} factor")
        bits = _kron_bits(bits, length, f.columns[k], f.n)
        length *= f.n
    return bits, length


@dataclass(frozen=True)
class MixedRadixIndex:
    """Column address ``k_{n-1} ... k_1 k_0`` in an n-fold product.

    ``digits`` and ``radices`` are both most-significant first.
    """

    digits: tuple[int, ...]
    radices: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.digits) != len(self.radices) or not self.digits:
            raise SequencyError("digits and radices must be non-empty and of equal length")
        for k, q in zip(self.digits, self.radices):
            if q < 1 or not 0 <= k < q:
                raise SequencyError(f"digit {k} invalid for radix {q}")

    @classmethod
    def uniform(cls, digits: Sequence[int], q: int) -> MixedRadixIndex:
        return cls(tuple(digits), (q,) * len(digits))

    @classmethod
    def from_value(cls, value: int, radices: Sequence[int]) -> MixedRadixIndex:
        radices = tuple(radices)
        total = 1
        for q in radices:
            total *= q
        if not 0 <= value < total:
            raise SequencyError(f"index {value} out of range [0, {total})")
        digits = []
        for q in reversed(radices):
            value, k = divmod(value, q)
            digits.append(k)
        return cls(tuple(reversed(digits)), radices)

    @property
    def value(self) -> int:
        v = 0
        for k, q in zip(self.digits, self.radices):
            v = v * q + k
        return v


@dataclass(frozen=True)
class FactorSummary:
    """Per-column sequency and boundary flip of one square factor."""

    sequencies: tuple[int, ...]
    flips: tuple[int, ...]

    def __post_init__(self) -> None:
        q = len(self.sequencies)
        if q < 1 or len(self.flips) != q:
            raise SequencyError("sequencies and flips must have one entry per column")
        if any(not 0 <= s <= q - 1 for s in self.sequencies):
            raise SequencyError("sequency out of range for factor size")
        if any(p not in (0, 1) for p in self.flips):
            raise SequencyError("boundary flips must be 0 or 1")

    @property
    def q(self) -> int:
        return len(self.sequencies)

    @classmethod
    def from_matrix(cls, a: SignMatrix) -> FactorSummary:
        n = a.n
        return cls(
            tuple(sequency_bits(c, n) for c in a.columns),
            tuple(flip_bits(c, n) for c in a.columns),
        )

    def kron(self, other: FactorSummary) -> FactorSummary:
        """Summary of ``A (x) B`` where ``self`` describes A, ``other`` B."""
        seqs, flips = [], []
        for k1 in range(self.q):
            for k0 in range(other.q):
                seqs.append(_pair(self.q, self.sequencies[k1], other.sequencies[k0], other.flips[k0]))
                flips.append(self.flips[k1] ^ other.flips[k0])
        return FactorSummary(tuple(seqs), tuple(flips))


def _pair(q1: int, s_hi: int, s_lo: int, p_lo: int) -> int:
    # Parity decides the sign of the high factor's contribution.
    if p_lo:
        return q1 * s_lo + (q1 - 1) - s_hi
    return q1 * s_lo + s_hi


def _require_q2(s: FactorSummary) -> None:
    if s.q < 2:
        raise SequencyError("closed-form prediction needs factors with q >= 2")


def predict_pair(sa: FactorSummary, sb: FactorSummary, k1: int, k0: int) -> int:
    """Sequency of column ``q0*k1 + k0`` of ``A (x) B`` from the summaries."""
    _require_q2(sa)
    _require_q2(sb)
    if not 0 <= k1 < sa.q or not 0 <= k0 < sb.q:
        raise SequencyError(f"column ({k1}, {k0}) out of range for {sa.q}x{sb.q} product")
    return _pair(sa.q, sa.sequencies[k1], sb.sequencies[k0], sb.flips[k0])


def predict_pair_special(sa: FactorSummary, k1: int, k0: int) -> int:
    """``A (x) A`` case of :func:`predict_pair`."""
    _require_q2(sa)
    if not 0 <= k1 < sa.q or not 0 <= k0 < sa.q:
        raise SequencyError(f"column ({k1}, {k0}) out of range for q={sa.q}")
    q = sa.q
    p = sa.flips[k0]
    sign = -1 if p else 1
    return q * sa.sequencies[k0] + (q - 1) * p + sign * sa.sequencies[k1]


def predict_nfold(sa: FactorSummary, index: MixedRadixIndex) -> int:
    """Sequency of column ``index.value`` of the n-fold power of A.

    Digit ``r`` (counted from the least significant end) contributes
    ``q^(n-1-r) * S(k_r) + (q^(n-1-r) - 1) * p(k_r)``, with a minus sign
    when the flips of the less significant digits sum to an odd number.
    """
    _require_q2(sa)
    q = sa.q
    if any(r != q for r in index.radices):
        raise SequencyError(f"index radices {index.radices} do not match factor size {q}")
    n = len(index.digits)
    total = 0
    parity = 0
    for r, k in enumerate(reversed(index.digits)):
        w = q ** (n - 1 - r)
        term = w * sa.sequencies[k] + (w - 1) * sa.flips[k]
        total += -term if parity else term
        parity ^= sa.flips[k]
    return total


def mod_residue_profile_5(j: int) -> int:
    """Piecewise mod-5 form of the column sequencies of A (x) A, A the 5x5 ordered matrix."""
    if not 0 <= j <= 24:
        raise SequencyError("column index must be in 0..24")
    hi, r = divmod(j, 5)
    return (hi, 9 - hi, 10 + hi, 19 - hi, 20 + hi)[r]


def direct_sequencies(
    factors: Sequence[SignMatrix], columns: Sequence[int] | None = None
) -> dict[int, int]:
    """Sequencies of selected product columns, counted from the actual signs.

    The whole product is built only when it has at most ``MATERIALIZE_LIMIT``
    entries; otherwise each requested column is streamed on its own.
    """
    radices = [f.n for f in factors]
    size = 1
    for q in radices:
        size *= q
    if columns is None:
        columns = range(size)
    if size * size <= MATERIALIZE_LIMIT:
        prod = reduce(kronecker, factors)
        return {c: sequency_bits(prod.columns[c], size) for c in columns}
    out = {}
    for c in columns:
        bits, length = kron_column(factors, MixedRadixIndex.from_value(c, radices).digits)
        out[c] = sequency_bits(bits, length)
    return out


def sample_columns(total: int, k: int, seed: int = 0) -> list[int]:
    """Sorted, seeded sample of at most ``k`` distinct column indices."""
    if k >= total:
        return list(range(total))
    return sorted(random.Random(seed).sample(range(total), k))
