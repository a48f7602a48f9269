"""Sign vectors, sign matrices and the sequency functional.

Signs are bit-packed into Python ints: bit ``k`` is 0 for ``+1`` and 1 for
``-1``. A column of length ``n`` then has sequency equal to the popcount of
``bits ^ (bits >> 1)`` restricted to the low ``n - 1`` bits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class SequencyError(ValueError):
    """Base class for invalid inputs to the sequency toolkit."""


class DegenerateLengthError(SequencyError):
    pass


class NonFiniteEntryError(SequencyError):
    pass


def _low_mask(n: int) -> int:
    return (1 << n) - 1


def sequency_bits(bits: int, n: int) -> int:
    """Sign changes in a packed column of length ``n``."""
    if n < 2:
        return 0
    return ((bits ^ (bits >> 1)) & _low_mask(n - 1)).bit_count()


def flip_bits(bits: int, n: int) -> int:
    """1 if the first and last entries of a packed column differ."""
    return (bits ^ (bits >> (n - 1))) & 1


def _sign_bit(x) -> int:
    if x == 1:
        return 0
    if x == -1:
        return 1
    raise SequencyError(f"sign entries must be +1 or -1, got {x!r}")


@dataclass(frozen=True)
class SignVector:
    """Finite sequence over {+1, -1}, stored as a bitmask."""

    length: int
    bits: int

    def __post_init__(self) -> None:
        if self.length < 1:
            raise SequencyError("sign vector length must be >= 1")
        if not 0 <= self.bits < (1 << self.length):
            raise SequencyError("bitmask does not fit the vector length")

    @classmethod
    def from_signs(cls, signs: Iterable) -> SignVector:
        bits = 0
        n = 0
        for k, s in enumerate(signs):
            bits |= _sign_bit(s) << k
            n = k + 1
        return cls(n, bits)

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, k: int) -> int:
        if not -self.length <= k < self.length:
            raise IndexError(k)
        return -1 if (self.bits >> (k % self.length)) & 1 else 1

    def __iter__(self) -> Iterator[int]:
        for k in range(self.length):
            yield -1 if (self.bits >> k) & 1 else 1

    def __neg__(self) -> SignVector:
        return SignVector(self.length, self.bits ^ _low_mask(self.length))

    def reversed(self) -> SignVector:
        rev = int(format(self.bits, f"0{self.length}b")[::-1], 2)
        return SignVector(self.length, rev)

    def to_list(self) -> list[int]:
        return list(self)


@dataclass(frozen=True)
class SequencyProfile:
    """Per-column sequencies of a sign matrix."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.values)
        for v in self.values:
            if not 0 <= v <= max(n - 1, 0):
                raise SequencyError(f"sequency {v} outside [0, {n - 1}]")

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __getitem__(self, j: int) -> int:
        return self.values[j]

    def to_list(self) -> list[int]:
        return list(self.values)


@dataclass(frozen=True)
class SignMatrix:
    """Square sign matrix held column-major as packed columns.

    ``columns[j]`` has bit ``i`` set when element ``(i, j)`` is -1.
    """

    columns: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.columns)
        if n < 1:
            raise SequencyError("sign matrix must have at least one column")
        limit = 1 << n
        for c in self.columns:
            if not 0 <= c < limit:
                raise SequencyError("column bitmask does not fit the matrix size")

    @property
    def n(self) -> int:
        return len(self.columns)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> SignMatrix:
        n = len(rows)
        for r, row in enumerate(rows):
            if len(row) != n:
                raise SequencyError(
                    f"matrix must be square: row {r} has {len(row)} entries, expected {n}"
                )
        cols = [0] * n
        for i, row in enumerate(rows):
            for j, x in enumerate(row):
                cols[j] |= _sign_bit(x) << i
        return cls(tuple(cols))

    @classmethod
    def from_columns(cls, columns: Sequence) -> SignMatrix:
        packed = []
        for col in columns:
            v = col if isinstance(col, SignVector) else SignVector.from_signs(col)
            if v.length != len(columns):
                raise SequencyError(
                    f"matrix must be square: column of length {v.length} in a "
                    f"{len(columns)}-column matrix"
                )
            packed.append(v.bits)
        return cls(tuple(packed))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.n and 0 <= j < self.n):
            raise IndexError(ij)
        return -1 if (self.columns[j] >> i) & 1 else 1

    def column(self, j: int) -> SignVector:
        return SignVector(self.n, self.columns[j])

    def rows(self) -> list[list[int]]:
        return [[self[i, j] for j in range(self.n)] for i in range(self.n)]

    def permute_columns(self, perm: Sequence[int]) -> SignMatrix:
        """Column ``j`` of the result is column ``perm[j]`` of ``self``."""
        if sorted(perm) != list(range(self.n)):
            raise SequencyError("not a permutation of the column indices")
        return SignMatrix(tuple(self.columns[p] for p in perm))

    def negate_column(self, j: int) -> SignMatrix:
        cols = list(self.columns)
        cols[j] ^= _low_mask(self.n)
        return SignMatrix(tuple(cols))


def sequency(v: SignVector) -> int:
    """Number of adjacent sign changes in ``v``; 0 for a length-1 vector."""
    return sequency_bits(v.bits, v.length)


def derived_sequence(v: SignVector) -> tuple[int, ...]:
    """Indicator of ``v[k] != v[k+1]`` for k = 0..n-2.

    Its Hamming weight is the sequency of ``v``.
    """
    if v.length < 2:
        raise DegenerateLengthError("degenerate length: derived sequence of a length-1 vector is empty")
    d = v.bits ^ (v.bits >> 1)
    return tuple((d >> k) & 1 for k in range(v.length - 1))


def boundary_flip(v: SignVector) -> int:
    return flip_bits(v.bits, v.length)


def project_signs(m) -> SignMatrix:
    """Map a real square matrix to signs; zero maps to +1.

    Accepts any row-indexable 2-D container (nested lists, numpy arrays).
    """
    rows = [list(r) for r in m]
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise SequencyError("project_signs requires a non-empty square matrix")
    cols = [0] * n
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            x = float(x)
            if not math.isfinite(x):
                raise NonFiniteEntryError(f"non-finite entry {x!r} at ({i}, {j})")
            if x < 0:
                cols[j] |= 1 << i
    return SignMatrix(tuple(cols))


def profile(a: SignMatrix) -> SequencyProfile:
    n = a.n
    return SequencyProfile(tuple(sequency_bits(c, n) for c in a.columns))
