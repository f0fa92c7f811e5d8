"""Dense exact linear algebra over a prime field GF(p).

Matrices are small (at most a few thousand entries), so rows are plain
Python lists of ints reduced into ``[0, p)``.  ``PrimeMatrix`` is the
immutable value passed between modules; the ``*_rows`` helpers work on
mutable row lists and are what the hot loops call directly.
"""

from __future__ import annotations

import random
from collections.abc import Sequence
from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError, InputError

DEFAULT_PRIME = 2_147_483_647


@lru_cache(maxsize=64)
def check_prime(p: int) -> int:
    """Return ``p`` if it is prime, else raise :class:`InputError`."""
    from sympy import isprime

    if not isinstance(p, int) or not isprime(p):
        raise InputError(f"modulus {p!r} is not prime")
    return p


def inverse(x: int, p: int) -> int:
    x %= p
    if x == 0:
        raise ZeroDivisionError("zero has no inverse")
    return pow(x, -1, p)


@dataclass(frozen=True)
class PrimeMatrix:
    p: int
    data: tuple[tuple[int, ...], ...]
    ncols: int

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], p: int = DEFAULT_PRIME, ncols: int | None = None) -> PrimeMatrix:
        data = tuple(tuple(int(x) % p for x in row) for row in rows)
        if ncols is None:
            ncols = len(data[0]) if data else 0
        if any(len(row) != ncols for row in data):
            raise InputError("ragged matrix rows")
        return cls(p, data, ncols)

    @classmethod
    def zeros(cls, rows: int, cols: int, p: int = DEFAULT_PRIME) -> PrimeMatrix:
        return cls(p, tuple((0,) * cols for _ in range(rows)), cols)

    @classmethod
    def identity(cls, size: int, p: int = DEFAULT_PRIME) -> PrimeMatrix:
        return cls(p, tuple(tuple(int(i == j) for j in range(size)) for i in range(size)), size)

    @property
    def nrows(self) -> int:
        return len(self.data)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.data[i][j]

    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.data]

    def transpose(self) -> PrimeMatrix:
        return PrimeMatrix(self.p, tuple(zip(*self.data)) if self.data else (), self.nrows)

    def __matmul__(self, other: PrimeMatrix) -> PrimeMatrix:
        if self.ncols != other.nrows or self.p != other.p:
            raise DomainError("incompatible matrices")
        p = self.p
        cols = other.transpose().data
        out = tuple(tuple(sum(a * b for a, b in zip(row, col)) % p for col in cols) for row in self.data)
        return PrimeMatrix(p, out, other.ncols)


def eliminate_rows(rows: list[list[int]], p: int, stop_at: int | None = None) -> list[int]:
    """Row-reduce ``rows`` in place and return the pivot column indices.

    Columns are scanned left to right, so the pivots are exactly the
    columns not in the span of the columns before them.  ``stop_at`` ends
    the scan once that many pivots are found.
    """
    pivots: list[int] = []
    if not rows:
        return pivots
    ncols = len(rows[0])
    top = 0
    nrows = len(rows)
    limit = nrows if stop_at is None else min(stop_at, nrows)
    for c in range(ncols):
        if top >= limit:
            break
        piv = None
        for i in range(top, nrows):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[top], rows[piv] = rows[piv], rows[top]
        prow = rows[top]
        inv = pow(prow[c], -1, p)
        if inv != 1:
            prow[c:] = [x * inv % p for x in prow[c:]]
        for i in range(top + 1, nrows):
            row = rows[i]
            factor = row[c]
            if factor:
                row[c:] = [(x - factor * y) % p for x, y in zip(row[c:], prow[c:])]
        pivots.append(c)
        top += 1
    return pivots


def rank_rows(rows: Sequence[Sequence[int]], p: int) -> int:
    if not rows or not rows[0]:
        return 0
    work = [list(r) for r in rows]
    return len(eliminate_rows(work, p))


def rank(m: PrimeMatrix) -> int:
    # eliminate along the shorter side
    if m.ncols < m.nrows:
        return rank_rows(m.transpose().data, m.p)
    return rank_rows(m.data, m.p)


def greedy_pivot_columns(m: PrimeMatrix) -> list[int]:
    """Columns not in the span of the previously selected ones, in index order."""
    return eliminate_rows(m.rows(), m.p)


def det_rows(rows: Sequence[Sequence[int]], p: int) -> int:
    work = [list(r) for r in rows]
    size = len(work)
    sign = 1
    result = 1
    for c in range(size):
        piv = next((i for i in range(c, size) if work[i][c]), None)
        if piv is None:
            return 0
        if piv != c:
            work[c], work[piv] = work[piv], work[c]
            sign = -sign
        prow = work[c]
        pv = prow[c]
        result = result * pv % p
        inv = pow(pv, -1, p)
        for i in range(c + 1, size):
            row = work[i]
            factor = row[c] * inv % p
            if factor:
                for j in range(c, size):
                    row[j] = (row[j] - factor * prow[j]) % p
    return result * sign % p


def det(m: PrimeMatrix) -> int:
    if m.nrows != m.ncols:
        raise DomainError("determinant of a non-square matrix")
    return det_rows(m.data, m.p)


def minor_det(g: PrimeMatrix, rowset: Sequence[int], colset: Sequence[int]) -> int:
    """Determinant of ``g`` restricted to 1-based ``rowset`` x ``colset``."""
    if len(rowset) != len(colset):
        raise DomainError("minor needs equally many rows and columns")
    if len(rowset) > min(g.nrows, g.ncols):
        raise DomainError("minor larger than the matrix")
    if not rowset:
        return 1
    sub = [[g.data[i - 1][j - 1] for j in colset] for i in rowset]
    return det_rows(sub, g.p)


def random_matrix(rows: int, cols: int, seed: int, p: int = DEFAULT_PRIME) -> PrimeMatrix:
    """Uniform entries in ``[0, p)`` from a generator seeded by ``(seed, p, rows, cols)``."""
    rng = random.Random(f"{seed}:{p}:{rows}:{cols}")
    data = tuple(tuple(rng.randrange(p) for _ in range(cols)) for _ in range(rows))
    return PrimeMatrix(p, data, cols)
