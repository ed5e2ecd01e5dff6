"""Exact rational scalars and dense linear algebra over Q."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

Rational = Fraction


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def _size(x: Fraction) -> int:
    return x.numerator.bit_length() + x.denominator.bit_length()


@dataclass(frozen=True)
class RatMatrix:
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], ncols: Optional[int] = None) -> "RatMatrix":
        rows = [list(r) for r in rows]
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
        entries = tuple(as_rational(x) for r in rows for x in r)
        return cls(len(rows), ncols, entries)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], nrows: Optional[int] = None) -> "RatMatrix":
        columns = [list(c) for c in columns]
        if nrows is None:
            nrows = len(columns[0]) if columns else 0
        for c in columns:
            if len(c) != nrows:
                raise ValueError("ragged columns")
        return cls.from_rows(
            [[c[i] for c in columns] for i in range(nrows)], ncols=len(columns))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls(n, n, tuple(Fraction(int(i == j)) for i in range(n) for j in range(n)))

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple:
        return self.entries[j::self.cols] if self.cols else ()

    def to_rows(self) -> list:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "RatMatrix":
        return RatMatrix.from_rows(
            [self.column(j) for j in range(self.cols)], ncols=self.rows)

    def apply(self, vec: Sequence) -> tuple:
        """Matrix-vector product."""
        if len(vec) != self.cols:
            raise ValueError("dimension mismatch")
        vec = [as_rational(x) for x in vec]
        return tuple(sum((a * b for a, b in zip(self.row(i), vec)), Fraction(0))
                     for i in range(self.rows))


def _rref_rows(rows: list, ncols: int) -> tuple:
    """In-place RREF on a list of Fraction lists; returns pivot columns."""
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        best = None
        for i in range(r, nrows):
            x = rows[i][c]
            if x and (best is None or _size(x) < _size(rows[best][c])):
                best = i
        if best is None:
            continue
        rows[r], rows[best] = rows[best], rows[r]
        piv = rows[r][c]
        if piv != 1:
            inv = 1 / piv
            rows[r] = [x * inv for x in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    rows[i] = [x - f * y for x, y in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return tuple(pivots)


def rref(m: RatMatrix) -> tuple:
    """Reduced row-echelon form and rank of ``m``.

    Pivots are chosen by smallest bit size among the candidate rows to keep
    intermediate coefficients small.
    """
    rows = m.to_rows()
    pivots = _rref_rows(rows, m.cols)
    return RatMatrix.from_rows(rows, ncols=m.cols) if m.rows else m, len(pivots)


def rank(m: RatMatrix) -> int:
    return rref(m)[1]


def rank_of_vectors(vectors: Iterable[Sequence], length: int) -> int:
    rows = [[as_rational(x) for x in v] for v in vectors]
    for v in rows:
        if len(v) != length:
            raise ValueError("dimension mismatch")
    return len(_rref_rows(rows, length))


def solve_in_span(target: Sequence, columns: RatMatrix) -> Optional[tuple]:
    """Coefficients ``c`` with ``columns @ c == target``, or None if impossible."""
    if len(target) != columns.rows:
        raise ValueError(
            f"target has length {len(target)}, matrix has {columns.rows} rows")
    n = columns.cols
    rows = [list(columns.row(i)) + [as_rational(target[i])] for i in range(columns.rows)]
    pivots = _rref_rows(rows, n + 1)
    if pivots and pivots[-1] == n:
        return None
    coeffs = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        coeffs[c] = rows[i][n]
    return tuple(coeffs)


def nullspace(m: RatMatrix) -> list:
    """Basis of {x : m x = 0} as a list of coefficient tuples."""
    rows = m.to_rows()
    pivots = _rref_rows(rows, m.cols)
    free = [c for c in range(m.cols) if c not in set(pivots)]
    basis = []
    for f in free:
        x = [Fraction(0)] * m.cols
        x[f] = Fraction(1)
        for i, p in enumerate(pivots):
            x[p] = -rows[i][f]
        basis.append(tuple(x))
    return basis
