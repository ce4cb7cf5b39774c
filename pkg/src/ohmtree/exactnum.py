"""Exact scalars and dense rational linear algebra.

Scalars are plain ``int`` (unbounded in Python) and ``fractions.Fraction``,
which is canonical by construction: always reduced, denominator positive.
That canonicity is what lets every identity in this package be checked
against literal zero instead of a tolerance.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import lcm
from typing import Sequence, Union

Scalar = Union[int, Fraction]


def rational(value: Union[int, str, Fraction]) -> Fraction:
    """Coerce an int, a string like ``"3/4"``, or a Fraction to a Fraction.

    Floats are rejected on purpose: silently converting binary floats would
    poison exact residual checks.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"not an exact scalar: {value!r}")


class SingularMatrixError(ValueError):
    """Elimination found no usable pivot; ``pivot`` is the failing column."""

    def __init__(self, pivot: int):
        super().__init__(f"singular matrix: no pivot available for column {pivot}")
        self.pivot = pivot


class Matrix:
    """Dense matrix with Fraction entries, row-major, treated as immutable."""

    __slots__ = ("rows", "cols", "_m")

    def __init__(self, entries: Sequence[Sequence[Scalar]]):
        m = tuple(tuple(rational(x) for x in row) for row in entries)
        self.rows = len(m)
        self.cols = len(m[0]) if m else 0
        if any(len(row) != self.cols for row in m):
            raise ValueError("ragged rows")
        self._m = m

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def filled(cls, rows: int, cols: int, value: Scalar = 0) -> "Matrix":
        v = rational(value)
        return cls([[v] * cols for _ in range(rows)])

    def __getitem__(self, key) -> Fraction:
        i, j = key
        return self._m[i][j]

    def row(self, i: int) -> tuple:
        return self._m[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self._m == other._m

    def __hash__(self):
        return hash(self._m)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self._m)
        return f"Matrix({self.rows}x{self.cols}: {body})"

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self._m, other._m)
            ]
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self._m, other._m)
            ]
        )

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise ValueError(
                    f"dimension mismatch: {self.rows}x{self.cols} * "
                    f"{other.rows}x{other.cols}"
                )
            cols = other.transpose()._m
            return Matrix(
                [
                    [sum(a * b for a, b in zip(row, col)) for col in cols]
                    for row in self._m
                ]
            )
        c = rational(other)
        return Matrix([[c * x for x in row] for row in self._m])

    def __rmul__(self, other):
        return self.__mul__(other)

    def transpose(self) -> "Matrix":
        return Matrix(list(zip(*self._m))) if self.rows else Matrix([])

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and self == self.transpose()

    def drop(self, i: int, j: int) -> "Matrix":
        """Matrix with row i and column j removed."""
        return Matrix(
            [
                [x for cj, x in enumerate(row) if cj != j]
                for ri, row in enumerate(self._m)
                if ri != i
            ]
            if self.rows > 1
            else []
        )

    def _check_same_shape(self, other: "Matrix") -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError(
                f"dimension mismatch: {self.rows}x{self.cols} vs "
                f"{other.rows}x{other.cols}"
            )

    def _check_square(self) -> None:
        if self.rows != self.cols:
            raise ValueError(f"not square: {self.rows}x{self.cols}")

    def det(self) -> Fraction:
        """Exact determinant via fraction-free (Bareiss) elimination.

        Rows are scaled to integers first, so for integer input every
        intermediate value stays an integer; the scaling is divided back out
        at the end.  The empty 0x0 matrix has determinant 1.
        """
        self._check_square()
        n = self.rows
        if n == 0:
            return Fraction(1)
        scale = 1
        work = []
        for row in self._m:
            d = reduce(lcm, (x.denominator for x in row), 1)
            scale *= d
            work.append([int(x * d) for x in row])
        sign = 1
        prev = 1
        for k in range(n - 1):
            if work[k][k] == 0:
                swap = next(
                    (r for r in range(k + 1, n) if work[r][k] != 0), None
                )
                if swap is None:
                    return Fraction(0)
                work[k], work[swap] = work[swap], work[k]
                sign = -sign
            pivot = work[k][k]
            for i in range(k + 1, n):
                fall = work[i][k]
                for j in range(k + 1, n):
                    # Bareiss update: division by the previous pivot is exact.
                    work[i][j] = (work[i][j] * pivot - fall * work[k][j]) // prev
                work[i][k] = 0
            prev = pivot
        return Fraction(sign * work[n - 1][n - 1], scale)

    def inverse(self) -> "Matrix":
        """Exact inverse by Gauss-Jordan elimination.

        Raises SingularMatrixError (carrying the failing pivot column) when
        no nonzero pivot exists.
        """
        self._check_square()
        n = self.rows
        a = [list(row) for row in self._m]
        b = [
            [Fraction(int(i == j)) for j in range(n)] for i in range(n)
        ]
        for col in range(n):
            piv = next((r for r in range(col, n) if a[r][col] != 0), None)
            if piv is None:
                raise SingularMatrixError(col)
            if piv != col:
                a[col], a[piv] = a[piv], a[col]
                b[col], b[piv] = b[piv], b[col]
            inv_p = 1 / a[col][col]
            a[col] = [x * inv_p for x in a[col]]
            b[col] = [x * inv_p for x in b[col]]
            for r in range(n):
                if r == col or a[r][col] == 0:
                    continue
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                b[r] = [x - f * y for x, y in zip(b[r], b[col])]
        return Matrix(b)
