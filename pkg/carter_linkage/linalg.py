"""Exact rational linear algebra over small dense matrices.

Matrices are immutable wrappers around tuples of ``Fraction`` values.
Arithmetic is delegated to numpy object arrays, so every product, sum and
elimination step stays in exact rational arithmetic.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import numpy as np

from .exceptions import DimensionError, ParseError, ShapeError, SingularMatrixError

_LOGGER = logging.getLogger(__name__)

Rational = Fraction
Scalar = Union[int, Fraction, str]
Vector = tuple[Fraction, ...]


def to_rational(value: Scalar) -> Fraction:
    """Convert an integer, Fraction or ``p/q`` string to a reduced Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (bool, float)):
        raise ParseError(f"refusing inexact value {value!r}")
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as err:
            raise ParseError(f"not a rational number: {value!r}") from err
    raise ParseError(f"not a rational number: {value!r}")


def to_vector(values: Iterable[Scalar]) -> Vector:
    """Convert an iterable of scalars into an exact rational vector."""
    return tuple(to_rational(v) for v in values)


def format_rational(value: Fraction | int) -> str:
    """Format a rational as ``p/q`` (or ``p`` when integral)."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class RatMatrix:
    """Immutable matrix of exact rationals, stored row-major."""

    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(to_rational(x) for x in row) for row in self.entries)
        if rows and any(len(row) != len(rows[0]) for row in rows):
            raise ShapeError("rows of a matrix must all have the same length")
        object.__setattr__(self, "entries", rows)

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[Scalar]]) -> RatMatrix:
        """Build a matrix from nested iterables of scalars."""
        return cls(tuple(tuple(row) for row in rows))

    @classmethod
    def from_array(cls, array: np.ndarray) -> RatMatrix:
        """Build a matrix from a two-dimensional numpy array."""
        if array.ndim != 2:
            raise ShapeError(f"expected a 2-d array, got shape {array.shape}")
        return cls(tuple(tuple(row) for row in array.tolist()))

    @classmethod
    def identity(cls, n: int) -> RatMatrix:
        return cls(tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)))

    @classmethod
    def diagonal(cls, values: Sequence[Scalar]) -> RatMatrix:
        n = len(values)
        return cls(
            tuple(
                tuple(to_rational(values[i]) if i == j else Fraction(0) for j in range(n))
                for i in range(n)
            )
        )

    @classmethod
    def block_diagonal(cls, blocks: Sequence[RatMatrix]) -> RatMatrix:
        """Direct sum of square blocks."""
        size = sum(b.rows for b in blocks)
        out = [[Fraction(0)] * size for _ in range(size)]
        offset = 0
        for block in blocks:
            if not block.is_square:
                raise ShapeError("direct sum needs square blocks")
            for i in range(block.rows):
                for j in range(block.cols):
                    out[offset + i][offset + j] = block.entries[i][j]
            offset += block.rows
        return cls.from_rows(out)

    @classmethod
    def parse(cls, text: str) -> RatMatrix:
        """Parse the text form ``"2 -1; -1 2"`` (rows by ``;``, entries by spaces)."""
        rows = [row.split() for row in text.strip().split(";") if row.strip()]
        if not rows:
            raise ParseError("empty matrix text")
        try:
            return cls.from_rows(rows)
        except ShapeError as err:
            raise ParseError(f"ragged matrix text: {err}") from err

    # ------------------------------------------------------------------
    # Shape
    # ------------------------------------------------------------------

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def is_symmetric(self) -> bool:
        """True only when the transpose equals the matrix entrywise."""
        return self.is_square and all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(self.rows)
            for j in range(i + 1, self.cols)
        )

    @property
    def is_integral(self) -> bool:
        return all(x.denominator == 1 for row in self.entries for x in row)

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        i, j = index
        return self.entries[i][j]

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.entries)

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def to_array(self) -> np.ndarray:
        """Return a numpy object array holding the Fraction entries."""
        array = np.empty(self.shape, dtype=object)
        for i, row in enumerate(self.entries):
            for j, value in enumerate(row):
                array[i, j] = value
        return array

    def transpose(self) -> RatMatrix:
        return RatMatrix(tuple(zip(*self.entries))) if self.entries else self

    @property
    def T(self) -> RatMatrix:  # noqa: N802
        return self.transpose()

    def __matmul__(self, other: RatMatrix) -> RatMatrix:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        return RatMatrix.from_array(np.dot(self.to_array(), other.to_array()))

    def __add__(self, other: RatMatrix) -> RatMatrix:
        if self.shape != other.shape:
            raise ShapeError(f"cannot add {self.shape} and {other.shape}")
        return RatMatrix.from_array(self.to_array() + other.to_array())

    def __sub__(self, other: RatMatrix) -> RatMatrix:
        if self.shape != other.shape:
            raise ShapeError(f"cannot subtract {other.shape} from {self.shape}")
        return RatMatrix.from_array(self.to_array() - other.to_array())

    def __neg__(self) -> RatMatrix:
        return self.scale(-1)

    def scale(self, factor: Scalar) -> RatMatrix:
        k = to_rational(factor)
        return RatMatrix(tuple(tuple(k * x for x in row) for row in self.entries))

    def apply(self, vector: Sequence[Scalar]) -> Vector:
        """Matrix-vector product."""
        v = to_vector(vector)
        if len(v) != self.cols:
            raise DimensionError(f"vector of length {len(v)} for a matrix with {self.cols} columns")
        return tuple(sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in self.entries)

    # ------------------------------------------------------------------
    # Conversion
    # ------------------------------------------------------------------

    def to_int_rows(self) -> list[list[int]]:
        """Integer entries as nested lists; raises when an entry is fractional."""
        if not self.is_integral:
            raise ShapeError("matrix has non-integral entries")
        return [[int(x) for x in row] for row in self.entries]

    def to_text_rows(self) -> list[list[str]]:
        return [[format_rational(x) for x in row] for row in self.entries]

    def to_text(self) -> str:
        """Inverse of :meth:`parse`."""
        return "; ".join(" ".join(row) for row in self.to_text_rows())

    def __str__(self) -> str:
        cells = self.to_text_rows()
        width = max((len(c) for row in cells for c in row), default=1)
        return "\n".join("[" + " ".join(c.rjust(width) for c in row) + "]" for row in cells)


@dataclass(frozen=True)
class QuadraticForm:
    """Quadratic form Q(v) = <Av, v> with a symmetric rational matrix."""

    matrix: RatMatrix

    def __post_init__(self) -> None:
        if not self.matrix.is_symmetric:
            raise ShapeError("quadratic form needs a symmetric matrix")

    @property
    def dimension(self) -> int:
        return self.matrix.rows

    def __call__(self, vector: Sequence[Scalar]) -> Fraction:
        return eval_form(self, vector)

    def inverse(self) -> QuadraticForm:
        """The inverse quadratic form (matrix inverted)."""
        return QuadraticForm(invert(self.matrix))


def _require_square(m: RatMatrix) -> None:
    if not m.is_square:
        raise ShapeError(f"expected a square matrix, got {m.shape}")


def _find_pivot(array: np.ndarray, column: int, start: int) -> int | None:
    for r in range(start, array.shape[0]):
        if array[r, column] != 0:
            return r
    return None


def _swap_rows(array: np.ndarray, i: int, j: int) -> None:
    if i != j:
        array[[i, j]] = array[[j, i]]


def det(m: RatMatrix) -> Fraction:
    """Exact determinant by rational Gaussian elimination."""
    _require_square(m)
    n = m.rows
    if n == 0:
        return Fraction(1)
    work = m.to_array()
    result = Fraction(1)
    for col in range(n):
        pivot = _find_pivot(work, col, col)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            _swap_rows(work, pivot, col)
            result = -result
        result *= work[col, col]
        for r in range(col + 1, n):
            if work[r, col] != 0:
                work[r, :] -= (work[r, col] / work[col, col]) * work[col, :]
    return result


def _row_reduce(work: np.ndarray, columns: int) -> list[int]:
    """Reduce ``work`` in place to reduced row echelon form over ``columns``.

    Returns the pivot columns.
    """
    pivots: list[int] = []
    row = 0
    for col in range(columns):
        if row >= work.shape[0]:
            break
        pivot = _find_pivot(work, col, row)
        if pivot is None:
            continue
        _swap_rows(work, pivot, row)
        work[row, :] /= work[row, col]
        for r in range(work.shape[0]):
            if r != row and work[r, col] != 0:
                work[r, :] -= work[r, col] * work[row, :]
        pivots.append(col)
        row += 1
    return pivots


def rank(m: RatMatrix) -> int:
    """Exact rank."""
    if m.rows == 0:
        return 0
    work = m.to_array()
    return len(_row_reduce(work, m.cols))


def invert(m: RatMatrix) -> RatMatrix:
    """Exact inverse; raises :class:`SingularMatrixError` carrying the rank."""
    _require_square(m)
    n = m.rows
    work = np.hstack((m.to_array(), RatMatrix.identity(n).to_array()))
    pivots = _row_reduce(work, n)
    if len(pivots) < n:
        raise SingularMatrixError(len(pivots), n)
    return RatMatrix.from_array(work[:, n:])


def eval_form(q: QuadraticForm | RatMatrix, vector: Sequence[Scalar]) -> Fraction:
    """Evaluate <Av, v> exactly."""
    matrix = q.matrix if isinstance(q, QuadraticForm) else q
    v = to_vector(vector)
    if len(v) != matrix.rows:
        raise DimensionError(f"vector of length {len(v)} for a form of dimension {matrix.rows}")
    av = matrix.apply(v)
    return sum((a * b for a, b in zip(av, v)), Fraction(0))


def congruent(t: RatMatrix, b: RatMatrix) -> RatMatrix:
    """Return ᵗT·B·T."""
    _require_square(b)
    if t.rows != b.rows:
        raise ShapeError(f"cannot form congruence of {b.shape} by {t.shape}")
    return t.transpose() @ b @ t


@dataclass(frozen=True)
class SolveResult:
    """Outcome of :func:`rank_and_solve`."""

    rank: int
    solution: Vector | None

    @property
    def consistent(self) -> bool:
        return self.solution is not None


def rank_and_solve(m: RatMatrix, rhs: Sequence[Scalar]) -> SolveResult:
    """Exact rank of ``m`` and one solution of ``m x = rhs`` when it exists.

    Free variables of the solution are set to zero.
    """
    b = to_vector(rhs)
    if len(b) != m.rows:
        raise DimensionError(f"right-hand side of length {len(b)} for {m.rows} rows")
    column = np.empty((m.rows, 1), dtype=object)
    for i, value in enumerate(b):
        column[i, 0] = value
    work = np.hstack((m.to_array(), column))
    pivots = _row_reduce(work, m.cols)
    r = len(pivots)
    if any(work[i, m.cols] != 0 for i in range(r, m.rows)):
        return SolveResult(rank=r, solution=None)
    solution = [Fraction(0)] * m.cols
    for i, col in enumerate(pivots):
        solution[col] = work[i, m.cols]
    return SolveResult(rank=r, solution=tuple(solution))


def nullspace(m: RatMatrix) -> list[Vector]:
    """Basis of the right kernel {x : m x = 0}."""
    work = m.to_array()
    pivots = _row_reduce(work, m.cols)
    free = [c for c in range(m.cols) if c not in pivots]
    basis: list[Vector] = []
    for f in free:
        x = [Fraction(0)] * m.cols
        x[f] = Fraction(1)
        for i, col in enumerate(pivots):
            x[col] = -work[i, f]
        basis.append(tuple(x))
    return basis


def integer_nullspace(m: RatMatrix) -> list[tuple[int, ...]]:
    """Kernel basis scaled to primitive integer vectors."""
    out = []
    for vec in nullspace(m):
        lcm = 1
        for x in vec:
            lcm = math.lcm(lcm, x.denominator)
        scaled = [int(x * lcm) for x in vec]
        gcd = math.gcd(*scaled) or 1
        out.append(tuple(x // gcd for x in scaled))
    return out


def leading_minors(m: RatMatrix) -> list[Fraction]:
    """Leading principal minors det(M[:k, :k]) for k = 1..n."""
    _require_square(m)
    return [
        det(RatMatrix(tuple(row[:k] for row in m.entries[:k])))
        for k in range(1, m.rows + 1)
    ]


def is_positive_definite(m: RatMatrix) -> bool:
    """Sylvester's criterion on a symmetric matrix."""
    if not m.is_symmetric:
        return False
    return all(minor > 0 for minor in leading_minors(m))


def solve_integer(m: RatMatrix, rhs: Sequence[Scalar]) -> tuple[int, ...] | None:
    """Solve ``m x = rhs`` when the solution is unique and integral."""
    result = rank_and_solve(m, rhs)
    if result.solution is None or result.rank != m.cols:
        return None
    if any(x.denominator != 1 for x in result.solution):
        return None
    return tuple(int(x) for x in result.solution)
