"""Exact rational linear algebra over arbitrary-precision fractions.

Scalars are ``fractions.Fraction`` values: always in lowest terms with a
positive denominator, so structural equality is value equality and there
is a single canonical zero. Every identity elsewhere in the package is
therefore an exact equality test with zero tolerance.

Elimination (determinant, solving, inversion, nullspace) runs fraction-free
in Bareiss form on denominator-cleared integer rows, which keeps the
intermediate entries at single-minor size instead of letting numerators
compound quadratically.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence, Union

from .errors import NoSolution, NotInvertible, ShapeError

Scalar = Union[Fraction, int, str]

_RATIONAL_RE = re.compile(r"^-?\d+(/[1-9]\d*)?$")

_ZERO = Fraction(0)


def rational(value: Scalar) -> Fraction:
    """Coerce an int, Fraction, or "p/q" string to a canonical Fraction."""
    if type(value) is Fraction:
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, Fraction):
        return value
    raise TypeError(f"cannot interpret {value!r} as a rational scalar")


def parse_rational(text: str) -> Fraction:
    """Parse the wire format "p/q" (or "p"), minus sign on p only, q > 0."""
    if not _RATIONAL_RE.match(text):
        raise ValueError(f"malformed rational {text!r}")
    return Fraction(text)


def format_rational(value: Fraction) -> str:
    """Inverse of parse_rational; "p" when the denominator is 1."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class Vector:
    coords: tuple[Fraction, ...]

    def __init__(self, coords: Iterable[Scalar]):
        object.__setattr__(self, "coords", tuple(rational(c) for c in coords))

    @classmethod
    def _make(cls, coords: tuple[Fraction, ...]) -> "Vector":
        # Trusted fast path: coords must already be canonical Fractions.
        v = object.__new__(cls)
        object.__setattr__(v, "coords", coords)
        return v

    @staticmethod
    def zero(dim: int) -> "Vector":
        return Vector._make((_ZERO,) * dim)

    @staticmethod
    def basis(dim: int, i: int) -> "Vector":
        return Vector([1 if j == i else 0 for j in range(dim)])

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __getitem__(self, i: int) -> Fraction:
        return self.coords[i]

    def __iter__(self):
        return iter(self.coords)

    def __add__(self, other: "Vector") -> "Vector":
        self._same_dim(other)
        return Vector._make(
            tuple(
                a + b if a and b else (a if a else b)
                for a, b in zip(self.coords, other.coords)
            )
        )

    def __sub__(self, other: "Vector") -> "Vector":
        self._same_dim(other)
        return Vector._make(
            tuple(
                a - b if b else a for a, b in zip(self.coords, other.coords)
            )
        )

    def __neg__(self) -> "Vector":
        return Vector._make(tuple(-a for a in self.coords))

    def scale(self, c: Scalar) -> "Vector":
        c = rational(c)
        return Vector._make(tuple(c * a if a else a for a in self.coords))

    def dot(self, other: "Vector") -> Fraction:
        self._same_dim(other)
        return sum(
            (a * b for a, b in zip(self.coords, other.coords) if a and b), _ZERO
        )

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def _same_dim(self, other: "Vector") -> None:
        if self.dim != other.dim:
            raise ShapeError(f"vector dims {self.dim} != {other.dim}")

    def to_json(self):
        return [format_rational(c) for c in self.coords]

    def __str__(self) -> str:
        return "(" + ", ".join(format_rational(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class Matrix:
    rows: tuple[tuple[Fraction, ...], ...]

    def __init__(self, rows: Iterable[Iterable[Scalar]]):
        data = tuple(tuple(rational(c) for c in row) for row in rows)
        if data and any(len(r) != len(data[0]) for r in data):
            raise ShapeError("ragged rows")
        object.__setattr__(self, "rows", data)

    @classmethod
    def _make(cls, rows: tuple[tuple[Fraction, ...], ...]) -> "Matrix":
        # Trusted fast path: rows must already be rectangular canonical Fractions.
        m = object.__new__(cls)
        object.__setattr__(m, "rows", rows)
        return m

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def zeros(nrows: int, ncols: int) -> "Matrix":
        return Matrix([[0] * ncols for _ in range(nrows)])

    @staticmethod
    def diagonal(entries: Sequence[Scalar]) -> "Matrix":
        n = len(entries)
        return Matrix(
            [[entries[i] if i == j else 0 for j in range(n)] for i in range(n)]
        )

    @staticmethod
    def from_columns(cols: Sequence[Vector]) -> "Matrix":
        if not cols:
            raise ShapeError("no columns")
        return Matrix(
            [[col[i] for col in cols] for i in range(cols[0].dim)]
        )

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        return self.rows[i][j]

    def column(self, j: int) -> Vector:
        return Vector(row[j] for row in self.rows)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix._make(
            tuple(
                tuple(
                    a + b if a and b else (a if a else b)
                    for a, b in zip(ra, rb)
                )
                for ra, rb in zip(self.rows, other.rows)
            )
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix._make(
            tuple(
                tuple(a - b if b else a for a, b in zip(ra, rb))
                for ra, rb in zip(self.rows, other.rows)
            )
        )

    def __neg__(self) -> "Matrix":
        return Matrix._make(tuple(tuple(-a for a in row) for row in self.rows))

    def scale(self, c: Scalar) -> "Matrix":
        c = rational(c)
        return Matrix._make(
            tuple(tuple(c * a if a else a for a in row) for row in self.rows)
        )

    def __matmul__(self, other):
        if isinstance(other, Vector):
            return self.apply(other)
        return mat_mul(self, other)

    def apply(self, v: Vector) -> Vector:
        if self.ncols != v.dim:
            raise ShapeError(f"matrix is {self.shape}, vector dim {v.dim}")
        support = [(k, c) for k, c in enumerate(v.coords) if c]
        return Vector._make(
            tuple(
                sum((row[k] * c for k, c in support if row[k]), _ZERO)
                for row in self.rows
            )
        )

    def transpose(self) -> "Matrix":
        return Matrix._make(tuple(zip(*self.rows))) if self.rows else self

    def trace(self) -> Fraction:
        if self.nrows != self.ncols:
            raise ShapeError("trace of a non-square matrix")
        return sum((self.rows[i][i] for i in range(self.nrows)), Fraction(0))

    def is_zero(self) -> bool:
        return all(a == 0 for row in self.rows for a in row)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_symmetric(self) -> bool:
        return self.is_square() and self == self.transpose()

    def is_antisymmetric(self) -> bool:
        return self.is_square() and (self + self.transpose()).is_zero()

    def _same_shape(self, other: "Matrix") -> None:
        if self.shape != other.shape:
            raise ShapeError(f"shapes {self.shape} != {other.shape}")

    def to_json(self):
        return [[format_rational(a) for a in row] for row in self.rows]

    def __str__(self) -> str:
        return "\n".join(
            "[" + ", ".join(format_rational(a) for a in row) + "]"
            for row in self.rows
        )


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if a.ncols != b.nrows:
        raise ShapeError(f"cannot multiply {a.shape} by {b.shape}")
    ncols = b.ncols
    out = []
    for row in a.rows:
        acc = [_ZERO] * ncols
        for k, c in enumerate(row):
            if c:
                brow = b.rows[k]
                for j, bv in enumerate(brow):
                    if bv:
                        acc[j] = acc[j] + c * bv
        out.append(tuple(acc))
    return Matrix._make(tuple(out))


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return mat_mul(a, b) - mat_mul(b, a)


def block_diag(a: Matrix, b: Matrix) -> Matrix:
    rows = [list(row) + [Fraction(0)] * b.ncols for row in a.rows]
    rows += [[Fraction(0)] * a.ncols + list(row) for row in b.rows]
    return Matrix(rows)


def mat_pow(a: Matrix, k: int) -> Matrix:
    if not a.is_square():
        raise ShapeError("power of a non-square matrix")
    if k < 0:
        raise ValueError("negative power")
    out = Matrix.identity(a.nrows)
    for _ in range(k):
        out = mat_mul(out, a)
    return out


# ---------------------------------------------------------------------------
# Fraction-free elimination
# ---------------------------------------------------------------------------


def _integer_rows(m: Matrix, extra: Sequence[Sequence[Fraction]] = ()) -> list[list[int]]:
    """Clear denominators per row of [m | extra]; row scaling preserves
    solution sets (it does change determinants, handled by the caller)."""
    out = []
    for row, more in zip(m.rows, extra or [()] * m.nrows):
        cells = list(row) + list(more)
        scale = lcm(*(c.denominator for c in cells)) if cells else 1
        out.append([int(c * scale) for c in cells])
    return out


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError("fraction-free elimination produced a remainder")
    return q


def _bareiss_echelon(rows: list[list[int]], main_cols: int) -> list[tuple[int, int]]:
    """In-place fraction-free row echelon; pivots only in the first
    main_cols columns. Returns the (row, col) pivot positions."""
    nrows = len(rows)
    pivots: list[tuple[int, int]] = []
    prev = 1
    r = 0
    for c in range(main_cols):
        pr = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        width = len(rows[r])
        for i in range(r + 1, nrows):
            head = rows[i][c]
            for j in range(c + 1, width):
                rows[i][j] = _exact_div(
                    rows[i][j] * rows[r][c] - head * rows[r][j], prev
                )
            rows[i][c] = 0
        prev = rows[r][c]
        pivots.append((r, c))
        r += 1
        if r == nrows:
            break
    return pivots


def det(m: Matrix) -> Fraction:
    if not m.is_square():
        raise ShapeError("determinant of a non-square matrix")
    n = m.nrows
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    rows = []
    for row in m.rows:
        s = lcm(*(c.denominator for c in row))
        scale *= s
        rows.append([int(c * s) for c in row])
    # Track row swaps: Bareiss with partial pivoting flips the sign per swap.
    sign = 1
    prev = 1
    for c in range(n):
        pr = next((i for i in range(c, n) if rows[i][c]), None)
        if pr is None:
            return Fraction(0)
        if pr != c:
            rows[c], rows[pr] = rows[pr], rows[c]
            sign = -sign
        for i in range(c + 1, n):
            head = rows[i][c]
            for j in range(c + 1, n):
                rows[i][j] = _exact_div(
                    rows[i][j] * rows[c][c] - head * rows[c][j], prev
                )
            rows[i][c] = 0
        prev = rows[c][c]
    return Fraction(sign * rows[n - 1][n - 1]) / scale


def _back_substitute(
    rows: list[list[int]],
    pivots: list[tuple[int, int]],
    main_cols: int,
    rhs_col: int,
) -> list[Fraction]:
    x = [Fraction(0)] * main_cols
    for r, c in reversed(pivots):
        acc = Fraction(rows[r][main_cols + rhs_col])
        for j in range(c + 1, main_cols):
            if rows[r][j]:
                acc -= rows[r][j] * x[j]
        x[c] = acc / rows[r][c]
    return x


def solve(a: Matrix, b: Vector) -> Vector:
    """One exact solution of a x = b (free variables pinned to zero).

    Raises NoSolution when the system is inconsistent.
    """
    if a.nrows != b.dim:
        raise ShapeError(f"matrix has {a.nrows} rows, vector dim {b.dim}")
    n = a.ncols
    rows = _integer_rows(a, [[c] for c in b.coords])
    pivots = _bareiss_echelon(rows, n)
    pivot_rows = {r for r, _ in pivots}
    for i in range(len(rows)):
        if i not in pivot_rows and rows[i][n]:
            raise NoSolution("inconsistent linear system")
    return Vector(_back_substitute(rows, pivots, n, 0))


def invert(a: Matrix) -> Matrix:
    """Exact inverse; raises NotInvertible when the determinant is zero."""
    if not a.is_square():
        raise ShapeError("inverse of a non-square matrix")
    n = a.nrows
    rows = _integer_rows(
        a, [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    )
    pivots = _bareiss_echelon(rows, n)
    if len(pivots) < n:
        raise NotInvertible("matrix is singular")
    cols = [
        Vector(_back_substitute(rows, pivots, n, k)) for k in range(n)
    ]
    return Matrix.from_columns(cols)


def is_invertible(a: Matrix) -> bool:
    return a.is_square() and det(a) != 0


def nullspace_vector(a: Matrix) -> Vector | None:
    """Some nonzero kernel element, or None when the kernel is trivial."""
    n = a.ncols
    rows = _integer_rows(a)
    pivots = _bareiss_echelon(rows, n)
    pivot_cols = {c for _, c in pivots}
    free = next((c for c in range(n) if c not in pivot_cols), None)
    if free is None:
        return None
    x = [Fraction(0)] * n
    x[free] = Fraction(1)
    for r, c in reversed(pivots):
        acc = Fraction(0)
        for j in range(c + 1, n):
            if rows[r][j]:
                acc -= rows[r][j] * x[j]
        x[c] = acc / rows[r][c]
    return Vector(x)
