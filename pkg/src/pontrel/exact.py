"""Exact linear algebra over the complex rationals Q(i).

Rationals are :class:`fractions.Fraction`; a :class:`ComplexRational` is a
pair of them.  :class:`Matrix` is an immutable dense matrix and
:class:`Subspace` stores a subspace by its reduced column-echelon basis, so
that two subspaces are equal exactly when their stored bases are equal.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

from .errors import DimensionMismatch, NoSolution, NotHermitian, ParseError

__all__ = [
    "ComplexRational",
    "Matrix",
    "Subspace",
    "I",
    "as_scalar",
    "canonicalize",
    "hermitian_inertia",
    "kernel",
    "rank",
    "solve",
    "vector",
]


_RATIONAL = r"\d+(?:/\d+|\.\d+)?"
_RATIONAL_RE = re.compile(rf"[+-]?{_RATIONAL}")
_IMAG_RE = re.compile(rf"([+-]?)({_RATIONAL})?i")
_COMPLEX_RE = re.compile(rf"([+-]?{_RATIONAL})([+-])({_RATIONAL})?i")


class ComplexRational:
    """An exact number ``re + im*i`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    @classmethod
    def _make(cls, re: Fraction, im: Fraction) -> "ComplexRational":
        obj = object.__new__(cls)
        object.__setattr__(obj, "re", re)
        object.__setattr__(obj, "im", im)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("ComplexRational is immutable")

    @classmethod
    def parse(cls, text: str) -> "ComplexRational":
        """Parse ``"3"``, ``"-1/2"``, ``"0.25"``, ``"2i"``, ``"-i"``, ``"1-3/4i"``."""
        s = text.replace(" ", "")
        try:
            return cls._parse(s)
        except ZeroDivisionError:
            raise ParseError(f"zero denominator in {text!r}") from None
        except ParseError:
            raise ParseError(f"not an exact complex rational: {text!r}") from None

    @classmethod
    def _parse(cls, s: str) -> "ComplexRational":
        if _RATIONAL_RE.fullmatch(s):
            return cls._make(Fraction(s), Fraction(0))
        m = _IMAG_RE.fullmatch(s)
        if m:
            mag = Fraction(m.group(2)) if m.group(2) else Fraction(1)
            return cls._make(Fraction(0), -mag if m.group(1) == "-" else mag)
        m = _COMPLEX_RE.fullmatch(s)
        if m:
            mag = Fraction(m.group(3)) if m.group(3) else Fraction(1)
            return cls._make(Fraction(m.group(1)), -mag if m.group(2) == "-" else mag)
        raise ParseError(s)

    # arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return ComplexRational._make(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return ComplexRational._make(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        return ComplexRational._make(-self.re, -self.im)

    def __pos__(self):
        return self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not self.im and not other.im:
            return ComplexRational._make(self.re * other.re, Fraction(0))
        return ComplexRational._make(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not other:
            raise ZeroDivisionError("division by zero")
        if not other.im:
            return ComplexRational._make(self.re / other.re, self.im / other.re)
        d = other.re * other.re + other.im * other.im
        return ComplexRational._make(
            (self.re * other.re + self.im * other.im) / d,
            (self.im * other.re - self.re * other.im) / d,
        )

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return (ONE / self) ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self) -> "ComplexRational":
        return ComplexRational._make(self.re, -self.im)

    def abs2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    @property
    def is_real(self) -> bool:
        return not self.im

    # comparison / hashing ---------------------------------------------

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"ComplexRational({self})"

    def __str__(self):
        if not self.im:
            return _fmt_rational(self.re)
        mag = abs(self.im)
        imag = "i" if mag == 1 else f"{_fmt_rational(mag)}i"
        if not self.re:
            return ("-" if self.im < 0 else "") + imag
        return _fmt_rational(self.re) + ("-" if self.im < 0 else "+") + imag


def _fmt_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _coerce(x):
    if isinstance(x, ComplexRational):
        return x
    if isinstance(x, (int, Rational)):
        return ComplexRational._make(Fraction(x), Fraction(0))
    return NotImplemented


def as_scalar(x) -> ComplexRational:
    """Coerce ints, Fractions and scalar strings; floats are rejected as inexact."""
    if isinstance(x, ComplexRational):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, (int, Rational)):
        return ComplexRational._make(Fraction(x), Fraction(0))
    if isinstance(x, str):
        return ComplexRational.parse(x)
    if isinstance(x, complex):
        raise TypeError("inexact complex literal; use a string such as '1/2+3i'")
    raise TypeError(f"cannot convert {type(x).__name__} to an exact scalar")


ZERO = ComplexRational._make(Fraction(0), Fraction(0))
ONE = ComplexRational._make(Fraction(1), Fraction(0))
I = ComplexRational._make(Fraction(0), Fraction(1))


# ---------------------------------------------------------------------------
# matrices


class Matrix:
    """Immutable dense matrix of :class:`ComplexRational` entries."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data: Iterable[Iterable], cols: int | None = None):
        rows = tuple(tuple(as_scalar(x) for x in row) for row in data)
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise DimensionMismatch("ragged matrix rows")
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "_data", rows)

    @classmethod
    def _raw(cls, data, rows: int, cols: int) -> "Matrix":
        obj = object.__new__(cls)
        object.__setattr__(obj, "rows", rows)
        object.__setattr__(obj, "cols", cols)
        object.__setattr__(obj, "_data", tuple(tuple(r) for r in data))
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    # constructors -----------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls._raw([[ZERO] * cols for _ in range(rows)], rows, cols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls._raw([[ONE if i == j else ZERO for j in range(n)] for i in range(n)], n, n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> "Matrix":
        cols = [[as_scalar(x) for x in c] for c in columns]
        if rows is None:
            if not cols:
                raise DimensionMismatch("row count needed for an empty column list")
            rows = len(cols[0])
        if any(len(c) != rows for c in cols):
            raise DimensionMismatch("columns of unequal length")
        return cls._raw([[c[i] for c in cols] for i in range(rows)], rows, len(cols))

    @classmethod
    def diag(cls, values: Sequence) -> "Matrix":
        n = len(values)
        vals = [as_scalar(v) for v in values]
        return cls._raw([[vals[i] if i == j else ZERO for j in range(n)] for i in range(n)], n, n)

    # access -----------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, idx):
        i, j = idx
        return self._data[i][j]

    def row(self, i: int) -> tuple:
        return self._data[i]

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self._data)

    def columns(self) -> list[tuple]:
        return [self.col(j) for j in range(self.cols)]

    def tolist(self) -> list[list[ComplexRational]]:
        return [list(r) for r in self._data]

    def to_strings(self) -> list[list[str]]:
        return [[str(x) for x in r] for r in self._data]

    def block(self, r0: int, r1: int, c0: int, c1: int) -> "Matrix":
        return Matrix._raw([r[c0:c1] for r in self._data[r0:r1]], r1 - r0, c1 - c0)

    def top(self, k: int) -> "Matrix":
        return self.block(0, k, 0, self.cols)

    def bottom(self, k: int) -> "Matrix":
        return self.block(self.rows - k, self.rows, 0, self.cols)

    # algebra ----------------------------------------------------------

    def _check_same(self, other: "Matrix"):
        if self.shape != other.shape:
            raise DimensionMismatch(f"shapes {self.shape} and {other.shape} differ")

    def __add__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_same(other)
        return Matrix._raw(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)],
            self.rows,
            self.cols,
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_same(other)
        return Matrix._raw(
            [[a - b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)],
            self.rows,
            self.cols,
        )

    def __neg__(self) -> "Matrix":
        return Matrix._raw([[-a for a in r] for r in self._data], self.rows, self.cols)

    def __mul__(self, scalar) -> "Matrix":
        if isinstance(scalar, Matrix):
            return NotImplemented
        z = as_scalar(scalar)
        return Matrix._raw([[z * a for a in r] for r in self._data], self.rows, self.cols)

    __rmul__ = __mul__

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        ocols = other.columns()
        out = []
        for r in self._data:
            row = []
            for c in ocols:
                acc = ZERO
                for a, b in zip(r, c):
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return Matrix._raw(out, self.rows, other.cols)

    @property
    def T(self) -> "Matrix":
        return Matrix._raw(
            [[self._data[i][j] for i in range(self.rows)] for j in range(self.cols)],
            self.cols,
            self.rows,
        )

    @property
    def H(self) -> "Matrix":
        """Conjugate transpose."""
        return Matrix._raw(
            [[self._data[i][j].conjugate() for i in range(self.rows)] for j in range(self.cols)],
            self.cols,
            self.rows,
        )

    def conj(self) -> "Matrix":
        return Matrix._raw([[a.conjugate() for a in r] for r in self._data], self.rows, self.cols)

    def shift(self, z) -> "Matrix":
        """``self - z*I`` for square matrices."""
        z = as_scalar(z)
        return Matrix._raw(
            [[a - z if i == j else a for j, a in enumerate(r)] for i, r in enumerate(self._data)],
            self.rows,
            self.cols,
        )

    @staticmethod
    def hstack(*blocks: "Matrix") -> "Matrix":
        rows = blocks[0].rows
        if any(b.rows != rows for b in blocks):
            raise DimensionMismatch("hstack needs equal row counts")
        data = [sum((b._data[i] for b in blocks), ()) for i in range(rows)]
        return Matrix._raw(data, rows, sum(b.cols for b in blocks))

    @staticmethod
    def vstack(*blocks: "Matrix") -> "Matrix":
        cols = blocks[0].cols
        if any(b.cols != cols for b in blocks):
            raise DimensionMismatch("vstack needs equal column counts")
        data = [r for b in blocks for r in b._data]
        return Matrix._raw(data, len(data), cols)

    # predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(a for r in self._data for a in r)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_hermitian(self) -> bool:
        return self.is_square() and self == self.H

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        return hash((self.rows, self.cols, self._data))

    def __repr__(self):
        return f"Matrix({self.to_strings()})"

    # elimination ------------------------------------------------------

    def rref(self) -> tuple["Matrix", tuple[int, ...]]:
        """Reduced row-echelon form and the pivot columns."""
        m = [list(r) for r in self._data]
        pivots = []
        r = 0
        for c in range(self.cols):
            if r == self.rows:
                break
            p = next((i for i in range(r, self.rows) if m[i][c]), None)
            if p is None:
                continue
            m[r], m[p] = m[p], m[r]
            inv = ONE / m[r][c]
            if inv != ONE:
                m[r] = [inv * a if a else a for a in m[r]]
            for i in range(self.rows):
                if i != r and m[i][c]:
                    f = m[i][c]
                    m[i] = [a - f * b if b else a for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
        return Matrix._raw(m, self.rows, self.cols), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def det(self):
        if not self.is_square():
            raise DimensionMismatch("determinant of a non-square matrix")
        m = [list(r) for r in self._data]
        n = self.rows
        d = ONE
        for c in range(n):
            p = next((i for i in range(c, n) if m[i][c]), None)
            if p is None:
                return ZERO
            if p != c:
                m[c], m[p] = m[p], m[c]
                d = -d
            d = d * m[c][c]
            for i in range(c + 1, n):
                if m[i][c]:
                    f = m[i][c] / m[c][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[c])]
        return d

    def inverse(self) -> "Matrix":
        if not self.is_square():
            raise DimensionMismatch("inverse of a non-square matrix")
        return solve(self, Matrix.identity(self.rows), unique=True)

    def is_invertible(self) -> bool:
        return self.is_square() and self.rank() == self.rows


def vector(values: Sequence) -> Matrix:
    """Column vector."""
    return Matrix([[v] for v in values], cols=1)


def _as_column_matrix(v, n: int | None = None) -> Matrix:
    if isinstance(v, Matrix):
        m = v
    else:
        m = vector(list(v))
    if m.cols != 1:
        raise DimensionMismatch("expected a column vector")
    if n is not None and m.rows != n:
        raise DimensionMismatch(f"vector of length {m.rows}, expected {n}")
    return m


def rank(m: Matrix) -> int:
    return m.rank()


def solve(m: Matrix, b: Matrix, unique: bool = False) -> Matrix:
    """One exact solution ``X`` of ``m @ X == b`` (free variables set to zero).

    Raises :class:`NoSolution` if some column of ``b`` is outside the column
    space of ``m``; with ``unique=True`` also if ``m`` has a nontrivial kernel.
    """
    if m.rows != b.rows:
        raise DimensionMismatch(f"cannot solve {m.shape} against {b.shape}")
    aug, pivots = Matrix.hstack(m, b).rref()
    if any(p >= m.cols for p in pivots):
        raise NoSolution("right-hand side is not in the column space")
    if unique and len(pivots) < m.cols:
        raise NoSolution("matrix is singular")
    out = [[ZERO] * b.cols for _ in range(m.cols)]
    for r, p in enumerate(pivots):
        out[p] = list(aug.row(r)[m.cols:])
    return Matrix._raw(out, m.cols, b.cols)


def kernel(m: Matrix) -> "Subspace":
    """Null space ``{x : m x = 0}`` in canonical form."""
    r, pivots = m.rref()
    free = [c for c in range(m.cols) if c not in pivots]
    cols = []
    for f in free:
        x = [ZERO] * m.cols
        x[f] = ONE
        for i, p in enumerate(pivots):
            x[p] = -r[i, f]
        cols.append(x)
    return Subspace.span(m.cols, cols)


def hermitian_inertia(h: Matrix) -> tuple[int, int, int]:
    """``(n_plus, n_minus, n_zero)`` of a Hermitian matrix.

    Symmetric Gaussian elimination with 1x1 pivots on nonzero diagonal
    entries and 2x2 pivots ``[[0, a], [conj(a), 0]]`` (inertia (1, 1)) when
    the remaining diagonal vanishes.  Each step is a congruence followed by a
    Schur complement, so Sylvester's law of inertia gives the counts.
    """
    if not h.is_square():
        raise NotHermitian("inertia of a non-square matrix")
    if h != h.H:
        raise NotHermitian("matrix is not equal to its conjugate transpose")
    m = h.tolist()
    idx = list(range(h.rows))
    plus = minus = 0
    while idx:
        i = next((k for k in idx if m[k][k]), None)
        if i is not None:
            d = m[i][i]
            if d.re > 0:
                plus += 1
            else:
                minus += 1
            idx.remove(i)
            for r in idx:
                if not m[r][i]:
                    continue
                f = m[r][i] / d
                for c in idx:
                    if m[i][c]:
                        m[r][c] = m[r][c] - f * m[i][c]
            continue
        pair = next(((a, b) for a in idx for b in idx if a < b and m[a][b]), None)
        if pair is None:
            break
        i, j = pair
        a = m[i][j]
        plus += 1
        minus += 1
        idx.remove(i)
        idx.remove(j)
        ac = a.conjugate()
        for r in idx:
            ri, rj = m[r][i], m[r][j]
            if not (ri or rj):
                continue
            for c in idx:
                # B E^{-1} B*, with E^{-1} = [[0, 1/conj(a)], [1/a, 0]]
                upd = ZERO
                if ri and m[j][c]:
                    upd = upd + ri * m[j][c] / ac
                if rj and m[i][c]:
                    upd = upd + rj * m[i][c] / a
                if upd:
                    m[r][c] = m[r][c] - upd
    zero = h.rows - plus - minus
    return plus, minus, zero


# ---------------------------------------------------------------------------
# subspaces


class Subspace:
    """A subspace of ``C^n`` held by its reduced column-echelon basis.

    >>> Subspace.span(2, [[2, 0]]) == Subspace.span(2, [[1, 0], [3, 0]])
    True
    """

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, ambient_dim: int, basis: Matrix, pivots: tuple[int, ...]):
        # use Subspace.span / canonicalize; this trusts its arguments
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "pivots", pivots)

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @classmethod
    def from_matrix(cls, m: Matrix) -> "Subspace":
        """Column span of ``m``."""
        n = m.rows
        if m.cols == 0:
            return cls.zero(n)
        r, pivots = m.T.rref()
        k = len(pivots)
        basis = Matrix._raw([[r[j, i] for j in range(k)] for i in range(n)], n, k)
        return cls(n, basis, pivots)

    @classmethod
    def span(cls, ambient_dim: int, vectors: Iterable[Sequence]) -> "Subspace":
        vecs = [list(v) for v in vectors]
        if not vecs:
            return cls.zero(ambient_dim)
        return cls.from_matrix(Matrix.from_columns(vecs, rows=ambient_dim))

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, Matrix._raw([[] for _ in range(n)], n, 0), ())

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, Matrix.identity(n), tuple(range(n)))

    @property
    def dim(self) -> int:
        return self.basis.cols

    def vectors(self) -> list[tuple]:
        return self.basis.columns()

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, basis={[[str(x) for x in v] for v in self.vectors()]})"

    def _check(self, other: "Subspace"):
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch(
                f"subspaces of C^{self.ambient_dim} and C^{other.ambient_dim}"
            )

    def coordinates(self, v) -> Matrix:
        """Coordinates of ``v`` in the canonical basis (``v`` must lie in the span)."""
        v = _as_column_matrix(v, self.ambient_dim)
        c = vector([v[p, 0] for p in self.pivots]) if self.pivots else Matrix.zeros(0, 1)
        if self.basis @ c != v:
            raise NoSolution("vector is not in the subspace")
        return c

    def contains(self, v) -> bool:
        if isinstance(v, Subspace):
            self._check(v)
            return all(self.contains(x) for x in v.vectors())
        v = _as_column_matrix(v, self.ambient_dim)
        if not self.pivots:
            return v.is_zero()
        c = vector([v[p, 0] for p in self.pivots])
        return self.basis @ c == v

    __contains__ = contains

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if other.dim == 0:
            return self
        if self.dim == 0:
            return other
        return Subspace.from_matrix(Matrix.hstack(self.basis, other.basis))

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.ambient_dim)
        k = kernel(Matrix.hstack(self.basis, -other.basis))
        if k.dim == 0:
            return Subspace.zero(self.ambient_dim)
        return Subspace.from_matrix(self.basis @ k.basis.top(self.dim))

    __and__ = intersect

    def is_subspace_of(self, other: "Subspace") -> bool:
        return other.contains(self)

    def image(self, m: Matrix) -> "Subspace":
        """``m`` applied to this subspace."""
        if m.cols != self.ambient_dim:
            raise DimensionMismatch("map does not act on this subspace")
        if self.dim == 0:
            return Subspace.zero(m.rows)
        return Subspace.from_matrix(m @ self.basis)


def canonicalize(s: Subspace | Matrix) -> Subspace:
    if isinstance(s, Subspace):
        return Subspace.from_matrix(s.basis)
    return Subspace.from_matrix(s)
