"""Exact rational matrices.

A small dense matrix type whose entries are elements of sympy's rational
field QQ (gmpy2 ``mpq`` when available); elimination is delegated to
sympy's ``DomainMatrix``.  Shapes are tracked
explicitly so that ``0 x n`` and ``n x 0`` matrices (zero-dimensional vertex
spaces in a quiver) behave correctly.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterable, Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

Scalar = QQ.dtype
_ZERO = QQ(0)


def _frac(x) -> Scalar:
    """Coerce an int, Fraction, "p/q" string or QQ element to ``Scalar``."""
    if isinstance(x, Scalar):
        return x
    if isinstance(x, int):
        return QQ(x)
    f = Fraction(x.strip()) if isinstance(x, str) else Fraction(x)
    return QQ(f.numerator, f.denominator)


class Matrix:
    """Immutable ``nrows x ncols`` matrix with exact rational entries."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, rows: Iterable[Iterable], nrows: int | None = None, ncols: int | None = None):
        data = tuple(tuple(_frac(x) for x in row) for row in rows)
        if nrows is None:
            nrows = len(data)
        if ncols is None:
            ncols = len(data[0]) if data else 0
        if len(data) != nrows or any(len(r) != ncols for r in data):
            raise ValueError(f"ragged or mis-shaped matrix data for {nrows}x{ncols}")
        self.nrows = nrows
        self.ncols = ncols
        self.rows = data

    # -- constructors -------------------------------------------------------

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> Matrix:
        z = _ZERO
        return cls(((z,) * ncols for _ in range(nrows)), nrows, ncols)

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls(((1 if i == j else 0 for j in range(n)) for i in range(n)), n, n)

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence], nrows: int) -> Matrix:
        return cls(((c[i] for c in cols) for i in range(nrows)), nrows, len(cols))

    @classmethod
    def unit(cls, nrows: int, ncols: int, i: int, j: int) -> Matrix:
        """Matrix unit with a single 1 at (i, j), zero-based."""
        return cls(((1 if (r, c) == (i, j) else 0 for c in range(ncols)) for r in range(nrows)), nrows, ncols)

    @classmethod
    def random_int(cls, nrows: int, ncols: int, rng: random.Random, lo: int = -9, hi: int = 9) -> Matrix:
        return cls(((rng.randint(lo, hi) for _ in range(ncols)) for _ in range(nrows)), nrows, ncols)

    @classmethod
    def block_diag(cls, blocks: Sequence[Matrix]) -> Matrix:
        n = sum(b.nrows for b in blocks)
        m = sum(b.ncols for b in blocks)
        out = [[_ZERO] * m for _ in range(n)]
        r0 = c0 = 0
        for b in blocks:
            for i, row in enumerate(b.rows):
                out[r0 + i][c0 : c0 + b.ncols] = row
            r0 += b.nrows
            c0 += b.ncols
        return cls(out, n, m)

    # -- basic protocol -----------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij: tuple[int, int]) -> Scalar:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.shape, self.rows))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"Matrix<{self.nrows}x{self.ncols}>[{body}]"

    def column(self, j: int) -> tuple[Scalar, ...]:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[tuple[Scalar, ...]]:
        return [self.column(j) for j in range(self.ncols)]

    def to_lists(self) -> list[list[Scalar]]:
        return [list(r) for r in self.rows]

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: Matrix) -> Matrix:
        self._check_same(other)
        return Matrix((tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)), *self.shape)

    def __sub__(self, other: Matrix) -> Matrix:
        self._check_same(other)
        return Matrix((tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)), *self.shape)

    def __neg__(self) -> Matrix:
        return Matrix(((-a for a in r) for r in self.rows), *self.shape)

    def __mul__(self, c) -> Matrix:
        c = _frac(c)
        return Matrix(((a * c for a in r) for r in self.rows), *self.shape)

    __rmul__ = __mul__

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = other.columns()
        out = []
        for r in self.rows:
            nz = [(k, a) for k, a in enumerate(r) if a]
            out.append(tuple(sum((a * c[k] for k, a in nz), _ZERO) for c in cols))
        return Matrix(out, self.nrows, other.ncols)

    def __pow__(self, k: int) -> Matrix:
        if self.nrows != self.ncols or k < 0:
            raise ValueError("matrix power needs a square matrix and k >= 0")
        out = Matrix.identity(self.nrows)
        for _ in range(k):
            out = out @ self
        return out

    @property
    def T(self) -> Matrix:
        return Matrix(((r[j] for r in self.rows) for j in range(self.ncols)), self.ncols, self.nrows)

    def trace(self) -> Scalar:
        return sum((self.rows[i][i] for i in range(min(self.shape))), _ZERO)

    def is_zero(self) -> bool:
        return all(not a for r in self.rows for a in r)

    def hstack(self, other: Matrix) -> Matrix:
        if self.nrows != other.nrows:
            raise ValueError("hstack needs equal row counts")
        return Matrix((r + s for r, s in zip(self.rows, other.rows)), self.nrows, self.ncols + other.ncols)

    def vstack(self, other: Matrix) -> Matrix:
        if self.ncols != other.ncols:
            raise ValueError("vstack needs equal column counts")
        return Matrix(self.rows + other.rows, self.nrows + other.nrows, self.ncols)

    def submatrix(self, rows: Sequence[int] | range, cols: Sequence[int] | range) -> Matrix:
        return Matrix(((self.rows[i][j] for j in cols) for i in rows), len(rows), len(cols))

    def vec(self) -> tuple[Scalar, ...]:
        """Row-major vectorization."""
        return tuple(a for r in self.rows for a in r)

    @classmethod
    def unvec(cls, v: Sequence, nrows: int, ncols: int) -> Matrix:
        return cls((v[i * ncols : (i + 1) * ncols] for i in range(nrows)), nrows, ncols)

    def _check_same(self, other: Matrix) -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    # -- elimination --------------------------------------------------------

    def to_domain(self) -> DomainMatrix:
        """The same matrix as a sympy ``DomainMatrix`` over QQ."""
        return DomainMatrix([list(r) for r in self.rows], (self.nrows, self.ncols), QQ)

    @classmethod
    def from_domain(cls, dm: DomainMatrix) -> Matrix:
        nrows, ncols = dm.shape
        return cls(dm.to_list(), nrows, ncols)

    def rref(self) -> tuple[Matrix, list[int]]:
        """Reduced row echelon form and the pivot columns."""
        if self.nrows == 0 or self.ncols == 0:
            return self, []
        red, pivots = self.to_domain().rref()
        return Matrix.from_domain(red), list(pivots)

    def rank(self) -> int:
        if self.nrows == 0 or self.ncols == 0:
            return 0
        return self.to_domain().rank()

    def nullspace(self) -> Matrix:
        """Basis of the right kernel, as the columns of an ``ncols x k`` matrix."""
        if self.nrows == 0 or self.ncols == 0:
            return Matrix.identity(self.ncols)
        basis = self.to_domain().nullspace()
        k = basis.shape[0] if basis.shape[1] == self.ncols else 0
        if k == 0:
            return Matrix.zeros(self.ncols, 0)
        return Matrix.from_domain(basis).T

    def column_space(self) -> Matrix:
        """Basis of the column span: the pivot columns of ``self``."""
        _, pivots = self.rref()
        return Matrix.from_columns([self.column(j) for j in pivots], self.nrows)

    def solve(self, rhs: Matrix) -> Matrix | None:
        """A solution ``X`` of ``self @ X == rhs``, or ``None`` if inconsistent.

        Free variables are set to zero, so the answer is unique whenever
        ``self`` has full column rank.
        """
        if rhs.nrows != self.nrows:
            raise ValueError("right-hand side has the wrong number of rows")
        n = self.ncols
        red, pivots = self.hstack(rhs).rref()
        if any(p >= n for p in pivots):
            return None
        out = [[_ZERO] * rhs.ncols for _ in range(n)]
        for i, p in enumerate(pivots):
            out[p] = red.rows[i][n:]
        return Matrix(out, n, rhs.ncols)

    def inverse(self) -> Matrix:
        if self.nrows != self.ncols:
            raise ValueError("inverse of a non-square matrix")
        x = self.solve(Matrix.identity(self.nrows))
        if x is None or self.rank() < self.nrows:
            raise ZeroDivisionError("matrix is singular")
        return x


def span_equal(u: Matrix, v: Matrix) -> bool:
    """True iff the column spans of ``u`` and ``v`` coincide."""
    if u.nrows != v.nrows:
        return False
    ru, rv = u.rank(), v.rank()
    return ru == rv and u.hstack(v).rank() == ru


def span_contains(big: Matrix, small: Matrix) -> bool:
    """True iff every column of ``small`` lies in the column span of ``big``."""
    return big.hstack(small).rank() == big.rank()


def kron(a: Matrix, b: Matrix) -> Matrix:
    rows = []
    for ra in a.rows:
        for rb in b.rows:
            rows.append(tuple(x * y for x in ra for y in rb))
    return Matrix(rows, a.nrows * b.nrows, a.ncols * b.ncols)


def random_invertible(n: int, rng: random.Random, lo: int = -9, hi: int = 9) -> Matrix:
    """Random integer matrix with nonzero determinant (rejection sampled)."""
    while True:
        g = Matrix.random_int(n, n, rng, lo, hi)
        if g.rank() == n:
            return g


def random_full_rank(nrows: int, ncols: int, rng: random.Random, lo: int = -9, hi: int = 9) -> Matrix:
    target = min(nrows, ncols)
    while True:
        g = Matrix.random_int(nrows, ncols, rng, lo, hi)
        if g.rank() == target:
            return g


def random_of_rank(nrows: int, ncols: int, rank: int, rng: random.Random) -> Matrix:
    """Random integer-product matrix of exactly the given rank."""
    if rank > min(nrows, ncols):
        raise ValueError("rank exceeds matrix size")
    while True:
        m = random_full_rank(nrows, rank, rng) @ random_full_rank(rank, ncols, rng) if rank else Matrix.zeros(nrows, ncols)
        if m.rank() == rank:
            return m


def fraction_to_str(x) -> str:
    return f"{x.numerator}/{x.denominator}"


def matrix_to_json(m: Matrix) -> list[list[str]]:
    return [[fraction_to_str(a) for a in r] for r in m.rows]


def matrix_from_json(data: Sequence[Sequence[str]], nrows: int, ncols: int) -> Matrix:
    return Matrix(([_frac(x) for x in r] for r in data), nrows, ncols)
