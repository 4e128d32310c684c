"""Exact dense linear algebra over the rationals.

Matrices are row-scaled to integers once, then eliminated fraction-free
(Bareiss): every update divides exactly by the previous pivot, so entries
stay integral and bounded by minors of the original matrix instead of
blowing up as unreduced rationals.  Kernels, determinants and inverses all
share the same echelon pass.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm, prod

Rational = Fraction


class NonSquareError(ValueError):
    """Raised when a square-only operation receives a rectangular matrix."""


class RationalMatrix:
    """Immutable dense matrix of Fractions, stored row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries):
        entries = tuple(Fraction(e) for e in entries)
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(entries) != rows * cols:
            raise ValueError(
                f"expected {rows * cols} entries for {rows}x{cols}, got {len(entries)}"
            )
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("RationalMatrix is immutable")

    @classmethod
    def from_rows(cls, rows) -> "RationalMatrix":
        rows = [list(r) for r in rows]
        n = len(rows)
        m = len(rows[0]) if rows else 0
        if any(len(r) != m for r in rows):
            raise ValueError("ragged rows")
        return cls(n, m, [e for r in rows for e in r])

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls(n, n, [Fraction(int(i == j)) for i in range(n) for j in range(n)])

    def entry(self, i: int, j: int) -> Fraction:
        return self.entries[i * self.cols + j]

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self.entry(i, j)

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def row_lists(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def mul_vector(self, v) -> tuple[Fraction, ...]:
        v = [Fraction(x) for x in v]
        if len(v) != self.cols:
            raise ValueError(f"vector length {len(v)} != cols {self.cols}")
        return tuple(
            sum((self.entry(i, j) * v[j] for j in range(self.cols)), Fraction(0))
            for i in range(self.rows)
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RationalMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __repr__(self) -> str:
        return f"RationalMatrix({self.rows}x{self.cols})"


def _exact_div(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError("non-exact division in fraction-free elimination")
    return q


def _integer_rows(m: RationalMatrix) -> tuple[list[list[int]], list[int]]:
    """Row-scaled integer copy of m; returns (rows, per-row scale factors)."""
    out, scales = [], []
    for i in range(m.rows):
        row = m.row(i)
        s = lcm(*(e.denominator for e in row)) if row else 1
        out.append([int(e * s) for e in row])
        scales.append(s)
    return out, scales


def _fraction_free_echelon(a: list[list[int]], rows: int, cols: int,
                           pivot_limit: int | None = None) -> tuple[list[int], int]:
    """In-place Bareiss echelon; returns (pivot column indices, swap sign).

    Pivots are searched only in the first `pivot_limit` columns, so an
    augmented block on the right is swept along but never pivoted in.
    """
    if pivot_limit is None:
        pivot_limit = cols
    pivot_cols: list[int] = []
    prev = 1
    r = 0
    sign = 1
    for c in range(pivot_limit):
        if r == rows:
            break
        pr = next((i for i in range(r, rows) if a[i][c]), None)
        if pr is None:
            continue
        if pr != r:
            a[r], a[pr] = a[pr], a[r]
            sign = -sign
        piv = a[r][c]
        for i in range(r + 1, rows):
            ai_c = a[i][c]
            row_i, row_r = a[i], a[r]
            for j in range(c + 1, cols):
                row_i[j] = _exact_div(row_i[j] * piv - ai_c * row_r[j], prev)
            row_i[c] = 0
        prev = piv
        pivot_cols.append(c)
        r += 1
    return pivot_cols, sign


def determinant(m: RationalMatrix) -> Fraction:
    """Exact determinant via fraction-free elimination."""
    if m.rows != m.cols:
        raise NonSquareError(f"determinant needs a square matrix, got {m.rows}x{m.cols}")
    if m.rows == 0:
        return Fraction(1)
    a, scales = _integer_rows(m)
    pivot_cols, sign = _fraction_free_echelon(a, m.rows, m.cols)
    if len(pivot_cols) < m.rows:
        return Fraction(0)
    # Bareiss leaves the full determinant of the integer matrix as the last pivot
    return Fraction(sign * a[m.rows - 1][m.cols - 1], prod(scales))


def kernel_basis(m: RationalMatrix) -> tuple[tuple[Fraction, ...], ...]:
    """Basis of the right null space {x : m x = 0}, computed exactly.

    One vector per free column, each normalized so its first nonzero entry
    is 1.  A matrix with no rows constrains nothing, so the full standard
    basis comes back.
    """
    cols = m.cols
    if cols == 0:
        return ()
    if m.rows == 0:
        return tuple(
            tuple(Fraction(int(i == j)) for i in range(cols)) for j in range(cols)
        )
    a, _ = _integer_rows(m)
    pivot_cols, _ = _fraction_free_echelon(a, m.rows, cols)
    rank = len(pivot_cols)
    pivot_set = set(pivot_cols)
    basis = []
    for f in (c for c in range(cols) if c not in pivot_set):
        x = [Fraction(0)] * cols
        x[f] = Fraction(1)
        for i in range(rank - 1, -1, -1):
            pc = pivot_cols[i]
            s = sum((a[i][j] * x[j] for j in range(pc + 1, cols) if x[j]), Fraction(0))
            x[pc] = -s / a[i][pc]
        first = next(v for v in x if v)
        basis.append(tuple(v / first for v in x))
    return tuple(basis)


def invert(m: RationalMatrix) -> RationalMatrix:
    """Exact inverse of a square nonsingular matrix.

    Eliminates the augmented block [m | I] fraction-free, then back-solves
    each unit column over Fractions.
    """
    if m.rows != m.cols:
        raise NonSquareError(f"inverse needs a square matrix, got {m.rows}x{m.cols}")
    n = m.rows
    if n == 0:
        return RationalMatrix(0, 0, [])
    aug_rows = []
    for i in range(n):
        row = list(m.row(i)) + [Fraction(int(i == j)) for j in range(n)]
        s = lcm(*(e.denominator for e in row))
        aug_rows.append([int(e * s) for e in row])
    pivot_cols, _ = _fraction_free_echelon(aug_rows, n, 2 * n, pivot_limit=n)
    if len(pivot_cols) < n:
        raise ValueError("matrix is singular")
    # full rank on n columns means pivot_cols == [0..n-1]
    inv_cols = []
    for k in range(n):
        x = [Fraction(0)] * n
        for i in range(n - 1, -1, -1):
            s = sum((aug_rows[i][j] * x[j] for j in range(i + 1, n) if x[j]), Fraction(0))
            x[i] = (aug_rows[i][n + k] - s) / Fraction(aug_rows[i][i])
        inv_cols.append(x)
    return RationalMatrix(n, n, [inv_cols[j][i] for i in range(n) for j in range(n)])
