"""Exact linear solving over the rationals.

solve_linear_exact handles square nonsingular systems by fraction-free
(Bareiss) elimination on integer-scaled rows, which keeps intermediate
entries minor-bounded with no per-step gcd work.  solve_linear_consistent
handles rank-deficient but consistent systems (free variables are set to
zero), which the global-fit discovery strategy needs because residue
indicator functions are linearly dependent across periods.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

from .errors import DomainError, SingularMatrixError

Rat = Fraction | int


def _as_fraction_rows(
    matrix: Sequence[Sequence[Rat]], rhs: Sequence[Rat]
) -> list[list[Fraction]]:
    rows = []
    width = len(matrix[0]) if matrix else 0
    for a_row, b in zip(matrix, rhs):
        if len(a_row) != width:
            raise DomainError("ragged matrix")
        rows.append([Fraction(x) for x in a_row] + [Fraction(b)])
    return rows


def _rank(rows: list[list[Fraction]], cols: int) -> int:
    work = [row[:cols] for row in rows]
    rank = 0
    for c in range(cols):
        pivot = next((r for r in range(rank, len(work)) if work[r][c] != 0), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        prow = work[rank]
        for r in range(rank + 1, len(work)):
            f = work[r][c]
            if f:
                scale = f / prow[c]
                for j in range(c, cols):
                    work[r][j] -= scale * prow[j]
        rank += 1
    return rank


def solve_linear_exact(
    matrix: Sequence[Sequence[Rat]], rhs: Sequence[Rat]
) -> list[Fraction]:
    """Exact solution of a square nonsingular system A x = b.

    Raises SingularMatrixError (naming the rank found) when A is singular.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix) or len(rhs) != n:
        raise DomainError("solve_linear_exact requires a square system")
    if n == 0:
        return []
    # Integerize by scaling columns of A and the rhs separately (column j by
    # c_j rescales unknown j; the rhs by its own lcm).  Row scaling would
    # multiply every minor by the product of the row factors, which is
    # ruinous when the rhs carries large denominators.
    a_frac = [[Fraction(x) for x in row] for row in matrix]
    b_frac = [Fraction(x) for x in rhs]
    col_scale = [
        lcm(*(a_frac[i][j].denominator for i in range(n))) for j in range(n)
    ]
    rhs_scale = lcm(*(b.denominator for b in b_frac))
    rows: list[list[int]] = [
        [int(a_frac[i][j] * col_scale[j]) for j in range(n)]
        + [int(b_frac[i] * rhs_scale)]
        for i in range(n)
    ]

    prev = 1
    for k in range(n):
        # Pivot on the shortest nonzero entry: cheapest growth in the updates.
        candidates = [r for r in range(k, n) if rows[r][k] != 0]
        if not candidates:
            rank = _rank(_as_fraction_rows(matrix, rhs), n)
            raise SingularMatrixError(rank, n)
        pivot_row = min(candidates, key=lambda r: abs(rows[r][k]).bit_length())
        rows[k], rows[pivot_row] = rows[pivot_row], rows[k]
        p = rows[k][k]
        for i in range(k + 1, n):
            row_i, row_k = rows[i], rows[k]
            head = row_i[k]
            if head:
                for j in range(k + 1, n + 1):
                    row_i[j] = (p * row_i[j] - head * row_k[j]) // prev
            else:
                for j in range(k + 1, n + 1):
                    row_i[j] = (p * row_i[j]) // prev
            row_i[k] = 0
        prev = p

    x: list[Fraction] = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = Fraction(rows[i][n])
        for j in range(i + 1, n):
            acc -= rows[i][j] * x[j]
        x[i] = acc / rows[i][i]
    return [x[j] * col_scale[j] / rhs_scale for j in range(n)]


def solve_linear_consistent(
    matrix: Sequence[Sequence[Rat]], rhs: Sequence[Rat]
) -> list[Fraction]:
    """One exact solution of a consistent (possibly rank-deficient) system.

    Free variables are set to zero.  Raises DomainError on an inconsistent
    system.
    """
    if not matrix:
        return []
    rows = _as_fraction_rows(matrix, rhs)
    n_cols = len(matrix[0])
    pivot_cols: list[int] = []
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        prow = rows[r]
        inv = 1 / prow[c]
        for j in range(c, n_cols + 1):
            prow[j] *= inv
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                for j in range(c, n_cols + 1):
                    rows[i][j] -= f * prow[j]
        pivot_cols.append(c)
        r += 1
        if r == len(rows):
            break
    for i in range(r, len(rows)):
        if rows[i][n_cols] != 0:
            raise DomainError("inconsistent linear system")
    x = [Fraction(0)] * n_cols
    for i, c in enumerate(pivot_cols):
        x[c] = rows[i][n_cols]
    return x
