"""Exact linear algebra over the rationals (small dense systems only)."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def solve_exact(matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction],
                guess: Sequence[Fraction] | None = None) -> list[Fraction] | None:
    """Solve ``matrix @ x = rhs`` over Q by Gauss-Jordan elimination.

    Free variables are pinned to ``guess`` (zero by default).  Returns None if
    the system is inconsistent.
    """
    ncol = len(matrix[0]) if matrix else len(guess or ())
    mat = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    pivots: list[int] = []
    r = 0
    for c in range(ncol):
        if r == len(mat):
            break
        pr = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [v * inv for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
    for row in mat[r:]:
        if row[ncol] != 0:
            return None
    free = [c for c in range(ncol) if c not in set(pivots)]
    sol = [Fraction(0)] * ncol
    for c in free:
        sol[c] = Fraction(guess[c]) if guess is not None else Fraction(0)
    for i, c in enumerate(pivots):
        sol[c] = mat[i][ncol] - sum((mat[i][f] * sol[f] for f in free), Fraction(0))
    return sol


def ldl_pivots(matrix: Sequence[Sequence[Fraction]]) -> list[Fraction]:
    """Pivots of symmetric Gaussian elimination without row exchanges.

    The product of the first ``k`` pivots is the ``k``-th leading principal
    minor.  Elimination stops at the first zero pivot, so a short list means
    a singular leading block.
    """
    a = [[Fraction(v) for v in row] for row in matrix]
    n = len(a)
    out = []
    for k in range(n):
        piv = a[k][k]
        out.append(piv)
        if piv == 0:
            break
        for i in range(k + 1, n):
            f = a[i][k] / piv
            if f:
                for j in range(k + 1, n):
                    a[i][j] -= f * a[k][j]
    return out
