"""Small exact linear algebra over Fractions.

Just enough for the package: determinants of small matrices and affine
solution spaces of linear systems.  Everything works on plain sequences
and returns Fractions, so results are exact and hashable.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .scalars import Scalar


def determinant(matrix: Sequence[Sequence[Scalar]]) -> Scalar:
    """Determinant by fraction-free-ish Gaussian elimination."""
    n = len(matrix)
    if n == 0:
        return 1
    rows = [[Fraction(x) if not isinstance(x, float) else x for x in row] for row in matrix]
    sign = 1
    det: Scalar = 1
    for col in range(n):
        pivot_row = None
        for r in range(col, n):
            if rows[r][col]:
                pivot_row = r
                break
        if pivot_row is None:
            return 0
        if pivot_row != col:
            rows[col], rows[pivot_row] = rows[pivot_row], rows[col]
            sign = -sign
        pivot = rows[col][col]
        det = det * pivot
        for r in range(col + 1, n):
            factor = rows[r][col] / pivot
            if factor:
                for c in range(col, n):
                    rows[r][c] = rows[r][c] - factor * rows[col][c]
    return sign * det


def solve_affine(
    matrix: Sequence[Sequence[Scalar]], rhs: Sequence[Scalar]
) -> tuple[list[Fraction], list[list[Fraction]]] | None:
    """Solve ``matrix @ x = rhs`` exactly.

    Returns ``(particular, nullspace_basis)`` or ``None`` when the system
    is inconsistent.  ``particular`` sets every free variable to zero; the
    basis vectors span the solution space's directions.
    """
    m = len(matrix)
    cols = len(matrix[0]) if m else 0
    aug = [
        [Fraction(x) for x in row] + [Fraction(b)]
        for row, b in zip(matrix, rhs)
    ]
    pivots: list[int] = []
    row = 0
    for col in range(cols):
        pivot_row = None
        for r in range(row, m):
            if aug[r][col]:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        aug[row], aug[pivot_row] = aug[pivot_row], aug[row]
        pivot = aug[row][col]
        aug[row] = [v / pivot for v in aug[row]]
        for r in range(m):
            if r != row and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[row])]
        pivots.append(col)
        row += 1
        if row == m:
            break
    for r in range(row, m):
        if aug[r][cols]:
            return None
    particular = [Fraction(0)] * cols
    for r, col in enumerate(pivots):
        particular[col] = aug[r][cols]
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        direction = [Fraction(0)] * cols
        direction[f] = Fraction(1)
        for r, col in enumerate(pivots):
            direction[col] = -aug[r][f]
        basis.append(direction)
    return particular, basis
