"""Small exact linear algebra helpers: integer determinants and inverses for
lattice certificates, and rank over any exact field for centre computations.

Everything here is dense and small (dimensions are s or s*phi(n) squared at
most), so cubic algorithms with exact arithmetic are the right tool.
"""

from __future__ import annotations

from fractions import Fraction


def identity_int(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def matmul_int(a, b):
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    assert all(len(row) == k for row in a)
    return [[sum(a[i][t] * b[t][j] for t in range(k)) for j in range(m)]
            for i in range(n)]


def det_int(matrix) -> int:
    """Determinant of a square integer matrix by fraction-free Bareiss
    elimination.  All intermediate values stay integral."""
    n = len(matrix)
    if n == 0:
        return 1
    m = [list(map(int, row)) for row in matrix]
    if any(len(row) != n for row in m):
        raise ValueError("matrix is not square")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def inverse_rational(matrix) -> list[list[Fraction]]:
    """Inverse of a square matrix over Q by Gauss-Jordan elimination."""
    n = len(matrix)
    work = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
            for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col]), None)
        if pivot is None:
            raise ZeroDivisionError("matrix is singular")
        work[col], work[pivot] = work[pivot], work[col]
        inv = 1 / work[col][col]
        work[col] = [x * inv for x in work[col]]
        for r in range(n):
            if r != col and work[r][col]:
                factor = work[r][col]
                work[r] = [x - factor * y for x, y in zip(work[r], work[col])]
    return [row[n:] for row in work]


def inverse_unimodular(matrix) -> list[list[int]]:
    """Inverse of an integer matrix with determinant +-1, returned over Z."""
    d = det_int(matrix)
    if d not in (1, -1):
        raise ValueError(f"matrix has determinant {d}, not a lattice automorphism")
    inv = inverse_rational(matrix)
    out = []
    for row in inv:
        out_row = []
        for x in row:
            assert x.denominator == 1
            out_row.append(int(x))
        out.append(out_row)
    return out


def rank_over_field(rows) -> int:
    """Rank of a matrix whose entries live in any exact field.

    Entries only need truthiness (nonzero test), subtraction, multiplication
    and division, which both Fraction and the cyclotomic elements provide.
    """
    work = [list(row) for row in rows]
    if not work:
        return 0
    ncols = len(work[0])
    rank = 0
    row = 0
    for col in range(ncols):
        pivot = next((r for r in range(row, len(work)) if work[r][col]), None)
        if pivot is None:
            continue
        work[row], work[pivot] = work[pivot], work[row]
        pivot_val = work[row][col]
        for r in range(len(work)):
            if r != row and work[r][col]:
                factor = work[r][col] / pivot_val
                work[r] = [x - factor * y for x, y in zip(work[r], work[row])]
        rank += 1
        row += 1
        if row == len(work):
            break
    return rank


def kernel_dimension(rows, ncols: int) -> int:
    """Dimension of the solution space of rows * x = 0 over the entry field."""
    if not rows:
        return ncols
    assert all(len(r) == ncols for r in rows)
    return ncols - rank_over_field(rows)
