"""Small exact matrices over QQ or GF(p): just enough linear algebra for the
monodromy-quadruple model (rank, product, inverse) by Gaussian elimination.

Matrices are tuples of row tuples; an r x 0 or 0 x c matrix is legal and has
rank 0.
"""

from __future__ import annotations

Matrix = tuple[tuple, ...]


def shape(A: Matrix) -> tuple[int, int]:
    rows = len(A)
    cols = len(A[0]) if rows else 0
    return rows, cols


def from_rows(rows, field) -> Matrix:
    return tuple(tuple(field.from_int(v) if isinstance(v, int) else v for v in row)
                 for row in rows)


def zeros(r: int, c: int, field) -> Matrix:
    return tuple(tuple(field.zero for _ in range(c)) for _ in range(r))


def identity(n: int, field) -> Matrix:
    return tuple(
        tuple(field.one if i == j else field.zero for j in range(n)) for i in range(n)
    )


def transpose(A: Matrix) -> Matrix:
    r, c = shape(A)
    return tuple(tuple(A[i][j] for i in range(r)) for j in range(c))


def matmul(A: Matrix, B: Matrix, field) -> Matrix:
    ra, ca = shape(A)
    rb, cb = shape(B)
    # Row-tuple matrices cannot carry the column count of a 0-row matrix, so
    # degenerate products are resolved to the zero matrix of the right shape.
    if ra == 0 or cb == 0 or ca == 0 or rb == 0:
        return zeros(ra, cb, field)
    if ca != rb:
        raise ValueError(f"shape mismatch {ra}x{ca} @ {rb}x{cb}")
    out = []
    for i in range(ra):
        row = []
        for j in range(cb):
            acc = field.zero
            for k in range(ca):
                acc = field.add(acc, field.mul(A[i][k], B[k][j]))
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def shape_ok(A: Matrix, r: int, c: int) -> bool:
    """Shape check tolerating the lost column count of 0-row matrices."""
    return len(A) == r and all(len(row) == c for row in A)


def sub(A: Matrix, B: Matrix, field) -> Matrix:
    ra, ca = shape(A)
    if len(A) != len(B) or any(len(x) != len(y) for x, y in zip(A, B)):
        raise ValueError("shape mismatch in subtraction")
    return tuple(
        tuple(field.sub(A[i][j], B[i][j]) for j in range(ca)) for i in range(ra)
    )


def rank(A: Matrix, field) -> int:
    r, c = shape(A)
    m = [list(row) for row in A]
    rk = 0
    for col in range(c):
        pivot = None
        for i in range(rk, r):
            if not field.is_zero(m[i][col]):
                pivot = i
                break
        if pivot is None:
            continue
        m[rk], m[pivot] = m[pivot], m[rk]
        inv = field.inv(m[rk][col])
        m[rk] = [field.mul(v, inv) for v in m[rk]]
        for i in range(r):
            if i != rk and not field.is_zero(m[i][col]):
                factor = m[i][col]
                m[i] = [field.sub(v, field.mul(factor, w)) for v, w in zip(m[i], m[rk])]
        rk += 1
        if rk == r:
            break
    return rk


def invert(A: Matrix, field) -> Matrix | None:
    """Inverse of a square matrix, or None when singular."""
    n, c = shape(A)
    if n != c:
        raise ValueError("only square matrices can be inverted")
    m = [list(row) + list(identity(n, field)[i]) for i, row in enumerate(A)]
    for col in range(n):
        pivot = None
        for i in range(col, n):
            if not field.is_zero(m[i][col]):
                pivot = i
                break
        if pivot is None:
            return None
        m[col], m[pivot] = m[pivot], m[col]
        inv = field.inv(m[col][col])
        m[col] = [field.mul(v, inv) for v in m[col]]
        for i in range(n):
            if i != col and not field.is_zero(m[i][col]):
                factor = m[i][col]
                m[i] = [field.sub(v, field.mul(factor, w)) for v, w in zip(m[i], m[col])]
    return tuple(tuple(row[n:]) for row in m)


def kernel_dim(A: Matrix, field) -> int:
    _, c = shape(A)
    return c - rank(A, field)


def coker_dim(A: Matrix, field) -> int:
    r, _ = shape(A)
    return r - rank(A, field)
