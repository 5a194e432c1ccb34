"""Dense exact linear algebra over Q.

Matrices are lists of lists of Fractions, row major.  Everything here is
plain Gauss-Jordan; sizes stay small (a few hundred rows at most) so no
attempt is made to be clever about pivoting.
"""

from __future__ import annotations

from fractions import Fraction

Matrix = list  # list[list[Fraction]], row major
Vector = list  # list[Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def identity(n: int) -> Matrix:
    return [[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)]


def zeros(rows: int, cols: int) -> Matrix:
    return [[_ZERO] * cols for _ in range(rows)]


def copy(a: Matrix) -> Matrix:
    return [row[:] for row in a]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    out = zeros(rows, cols)
    for i in range(rows):
        arow = a[i]
        orow = out[i]
        for k in range(inner):
            aik = arow[k]
            if not aik:
                continue
            brow = b[k]
            for j in range(cols):
                if brow[j]:
                    orow[j] += aik * brow[j]
    return out


def matvec(a: Matrix, v: Vector) -> Vector:
    return [sum((row[k] * v[k] for k in range(len(v)) if v[k]), _ZERO) for row in a]


def rref(a: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form; returns (R, pivot column indices)."""
    m = copy(a)
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pr = next((i for i in range(r, rows) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = _ONE / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [m[i][j] - f * m[r][j] for j in range(cols)]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(a: Matrix) -> int:
    return len(rref(a)[1])


def kernel_basis(a: Matrix) -> list[Vector]:
    """Basis of {x : a x = 0}, one vector per free column of the RREF."""
    if not a:
        return []
    cols = len(a[0])
    r, pivots = rref(a)
    pivot_set = set(pivots)
    basis = []
    for free in range(cols):
        if free in pivot_set:
            continue
        v = [_ZERO] * cols
        v[free] = _ONE
        for i, pc in enumerate(pivots):
            v[pc] = -r[i][free]
        basis.append(v)
    return basis


def solve(a: Matrix, b: Vector) -> Vector | None:
    """One exact solution of a x = b (free variables set to 0), or None."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    aug = [a[i][:] + [b[i]] for i in range(rows)]
    r, pivots = rref(aug)
    if cols in pivots:
        return None
    x = [_ZERO] * cols
    for i, pc in enumerate(pivots):
        x[pc] = r[i][cols]
    return x


def inverse(a: Matrix) -> Matrix | None:
    """Inverse of a square matrix, or None if singular."""
    n = len(a)
    aug = [a[i][:] + identity(n)[i] for i in range(n)]
    r, pivots = rref(aug)
    if pivots != list(range(n)):
        return None
    return [row[n:] for row in r]


def is_identity(a: Matrix) -> bool:
    n = len(a)
    return all(a[i][j] == (_ONE if i == j else _ZERO) for i in range(n) for j in range(n))
