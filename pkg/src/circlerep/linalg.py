"""Exact rational matrices, backed by sympy's DomainMatrix over QQ.

Vectors are columns.  A "basis" of a subspace of k^n is an n x r matrix whose
columns are linearly independent.
"""
from __future__ import annotations

from fractions import Fraction

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

Matrix = DomainMatrix


def qq(x):
    if isinstance(x, str):
        x = Fraction(x)
    if isinstance(x, Fraction):
        return QQ(x.numerator, x.denominator)
    return QQ(x)


def to_fraction(x) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


def mat(rows, shape=None) -> Matrix:
    rows = [[qq(x) for x in row] for row in rows]
    if shape is None:
        shape = (len(rows), len(rows[0]) if rows else 0)
    if len(rows) != shape[0] or any(len(r) != shape[1] for r in rows):
        raise ValueError(f"rows do not match shape {shape}")
    if shape[0] == 0 or shape[1] == 0:
        return zeros(*shape)
    return DomainMatrix(rows, shape, QQ)


def sparse(entries: dict, shape) -> Matrix:
    """Build from ``{row: {col: value}}``."""
    data = {}
    for r, row in entries.items():
        row = {c: qq(v) for c, v in row.items() if v}
        if row:
            data[r] = row
    return DomainMatrix(data, shape, QQ).to_dense()


def zeros(r: int, c: int) -> Matrix:
    return DomainMatrix.zeros((r, c), QQ).to_dense()


def eye(n: int) -> Matrix:
    return DomainMatrix.eye(n, QQ).to_dense()


def is_zero(M: Matrix) -> bool:
    return M.is_zero_matrix


def rank(M: Matrix) -> int:
    if 0 in M.shape:
        return 0
    return M.rank()


def hstack(*blocks: Matrix) -> Matrix:
    blocks = [b for b in blocks if b.shape[1]]
    if not blocks:
        raise ValueError("hstack needs at least one nonempty block")
    if len(blocks) == 1:
        return blocks[0]
    return blocks[0].hstack(*blocks[1:])


def vstack(*blocks: Matrix) -> Matrix:
    blocks = [b for b in blocks if b.shape[0]]
    if not blocks:
        raise ValueError("vstack needs at least one nonempty block")
    if len(blocks) == 1:
        return blocks[0]
    return blocks[0].vstack(*blocks[1:])


def kernel(M: Matrix) -> Matrix:
    """Columns form a basis of {v : M v = 0}."""
    rows, cols = M.shape
    if cols == 0:
        return zeros(0, 0)
    if rows == 0 or M.is_zero_matrix:
        return eye(cols)
    ns = M.to_dense().nullspace()
    if ns.shape[0] == 0:
        return zeros(cols, 0)
    return ns.transpose().to_dense()


def pivots(M: Matrix) -> tuple[int, ...]:
    if 0 in M.shape:
        return ()
    return tuple(M.to_dense().rref()[1])


def column_space(M: Matrix) -> Matrix:
    """A column basis of the image of M, chosen among M's own columns."""
    piv = pivots(M)
    if not piv:
        return zeros(M.shape[0], 0)
    return M.extract(list(range(M.shape[0])), list(piv))


def complement(S: Matrix, n: int) -> Matrix:
    """Standard basis vectors completing the columns of S to a basis of k^n."""
    E = eye(n)
    if S.shape[1] == 0:
        return E
    piv = pivots(hstack(S, E))
    r = S.shape[1]
    extra = [p - r for p in piv if p >= r]
    if not extra:
        return zeros(n, 0)
    return E.extract(list(range(n)), extra)


def coordinates(B: Matrix, V: Matrix) -> Matrix:
    """Solve B X = V exactly, B of full column rank; raise if V is outside span(B)."""
    n, r = B.shape
    k = V.shape[1]
    if k == 0:
        return zeros(r, 0)
    if r == 0:
        if not V.is_zero_matrix:
            raise ValueError("vectors are not in the span")
        return zeros(0, k)
    aug = hstack(B, V).to_dense()
    R, piv = aug.rref()
    if any(p >= r for p in piv):
        raise ValueError("vectors are not in the span")
    if len(piv) != r:
        raise ValueError("basis columns are dependent")
    return R.extract(list(range(r)), list(range(r, r + k)))


def solve_unique(A: Matrix, b: Matrix):
    """Return (solution, nullity).  solution is None if the system is inconsistent."""
    n = A.shape[1]
    aug = hstack(A, b).to_dense() if b.shape[1] else A.to_dense()
    R, piv = aug.rref()
    if n in piv:
        return None, n - rank(A)
    x = [QQ(0)] * n
    for row, p in enumerate(piv):
        x[p] = R[row, n].element
    nullity = n - len(piv)
    return x, nullity


def inverse(M: Matrix) -> Matrix:
    if M.shape == (0, 0):
        return M
    return M.to_dense().inv()


def entries(M: Matrix) -> list[list[Fraction]]:
    r, c = M.shape
    if r == 0 or c == 0:
        return [[] for _ in range(r)]
    return [[to_fraction(x) for x in row] for row in M.to_dense().to_list()]


def fmt(x) -> str:
    f = to_fraction(x) if not isinstance(x, Fraction) else x
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"
