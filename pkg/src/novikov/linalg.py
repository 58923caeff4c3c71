"""Dense exact matrices as tuples of tuples of Scalars.

Only the handful of operations the rest of the package needs; sizes are
tiny (n <= 6), so everything is plain Python.
"""
from __future__ import annotations

from .errors import DimensionMismatch, SingularTransform


def matrix(field, rows):
    return tuple(tuple(field(x) for x in row) for row in rows)


def zeros(field, m, n=None):
    n = m if n is None else n
    z = field.zero()
    return tuple(tuple(z for _ in range(n)) for _ in range(m))


def identity(field, n):
    z, o = field.zero(), field.one()
    return tuple(tuple(o if i == j else z for j in range(n)) for i in range(n))


def shape(a):
    return len(a), (len(a[0]) if a else 0)


def matmul(a, b):
    if shape(a)[1] != len(b):
        raise DimensionMismatch(f"cannot multiply {shape(a)} by {shape(b)}")
    cols = list(zip(*b))
    return tuple(
        tuple(sum((x * y for x, y in zip(row, col)), row[0] * 0) for col in cols)
        for row in a
    )


def add(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def sub(a, b):
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def scale(s, a):
    return tuple(tuple(s * x for x in row) for row in a)


def commutator(a, b):
    return sub(matmul(a, b), matmul(b, a))


def is_zero(a):
    return not any(x for row in a for x in row)


def transpose(a):
    return tuple(zip(*a))


def trace(a):
    return sum((a[i][i] for i in range(1, len(a))), a[0][0])


def det(a):
    """Determinant by Gaussian elimination over the field."""
    n = len(a)
    m = [list(row) for row in a]
    result = m[0][0] * 0 + 1
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col]), None)
        if pivot is None:
            return result * 0
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            result = -result
        piv = m[col][col]
        result = result * piv
        inv = piv.inv()
        for r in range(col + 1, n):
            f = m[r][col] * inv
            if f:
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return result


def inverse(a):
    """Gauss-Jordan inverse; raises SingularTransform when det(a) == 0."""
    n = len(a)
    if any(len(row) != n for row in a):
        raise DimensionMismatch("only square matrices are invertible")
    one = a[0][0] * 0 + 1
    zero = one * 0
    m = [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col]), None)
        if pivot is None:
            raise SingularTransform("matrix is singular")
        m[col], m[pivot] = m[pivot], m[col]
        inv = m[col][col].inv()
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return tuple(tuple(row[n:]) for row in m)


def conjugate(p, a, p_inv=None):
    """P A P^-1."""
    if p_inv is None:
        p_inv = inverse(p)
    return matmul(matmul(p, a), p_inv)


def general_linear_group(field, n=2):
    """Every invertible n x n matrix over a prime field, in lexicographic order."""
    from itertools import product

    elems = field.elements()
    out = []
    for entries in product(elems, repeat=n * n):
        m = tuple(tuple(entries[i * n:(i + 1) * n]) for i in range(n))
        if det(m):
            out.append(m)
    return out
