"""Z2-graded algebras given by dense structure-constant tables.

Basis convention: indices ``0 .. d0-1`` are even, ``d0 .. n-1`` are odd, and
``c[i][j][k]`` is the coefficient of ``e_k`` in ``e_i o e_j``.  Every
identity in this package is multilinear, so checking it on basis elements
is enough; all checkers below rely on that.
"""
from __future__ import annotations

from itertools import product as _cartesian

from . import linalg
from .errors import DimensionMismatch, FieldMismatch, NotGraded, SingularTransform
from .report import LawReport, Violation
from .scalars import QQ, Field


class GradedVector:
    """Coefficient vector in a fixed basis of a graded space."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs):
        self.field = field
        self.coeffs = tuple(field(c) for c in coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k]

    def _check(self, other):
        if not isinstance(other, GradedVector):
            return NotImplemented
        if other.field != self.field:
            raise FieldMismatch(f"{self.field!r} and {other.field!r} vectors")
        if len(other) != len(self):
            raise DimensionMismatch(f"vectors of length {len(self)} and {len(other)}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return GradedVector(self.field, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return GradedVector(self.field, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return GradedVector(self.field, [-a for a in self.coeffs])

    def __rmul__(self, s):
        return GradedVector(self.field, [s * a for a in self.coeffs])

    def __eq__(self, other):
        if isinstance(other, GradedVector):
            return self.field == other.field and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_homogeneous(self, d0: int, parity: int) -> bool:
        """True when every coefficient of the other parity vanishes."""
        other = range(d0, len(self)) if parity == 0 else range(0, d0)
        return not any(self.coeffs[k] for k in other)

    def __repr__(self):
        return "GradedVector(" + ", ".join(str(c) for c in self.coeffs) + ")"


def _coerce_table(field, n, table):
    try:
        rows = [[[field(table[i][j][k]) for k in range(n)] for j in range(n)] for i in range(n)]
    except (IndexError, TypeError) as exc:
        raise DimensionMismatch(f"structure-constant table must be {n}x{n}x{n}") from exc
    if len(table) != n or any(len(r) != n or any(len(x) != n for x in r) for r in table):
        raise DimensionMismatch(f"structure-constant table must be {n}x{n}x{n}")
    return tuple(tuple(tuple(col) for col in row) for row in rows)


class SuperAlgebra:
    """Finite-dimensional Z2-graded algebra with product ``e_i o e_j``.

    The table is not required to respect the grading; use :func:`is_graded`
    to audit it.  Instances are immutable.
    """

    def __init__(self, d0: int, d1: int, table, field: Field = QQ):
        if d0 < 0 or d1 < 0:
            raise ValueError("graded dimensions must be non-negative")
        self.d0 = int(d0)
        self.d1 = int(d1)
        self.field = field
        self.c = _coerce_table(field, self.n, table)

    @property
    def n(self) -> int:
        return self.d0 + self.d1

    @classmethod
    def zero(cls, d0, d1, field=QQ):
        n = d0 + d1
        return cls(d0, d1, [[[0] * n for _ in range(n)] for _ in range(n)], field)

    @classmethod
    def from_products(cls, d0, d1, products, field=QQ):
        """Build from ``{(i, j, k): value}``; absent entries are zero."""
        n = d0 + d1
        table = [[[0] * n for _ in range(n)] for _ in range(n)]
        for (i, j, k), v in products.items():
            table[i][j][k] = v
        return cls(d0, d1, table, field)

    def parity(self, idx: int) -> int:
        return parity(self, idx)

    def parities(self):
        return [0] * self.d0 + [1] * self.d1

    def basis(self, i: int) -> GradedVector:
        z, o = self.field.zero(), self.field.one()
        return GradedVector(self.field, [o if k == i else z for k in range(self.n)])

    def vector(self, coeffs) -> GradedVector:
        if len(coeffs) != self.n:
            raise DimensionMismatch(f"expected {self.n} coefficients, got {len(coeffs)}")
        return GradedVector(self.field, coeffs)

    def product(self, i: int, j: int) -> GradedVector:
        return GradedVector(self.field, self.c[i][j])

    def multiply(self, x: GradedVector, y: GradedVector) -> GradedVector:
        return multiply(self, x, y)

    def nonzero_products(self):
        """``{(i, j, k): value}`` for every nonzero structure constant."""
        n = self.n
        return {
            (i, j, k): self.c[i][j][k]
            for i, j, k in _cartesian(range(n), repeat=3)
            if self.c[i][j][k]
        }

    def odd_square_zero(self) -> bool:
        """True when every product of two odd basis elements vanishes (A1 A1 = 0)."""
        odd = range(self.d0, self.n)
        return not any(self.c[i][j][k] for i in odd for j in odd for k in range(self.n))

    def even_part(self) -> "SuperAlgebra":
        d0 = self.d0
        return SuperAlgebra(
            d0, 0, [[[self.c[i][j][k] for k in range(d0)] for j in range(d0)] for i in range(d0)],
            self.field,
        )

    def __eq__(self, other):
        if not isinstance(other, SuperAlgebra):
            return NotImplemented
        return (
            (self.d0, self.d1, self.field) == (other.d0, other.d1, other.field)
            and self.c == other.c
        )

    def __hash__(self):
        return hash((self.d0, self.d1, self.field, self.c))

    def __repr__(self):
        prods = ", ".join(f"{i}.{j}->{v}*e{k}" for (i, j, k), v in self.nonzero_products().items())
        return f"{type(self).__name__}(d0={self.d0}, d1={self.d1}, {self.field!r}, {{{prods}}})"


def parity(A: SuperAlgebra, idx: int) -> int:
    if not 0 <= idx < A.n:
        raise IndexError(f"basis index {idx} out of range for dimension {A.n}")
    return 0 if idx < A.d0 else 1


def bilinear(table, field, x, y):
    """Apply a structure-constant table to two coefficient vectors."""
    n = len(table)
    if len(x) != n or len(y) != n:
        raise DimensionMismatch(f"operands must have length {n}")
    acc = [field.zero()] * n
    for i in range(n):
        xi = x[i]
        if not xi:
            continue
        row = table[i]
        for j in range(n):
            yj = y[j]
            if not yj:
                continue
            s = xi * yj
            for k, c in enumerate(row[j]):
                if c:
                    acc[k] = acc[k] + s * c
    return GradedVector(field, acc)


def multiply(A: SuperAlgebra, x: GradedVector, y: GradedVector) -> GradedVector:
    return bilinear(A.c, A.field, x, y)


def is_graded(A: SuperAlgebra) -> LawReport:
    """Every structure constant that sends e_i o e_j to the wrong parity."""
    report = LawReport("grading")
    n = A.n
    for i, j, k in _cartesian(range(n), repeat=3):
        report.checked += 1
        c = A.c[i][j][k]
        if c and parity(A, k) != (parity(A, i) + parity(A, j)) % 2:
            residual = c * A.basis(k)
            report.violations.append(Violation(i, j, k, residual, "grading"))
    return report


def require_graded(A: SuperAlgebra) -> None:
    report = is_graded(A)
    if not report.passed:
        i, j, k, _, _ = report.violations[0]
        raise NotGraded(f"product e{i} o e{j} has a component on e{k} of the wrong parity")


def is_graded_matrix(d0: int, P) -> bool:
    n = len(P)
    return not any(
        P[a][b] for a in range(n) for b in range(n) if (a < d0) != (b < d0)
    )


def transform(A: SuperAlgebra, P) -> SuperAlgebra:
    """Re-express ``A`` in the basis ``e'_i = sum_j P[j][i] e_j``.

    ``P`` must be invertible and must not mix even and odd basis vectors.
    """
    n = A.n
    P = linalg.matrix(A.field, P)
    if linalg.shape(P) != (n, n):
        raise DimensionMismatch(f"basis change must be {n}x{n}")
    if not is_graded_matrix(A.d0, P):
        raise NotGraded("basis change mixes even and odd basis vectors")
    try:
        Q = linalg.inverse(P)
    except SingularTransform:
        raise SingularTransform("basis change matrix is singular") from None
    c = A.c
    zero = A.field.zero()
    # first push the product through P in both slots, then pull back with Q
    half = [[[zero] * n for _ in range(n)] for _ in range(n)]
    for j, l in _cartesian(range(n), repeat=2):
        row = c[j][l]
        if not any(row):
            continue
        for a in range(n):
            pja = P[j][a]
            if not pja:
                continue
            for b in range(n):
                s = pja * P[l][b]
                if not s:
                    continue
                acc = half[a][b]
                for m in range(n):
                    if row[m]:
                        acc[m] = acc[m] + s * row[m]
    table = [
        [[sum((Q[k][m] * half[a][b][m] for m in range(n)), zero) for k in range(n)] for b in range(n)]
        for a in range(n)
    ]
    return type(A)(A.d0, A.d1, table, A.field)
