"""Identity checkers for Novikov (super)algebras, Lie (super)algebras and
Gel'fand-Dorfman compatibility, plus the type N / type S classifier.

Signs ``(-1)^(ij)`` come from basis parities only.  For two homogeneous
elements ``u in A_i``, ``v in A_j`` the sign is ``-1`` exactly when both are
odd.

Lie superalgebra sign convention (not written out in the source
literature, so stated here):

* super skew-symmetry  ``[u, v] = -(-1)^(ij) [v, u]``
* super Jacobi         ``(-1)^(ik) [[u, v], w] + (-1)^(ji) [[v, w], u]
  + (-1)^(kj) [[w, u], v] = 0`` with ``w in A_k``.
"""
from __future__ import annotations

import enum
from itertools import product as _cartesian

from .core import GradedVector, SuperAlgebra, require_graded, is_graded
from .errors import DimensionMismatch, FieldMismatch, NotNovikovSuper
from .report import LawReport, Violation


class AlgebraType(enum.Enum):
    N = "N"
    S = "S"

    def __str__(self):
        return self.value


class BracketAlgebra(SuperAlgebra):
    """Same shape as :class:`SuperAlgebra`; ``c[i][j]`` holds ``[e_i, e_j]``."""

    def bracket(self, x, y):
        return self.multiply(x, y)


def _sign(A, a, b, graded=True):
    return -1 if graded and a >= A.d0 and b >= A.d0 else 1


def _axpy(acc, s, row):
    """acc += s * row, in place, skipping zeros."""
    if not s:
        return
    for m, x in enumerate(row):
        if x:
            acc[m] = acc[m] + s * x


def _compose_tables(outer, inner, field, n):
    """``T[a][b][c] = (e_a * e_b) ** e_c`` with ``*`` from inner, ``**`` from outer."""
    zero = field.zero()
    out = [[[None] * n for _ in range(n)] for _ in range(n)]
    for a, b in _cartesian(range(n), repeat=2):
        ab = inner[a][b]
        for c in range(n):
            acc = [zero] * n
            for k in range(n):
                _axpy(acc, ab[k], outer[k][c])
            out[a][b][c] = acc
    return out


def _assoc_parts(A):
    """``(e_a e_b) e_c`` and ``e_a (e_b e_c)`` for every basis triple."""
    n, c, zero = A.n, A.c, A.field.zero()
    left = _compose_tables(c, c, A.field, n)
    right = [[[None] * n for _ in range(n)] for _ in range(n)]
    for a, b, cc in _cartesian(range(n), repeat=3):
        acc = [zero] * n
        bc = c[b][cc]
        for k in range(n):
            _axpy(acc, bc[k], c[a][k])
        right[a][b][cc] = acc
    return left, right


def _report(law, A, residuals, short_circuit):
    report = LawReport(law)
    for idx, vec in residuals:
        report.checked += 1
        if any(vec):
            report.violations.append(Violation(*idx, GradedVector(A.field, vec), law))
            if short_circuit:
                break
    return report


def _left_symmetry_residuals(A, graded, parts=None):
    left, right = parts or _assoc_parts(A)
    n = A.n
    for u, v, w in _cartesian(range(n), repeat=3):
        s = _sign(A, u, v, graded)
        yield (u, v, w), [
            l1 - r1 - s * (l2 - r2)
            for l1, r1, l2, r2 in zip(left[u][v][w], right[u][v][w], left[v][u][w], right[v][u][w])
        ]


def _right_commutativity_residuals(A, graded, parts=None):
    left = (parts or _assoc_parts(A))[0]
    n = A.n
    for u, v, w in _cartesian(range(n), repeat=3):
        s = _sign(A, u, v, graded)
        yield (u, v, w), [x - s * y for x, y in zip(left[w][u][v], left[w][v][u])]


def check_left_super_symmetry(A: SuperAlgebra, short_circuit=False, _parts=None) -> LawReport:
    """``(uv)w - u(vw) = (-1)^(ij) ((vu)w - v(uw))`` on basis triples.

    Violations are reported as ``(u, v, w, residual)``.
    """
    require_graded(A)
    return _report(
        "left-super-symmetry", A, _left_symmetry_residuals(A, True, _parts), short_circuit
    )


def check_right_super_commutativity(A: SuperAlgebra, short_circuit=False, _parts=None) -> LawReport:
    """``(wu)v = (-1)^(ij) (wv)u``; violations reported as ``(u, v, w, residual)``."""
    require_graded(A)
    return _report(
        "right-super-commutativity",
        A,
        _right_commutativity_residuals(A, True, _parts),
        short_circuit,
    )


def is_novikov_superalgebra(A: SuperAlgebra, short_circuit=False) -> LawReport:
    grading = is_graded(A)
    if not grading.passed:
        return grading.merge(law="novikov-superalgebra")
    parts = _assoc_parts(A)
    left = check_left_super_symmetry(A, short_circuit, parts)
    if short_circuit and not left.passed:
        return grading.merge(left, law="novikov-superalgebra")
    right = check_right_super_commutativity(A, short_circuit, parts)
    return grading.merge(left, right, law="novikov-superalgebra")


def is_novikov_algebra(A: SuperAlgebra, short_circuit=False) -> LawReport:
    """The same two identities with every sign replaced by +1 (parity forgotten)."""
    parts = _assoc_parts(A)
    left = _report("left-symmetry", A, _left_symmetry_residuals(A, False, parts), short_circuit)
    if short_circuit and not left.passed:
        return left.merge(law="novikov-algebra")
    right = _report(
        "right-commutativity", A, _right_commutativity_residuals(A, False, parts), short_circuit
    )
    return left.merge(right, law="novikov-algebra")


def classify_type(A: SuperAlgebra) -> AlgebraType:
    """Type N if ``A`` is also a Novikov algebra once parity is forgotten, else S."""
    if not is_novikov_superalgebra(A, short_circuit=True).passed:
        raise NotNovikovSuper("classification needs a Novikov superalgebra")
    return AlgebraType.N if is_novikov_algebra(A, short_circuit=True).passed else AlgebraType.S


def _bracket_from(A, graded):
    n, c = A.n, A.c
    table = [
        [
            [c[i][j][k] - _sign(A, i, j, graded) * c[j][i][k] for k in range(n)]
            for j in range(n)
        ]
        for i in range(n)
    ]
    return BracketAlgebra(A.d0, A.d1, table, A.field)


def super_commutator(A: SuperAlgebra) -> BracketAlgebra:
    """``[u, v] = uv - (-1)^(ij) vu`` on basis elements."""
    return _bracket_from(A, True)


def commutator(A: SuperAlgebra) -> BracketAlgebra:
    """Ungraded ``[u, v] = uv - vu``."""
    return _bracket_from(A, False)


def _lie_report(B, graded, law, short_circuit):
    n = B.n
    field = B.field
    report = LawReport(law)
    if graded:
        require_graded(B)
    for u, v in _cartesian(range(n), repeat=2):
        report.checked += 1
        s = _sign(B, u, v, graded)
        res = [x + s * y for x, y in zip(B.c[u][v], B.c[v][u])]
        if any(res):
            report.violations.append(Violation(u, v, None, GradedVector(field, res), "skew-symmetry"))
            if short_circuit:
                return report
    nested = _compose_tables(B.c, B.c, field, n)  # [[e_a, e_b], e_c]
    for u, v, w in _cartesian(range(n), repeat=3):
        report.checked += 1
        s1 = _sign(B, u, w, graded)
        s2 = _sign(B, v, u, graded)
        s3 = _sign(B, w, v, graded)
        res = [
            s1 * x + s2 * y + s3 * z
            for x, y, z in zip(nested[u][v][w], nested[v][w][u], nested[w][u][v])
        ]
        if any(res):
            report.violations.append(Violation(u, v, w, GradedVector(field, res), "jacobi"))
            if short_circuit:
                return report
    return report


def is_lie_superalgebra(B: SuperAlgebra, short_circuit=False) -> LawReport:
    return _lie_report(B, True, "lie-superalgebra", short_circuit)


def is_lie_algebra(B: SuperAlgebra, short_circuit=False) -> LawReport:
    return _lie_report(B, False, "lie-algebra", short_circuit)


def is_abelian(B: SuperAlgebra) -> bool:
    return not B.nonzero_products()


def check_gd(A: SuperAlgebra, B: SuperAlgebra, short_circuit=False) -> LawReport:
    """Gel'fand-Dorfman compatibility between a product and a bracket.

    For basis ``u in A_i``, ``v in A_j`` and any basis ``w`` checks
    ``[wu, v] - (-1)^(ij) [wv, u] + [w, u]v - (-1)^(ij) [w, v]u - w[u, v] = 0``.
    Violations are reported as ``(u, v, w, residual)``.
    """
    if (A.d0, A.d1) != (B.d0, B.d1):
        raise DimensionMismatch("product and bracket have different graded dimensions")
    if A.field != B.field:
        raise FieldMismatch("product and bracket live over different fields")
    n, field = A.n, A.field
    prod_then_bracket = _compose_tables(B.c, A.c, field, n)  # [e_a e_b, e_c]
    bracket_then_prod = _compose_tables(A.c, B.c, field, n)  # [e_a, e_b] e_c
    zero = field.zero()

    def residuals():
        for u, v, w in _cartesian(range(n), repeat=3):
            s = _sign(A, u, v)
            acc = [
                a - s * b + c - s * d
                for a, b, c, d in zip(
                    prod_then_bracket[w][u][v],
                    prod_then_bracket[w][v][u],
                    bracket_then_prod[w][u][v],
                    bracket_then_prod[w][v][u],
                )
            ]
            uv = B.c[u][v]
            tail = [zero] * n
            for k in range(n):
                _axpy(tail, uv[k], A.c[w][k])
            yield (u, v, w), [x - y for x, y in zip(acc, tail)]

    return _report("gelfand-dorfman", A, residuals(), short_circuit)
