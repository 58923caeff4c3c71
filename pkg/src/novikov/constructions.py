"""Builders that produce Novikov superalgebras from simpler data.

* :func:`from_assoc_module` -- ``D + A`` with ``(d1 + a1) o (d2 + a2) = (-1)^(ij) a2 d1 + a1 a2``
* :func:`from_derivation`   -- ``u o v = u d(v) + c u v``
* :func:`extend`            -- even part, odd module and an odd pairing glued together

Matrices act on column vectors throughout: ``act[k][i][j]`` is the
coefficient of ``d_i`` in ``a_k . d_j``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product as _cartesian

import numpy as np

from . import fastcheck, linalg
from .core import GradedVector, SuperAlgebra, bilinear, is_graded
from .errors import (
    DimensionMismatch,
    NotAssociative,
    NotDerivation,
    NotEvenElement,
    NotGraded,
    NotModule,
    NotNovikovSuper,
    NotSupercommutative,
    OddDerivation,
)
from .laws import _assoc_parts, _sign, is_novikov_superalgebra
from .modules import CatalogTag, NovikovModule, catalog_instantiate
from .report import LawReport, Violation
from .scalars import Field


class AssocSuperAlgebra(SuperAlgebra):
    """Associative, supercommutative superalgebra; both properties are checked."""

    def __init__(self, d0, d1, table, field=None):
        if field is None:
            super().__init__(d0, d1, table)
        else:
            super().__init__(d0, d1, table, field)
        if not is_graded(self).passed:
            raise NotGraded("product does not respect the grading")
        left, right = _assoc_parts(self)
        n = self.n
        for a, b, c in _cartesian(range(n), repeat=3):
            if left[a][b][c] != right[a][b][c]:
                raise NotAssociative(f"(e{a} e{b}) e{c} != e{a} (e{b} e{c})")
        for a, b in _cartesian(range(n), repeat=2):
            s = _sign(self, a, b)
            if any(x - s * y for x, y in zip(self.c[a][b], self.c[b][a])):
                raise NotSupercommutative(f"e{a} e{b} != (-1)^(ij) e{b} e{a}")

    @classmethod
    def wrap(cls, A: SuperAlgebra) -> "AssocSuperAlgebra":
        if isinstance(A, cls):
            return A
        return cls(A.d0, A.d1, A.c, A.field)


def _post_check(A: SuperAlgebra, what: str) -> SuperAlgebra:
    report = is_novikov_superalgebra(A, short_circuit=True)
    if not report.passed:
        v = report.violations[0]
        raise NotNovikovSuper(f"{what} produced a product failing {v.law} at {v[:3]}")
    return A


def from_assoc_module(A, d_dims, action) -> SuperAlgebra:
    """``D + A`` for an associative supercommutative ``A`` and a left ``A``-module ``D``.

    ``d_dims = (dd0, dd1)`` grades ``D``; ``action[k]`` is the matrix of
    ``a_k`` on ``D``.  The result is ordered ``D0, A0, D1, A1`` (even first).
    """
    A = AssocSuperAlgebra.wrap(A)
    field = A.field
    dd0, dd1 = d_dims
    m = dd0 + dd1
    if len(action) != A.n:
        raise DimensionMismatch("one action matrix per basis element of A")
    act = [linalg.matrix(field, a) for a in action]
    if any(linalg.shape(a) != (m, m) for a in act):
        raise DimensionMismatch(f"action matrices must be {m}x{m}")

    def dpar(i):
        return 0 if i < dd0 else 1

    for k, mat in enumerate(act):
        for i, j in _cartesian(range(m), repeat=2):
            if mat[i][j] and dpar(i) != (dpar(j) + A.parity(k)) % 2:
                raise NotModule(f"a{k} sends d{j} to the wrong parity (d{i})")
    for a, b in _cartesian(range(A.n), repeat=2):
        combo = linalg.zeros(field, m)
        for k, coef in enumerate(A.c[a][b]):
            if coef:
                combo = linalg.add(combo, linalg.scale(coef, act[k]))
        if linalg.matmul(act[a], act[b]) != combo:
            raise NotModule(f"a{a} (a{b} d) != (a{a} a{b}) d")

    # positions in the combined basis
    d_pos = [i if i < dd0 else None for i in range(m)]
    a_pos = [None] * A.n
    d0_total = dd0 + A.d0
    for t in range(A.n):
        a_pos[t] = dd0 + t if t < A.d0 else d0_total + dd1 + (t - A.d0)
    for i in range(dd0, m):
        d_pos[i] = d0_total + (i - dd0)
    n = m + A.n
    table = [[[field.zero()] * n for _ in range(n)] for _ in range(n)]
    for s in range(m):
        for t in range(A.n):
            sign = -1 if dpar(s) and A.parity(t) else 1
            for i in range(m):
                if act[t][i][s]:
                    table[d_pos[s]][a_pos[t]][d_pos[i]] = sign * act[t][i][s]
    for s, t, k in _cartesian(range(A.n), repeat=3):
        table[a_pos[s]][a_pos[t]][a_pos[k]] = A.c[s][t][k]
    result = SuperAlgebra(d0_total, dd1 + A.d1, table, field)
    return _post_check(result, "from_assoc_module")


def from_derivation(A, d, c) -> SuperAlgebra:
    """``u o v = u d(v) + c u v`` for an even derivation ``d`` and even ``c``.

    ``d[i][j]`` is the coefficient of ``e_i`` in ``d(e_j)``.
    """
    A = AssocSuperAlgebra.wrap(A)
    field, n = A.field, A.n
    d = linalg.matrix(field, d)
    if linalg.shape(d) != (n, n):
        raise DimensionMismatch(f"derivation must be {n}x{n}")
    c = GradedVector(field, c)
    if len(c) != n:
        raise DimensionMismatch(f"c must have {n} coefficients")
    if any(d[i][j] for i, j in _cartesian(range(n), repeat=2) if A.parity(i) != A.parity(j)):
        raise OddDerivation("d does not preserve parity")
    if not c.is_homogeneous(A.d0, 0):
        raise NotEvenElement("c must lie in the even part")

    def apply_d(vec):
        return GradedVector(field, [sum((d[i][j] * vec[j] for j in range(n)), field.zero()) for i in range(n)])

    mul = lambda x, y: bilinear(A.c, field, x, y)  # noqa: E731
    for a, b in _cartesian(range(n), repeat=2):
        ea, eb = A.basis(a), A.basis(b)
        lhs = apply_d(A.product(a, b))
        rhs = mul(apply_d(ea), eb) + mul(ea, apply_d(eb))
        if lhs != rhs:
            raise NotDerivation(f"Leibniz rule fails on (e{a}, e{b})")
    table = []
    for a in range(n):
        ea = A.basis(a)
        ca = mul(c, ea)
        table.append([list(mul(ea, apply_d(A.basis(b))) + mul(ca, A.basis(b))) for b in range(n)])
    result = SuperAlgebra(A.d0, A.d1, table, field)
    return _post_check(result, "from_derivation")


@dataclass(frozen=True)
class OddPairing:
    """``v_s o v_t = sum_k table[s][t][k] e_k`` for odd ``v`` and even ``e``."""

    table: tuple

    @classmethod
    def zero(cls, d1, d0):
        return cls(tuple(tuple(tuple(0 for _ in range(d0)) for _ in range(d1)) for _ in range(d1)))

    @classmethod
    def from_products(cls, d1, d0, products):
        t = [[[0] * d0 for _ in range(d1)] for _ in range(d1)]
        for (s, u, k), v in products.items():
            t[s][u][k] = v
        return cls(tuple(tuple(tuple(r) for r in row) for row in t))

    @property
    def shape(self):
        d1 = len(self.table)
        d0 = len(self.table[0][0]) if d1 else 0
        return d1, d1, d0


def extend(alg0: SuperAlgebra, M: NovikovModule, pairing: OddPairing | None = None) -> SuperAlgebra:
    """Glue an even algebra, an odd module and an odd pairing.

    Convention: ``x o v = L(x) v`` and ``v o x = R(x) v`` for even ``x``,
    odd ``v``.  The result is not checked; callers decide what to verify.
    """
    if alg0.d1:
        raise DimensionMismatch("the even part must have no odd basis elements")
    d0, d1 = alg0.d0, M.m
    if M.base.n != d0:
        raise DimensionMismatch("module base does not match the even part")
    if pairing is None:
        pairing = OddPairing.zero(d1, d0)
    if pairing.shape != (d1, d1, d0):
        raise DimensionMismatch(f"pairing must be {d1}x{d1}x{d0}")
    field = alg0.field
    n = d0 + d1
    table = [[[field.zero()] * n for _ in range(n)] for _ in range(n)]
    for a, b, k in _cartesian(range(d0), repeat=3):
        table[a][b][k] = alg0.c[a][b][k]
    for a in range(d0):
        for s, t in _cartesian(range(d1), repeat=2):
            table[a][d0 + s][d0 + t] = M.L[a][t][s]
            table[d0 + s][a][d0 + t] = M.R[a][t][s]
    for s, t, k in _cartesian(*(range(d1),) * 2, range(d0)):
        table[d0 + s][d0 + t][k] = field(pairing.table[s][t][k])
    return SuperAlgebra(d0, d1, table, field)


def _pairings(p, d1, d0):
    slots = d1 * d1 * d0
    for digits in _cartesian(range(p), repeat=slots):
        it = iter(digits)
        yield OddPairing(
            tuple(tuple(tuple(next(it) for _ in range(d0)) for _ in range(d1)) for _ in range(d1))
        )


def verify_prop36(tag: CatalogTag, p: int, method="fast", catalog=None) -> LawReport:
    """Which odd pairings turn a catalog module into a Novikov superalgebra?

    Brute force over all ``p^4`` pairings ``A1 x A1 -> A0`` on top of
    ``extend(base, module)``.  Passes when, for T2..T12, only the zero pairing
    survives, and for T1 more than the zero pairing survives.  The passing
    pairings are in ``details["passing"]``.
    """
    field = Field.gf(p)
    alg1, M = catalog_instantiate(tag, field, catalog)
    base = alg1.algebra(field)
    d0, d1 = 1, M.m
    pairings = list(_pairings(p, d1, d0))
    if method == "fast":
        skeleton = fastcheck.to_array(extend(base, M))
        digits = np.array([[x for row in q.table for col in row for x in col] for q in pairings], dtype=np.int64)
        batch = np.repeat(skeleton[None], len(pairings), axis=0)
        slot = 0
        for s, t, k in _cartesian(range(d1), range(d1), range(d0)):
            batch[:, d0 + s, d0 + t, k] = digits[:, slot]
            slot += 1
        ok, _ = fastcheck.novikov_masks(batch, d0, p, plain=False)
        passing = [q for q, flag in zip(pairings, ok) if flag]
    elif method == "reference":
        passing = [
            q for q in pairings
            if is_novikov_superalgebra(extend(base, M, q), short_circuit=True).passed
        ]
    else:
        raise ValueError(f"unknown method {method!r}")
    zero = OddPairing.zero(d1, d0)
    report = LawReport(f"odd-pairings[{tag}]-gf{p}", checked=len(pairings))
    report.details = {"passing": passing, "total": len(pairings)}
    report.notes.append(f"{len(passing)} of {len(pairings)} pairings give a Novikov superalgebra")
    if tag.name == "T1":
        if len(passing) <= 1:
            report.violations.append(Violation(str(tag), None, None, len(passing), "T1-expected-more"))
    else:
        if zero not in passing:
            report.violations.append(Violation(str(tag), None, None, zero, "zero-pairing-fails"))
        for q in passing:
            if q != zero:
                report.violations.append(Violation(str(tag), None, None, q, "nonzero-pairing"))
    return report
