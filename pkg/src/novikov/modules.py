"""Modules over Novikov algebras and the catalog of 2-dimensional modules
over 1-dimensional Novikov algebras.

A module ``M`` over a Novikov algebra ``A`` carries two linear maps
``L, R: A -> End(M)``.  Matrices act on column vectors, so ``R(y) L(x)``
means "apply ``L(x)`` first".  The axioms, for basis elements ``x, y``::

    (1) L(xy) = R(y) L(x)
    (2) R(xy) - R(y) R(x) = [L(x), R(y)]
    (3) R(x) R(y) = R(y) R(x)
    (4) [L(x), L(y)] = L([x, y])

Over a 1-dimensional base ``ee = eps * e`` these collapse to
``RL = 0, R^2 = -LR`` (eps = 0) and ``RL = L, R^2 = R + L - LR`` (eps = 1).
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product as _cartesian

from . import linalg
from .core import SuperAlgebra
from .errors import DimensionMismatch, NotNovikov, ParameterConstraint
from .laws import is_novikov_algebra
from .report import LawReport, Violation
from .scalars import QQ, Field

EXHAUSTIVE_PRIME_CAP = 3


@dataclass(frozen=True)
class NovikovAlgebra1D:
    """``ee = eps * e`` with ``eps`` in {0, 1}."""

    eps: int

    def __post_init__(self):
        if self.eps not in (0, 1):
            raise ValueError("eps must be 0 or 1")

    def algebra(self, field: Field = QQ) -> SuperAlgebra:
        return SuperAlgebra(1, 0, [[[self.eps]]], field)


class NovikovModule:
    """Left/right action matrices ``L[x]``, ``R[x]`` for each base basis index."""

    def __init__(self, base: SuperAlgebra, L, R):
        if base.d1:
            raise DimensionMismatch("the base of a module must be an ungraded Novikov algebra")
        if len(L) != base.n or len(R) != base.n:
            raise DimensionMismatch("one L and one R matrix per base basis element")
        field = base.field
        self.base = base
        self.L = tuple(linalg.matrix(field, m) for m in L)
        self.R = tuple(linalg.matrix(field, m) for m in R)
        mats = self.L + self.R
        self.m = len(mats[0]) if mats else 0
        if any(linalg.shape(a) != (self.m, self.m) for a in mats):
            raise DimensionMismatch("all action matrices must be m x m")

    @property
    def field(self):
        return self.base.field

    def left(self, coeffs):
        """L applied linearly to an element of the base."""
        return self._combine(self.L, coeffs)

    def right(self, coeffs):
        return self._combine(self.R, coeffs)

    def _combine(self, mats, coeffs):
        acc = linalg.zeros(self.field, self.m)
        for c, mat in zip(coeffs, mats):
            if c:
                acc = linalg.add(acc, linalg.scale(c, mat))
        return acc

    def __eq__(self, other):
        if not isinstance(other, NovikovModule):
            return NotImplemented
        return (self.base, self.L, self.R) == (other.base, other.L, other.R)

    def __hash__(self):
        return hash((self.base, self.L, self.R))

    def __repr__(self):
        return f"NovikovModule(m={self.m}, L={self.L}, R={self.R})"


def check_module_axioms(alg: SuperAlgebra, M: NovikovModule, short_circuit=False) -> LawReport:
    """All four module equations on base basis pairs.

    Violations are ``(x, y, equation_number, residual_matrix)``.
    """
    if not is_novikov_algebra(alg, short_circuit=True).passed or alg.d1:
        raise NotNovikov("module base must be a Novikov algebra with no odd part")
    if alg != M.base:
        M = NovikovModule(alg, M.L, M.R)
    report = LawReport("novikov-module")
    n = alg.n
    L, R = M.L, M.R
    mm, cm = linalg.matmul, linalg.commutator
    for x, y in _cartesian(range(n), repeat=2):
        xy = alg.c[x][y]
        yx = alg.c[y][x]
        bracket = [a - b for a, b in zip(xy, yx)]
        equations = (
            linalg.sub(M.left(xy), mm(R[y], L[x])),
            linalg.sub(linalg.sub(M.right(xy), mm(R[y], R[x])), cm(L[x], R[y])),
            cm(R[x], R[y]),
            linalg.sub(cm(L[x], L[y]), M.left(bracket)),
        )
        for number, residual in enumerate(equations, start=1):
            report.checked += 1
            if not linalg.is_zero(residual):
                report.violations.append(Violation(x, y, number, residual, f"module-eq-{number}"))
                if short_circuit:
                    return report
    return report


def one_dim_relations(eps: int, L, R):
    """Residuals of the collapsed 1-dimensional relations (both must vanish)."""
    mm = linalg.matmul
    RL, LR, RR = mm(R, L), mm(L, R), mm(R, R)
    if eps == 0:
        return RL, linalg.add(RR, LR)
    return linalg.sub(RL, L), linalg.sub(RR, linalg.sub(linalg.add(R, L), LR))


def satisfies_one_dim(eps: int, L, R) -> bool:
    first, second = one_dim_relations(eps, L, R)
    return linalg.is_zero(first) and linalg.is_zero(second)


# --------------------------------------------------------------------------- catalog


@dataclass(frozen=True)
class CatalogTag:
    name: str
    params: dict = dc_field(default_factory=dict, hash=False, compare=True)

    def __str__(self):
        if not self.params:
            return self.name
        inner = ",".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        return f"{self.name}({inner})"


def _rows(eps, params, constraint, build):
    return {"eps": eps, "params": params, "constraint": constraint, "build": build}


def _b_nonzero(b):
    if not b:
        raise ParameterConstraint("T12 needs b != 0")


def _distinct(a1, a2):
    if a1 == a2:
        raise ParameterConstraint("T11 needs a1 != a2")


# (eps, parameter names, constraint, (L, R) builder); entries as printed in the table
CATALOG = {
    "T1": _rows(0, (), None, lambda: ([[0, 0], [0, 0]], [[0, 0], [0, 0]])),
    "T2": _rows(0, ("a",), None, lambda a: ([[1, 0], [0, a]], [[0, 0], [0, 0]])),
    "T3": _rows(0, (), None, lambda: ([[0, 0], [1, 0]], [[0, 0], [0, 0]])),
    "T4": _rows(0, (), None, lambda: ([[1, 0], [1, 1]], [[0, 0], [0, 0]])),
    "T5": _rows(0, ("a",), None, lambda a: ([[0, 0], [a, 0]], [[0, 0], [1, 0]])),
    "T6": _rows(0, ("a",), None, lambda a: ([[0, 0], [a, 1]], [[0, 0], [1, 0]])),
    "T7": _rows(1, (), None, lambda: ([[0, 0], [0, 0]], [[0, 0], [0, 0]])),
    "T8": _rows(1, ("a",), None, lambda a: ([[a, 0], [0, 0]], [[1, 0], [0, 0]])),
    "T9": _rows(1, ("a",), None, lambda a: ([[a, 0], [0, a]], [[1, 0], [0, 1]])),
    "T10": _rows(1, ("a",), None, lambda a: ([[a, 0], [1, a]], [[1, 0], [0, 1]])),
    "T11": _rows(1, ("a1", "a2"), _distinct, lambda a1, a2: ([[a1, 0], [0, a2]], [[1, 0], [0, 1]])),
    "T12": _rows(1, ("b",), _b_nonzero, lambda b: ([[-1, 0], [0, 0]], [[1, b], [0, 1]])),
}

TAG_NAMES = tuple(CATALOG)


def catalog_instantiate(tag: CatalogTag, field: Field = QQ, catalog=None):
    """``(NovikovAlgebra1D, NovikovModule)`` for one row of the catalog."""
    catalog = CATALOG if catalog is None else catalog
    try:
        row = catalog[tag.name]
    except KeyError:
        raise ParameterConstraint(f"unknown catalog tag {tag.name!r}") from None
    names = row["params"]
    if set(tag.params) != set(names):
        raise ParameterConstraint(
            f"{tag.name} takes parameters {list(names) or 'none'}, got {sorted(tag.params)}"
        )
    values = [field(tag.params[k]) for k in names]
    if row["constraint"] is not None:
        row["constraint"](*values)
    L, R = row["build"](*values)
    alg1 = NovikovAlgebra1D(row["eps"])
    return alg1, NovikovModule(alg1.algebra(field), [L], [R])


def tags_over(field: Field, values=None, catalog=None):
    """Every catalog tag with parameters drawn from ``values`` (default: all of GF(p)).

    Parameter constraints are respected by skipping invalid combinations.
    """
    catalog = CATALOG if catalog is None else catalog
    if values is None:
        values = [x.value for x in field.elements()]
    for name, row in catalog.items():
        for combo in _cartesian(values, repeat=len(row["params"])):
            tag = CatalogTag(name, dict(zip(row["params"], combo)))
            try:
                catalog_instantiate(tag, field, catalog)
            except ParameterConstraint:
                continue
            yield tag


RATIONAL_GRID = (-2, -1, 1, 2, 3)


def rational_grid_tags(catalog=None):
    """Grid {-2, -1, 1, 2, 3} plus 0 wherever the row's constraint allows it."""
    return list(tags_over(QQ, (0,) + RATIONAL_GRID, catalog))


# --------------------------------------------------------------------------- finite fields


def _check_prime_cap(p, allow_large):
    if p > EXHAUSTIVE_PRIME_CAP and not allow_large:
        raise ValueError(
            f"exhaustive 2x2 enumeration is capped at p <= {EXHAUSTIVE_PRIME_CAP}; "
            "pass allow_large=True to override"
        )


def all_matrices(field: Field, m=2):
    elems = field.elements()
    return [
        tuple(tuple(entries[i * m:(i + 1) * m]) for i in range(m))
        for entries in _cartesian(elems, repeat=m * m)
    ]


def enumerate_modules_gf(p: int, eps: int, allow_large=False):
    """Every ``(L, R)`` pair of 2x2 matrices over GF(p) satisfying the collapsed relations.

    Output is in lexicographic order of the flattened ``(L, R)`` residues.
    """
    _check_prime_cap(p, allow_large)
    field = Field.gf(p)
    mats = all_matrices(field)
    mm = linalg.matmul
    out = []
    for L in mats:
        for R in mats:
            RL = mm(R, L)
            # cheap rejection on the first relation before squaring R
            if eps == 0:
                if not linalg.is_zero(RL):
                    continue
            elif RL != L:
                continue
            if linalg.is_zero(one_dim_relations(eps, L, R)[1]):
                out.append((L, R))
    return out


def _orbit_key(L, R):
    return tuple(x.value for row in L + R for x in row)


class _Orbits:
    """Canonical orbit keys under conjugation (and scaling when eps = 0)."""

    def __init__(self, field: Field, eps: int):
        self.field = field
        self.eps = eps
        self.group = [(P, linalg.inverse(P)) for P in linalg.general_linear_group(field)]
        self.scalars = [s for s in field.elements() if s] if eps == 0 else [field.one()]
        self._cache = {}

    def orbit(self, L, R):
        seen = set()
        for s in self.scalars:
            sL, sR = linalg.scale(s, L), linalg.scale(s, R)
            for P, Pi in self.group:
                a = linalg.conjugate(P, sL, Pi)
                b = linalg.conjugate(P, sR, Pi)
                seen.add(_orbit_key(a, b))
        return seen

    def canonical(self, L, R):
        key = _orbit_key(L, R)
        if key not in self._cache:
            orb = self.orbit(L, R)
            rep = min(orb)
            for k in orb:
                self._cache[k] = rep
        return self._cache[key]


def module_equivalent(eps: int, M1, M2, field: Field) -> bool:
    """True iff some invertible P (and, when eps = 0, a nonzero scalar s) maps
    ``(L1, R1)`` to ``(s P L1 P^-1, s P R1 P^-1) = (L2, R2)``.

    ``M1``, ``M2`` are ``(L, R)`` pairs or 1-dimensional-base NovikovModules.
    """
    if field.is_rational:
        raise ValueError("equivalence search needs a prime field")
    pairs = []
    for M in (M1, M2):
        if isinstance(M, NovikovModule):
            M = (M.L[0], M.R[0])
        pairs.append(tuple(linalg.matrix(field, x) for x in M))
    (L1, R1), (L2, R2) = pairs
    return _orbit_key(L2, R2) in _Orbits(field, eps).orbit(L1, R1)


def verify_catalog_completeness(p: int, allow_large=False, catalog=None) -> LawReport:
    """Every module pair over GF(p) must be equivalent to some catalog row.

    Orphans are listed as violations ``(eps, None, None, (L, R))``; the
    report never drops them.
    """
    _check_prime_cap(p, allow_large)
    field = Field.gf(p)
    catalog = CATALOG if catalog is None else catalog
    report = LawReport(f"catalog-completeness-gf{p}")
    for eps in (0, 1):
        orbits = _Orbits(field, eps)
        covered = {}
        for tag in tags_over(field, catalog=catalog):
            if catalog[tag.name]["eps"] != eps:
                continue
            _, M = catalog_instantiate(tag, field, catalog)
            covered.setdefault(orbits.canonical(M.L[0], M.R[0]), str(tag))
        for L, R in enumerate_modules_gf(p, eps, allow_large):
            report.checked += 1
            if orbits.canonical(L, R) not in covered:
                report.violations.append(Violation(eps, None, None, (L, R), "orphan"))
    return report


def _counterexample_report(name, p, premise, conclusion, allow_large):
    _check_prime_cap(p, allow_large)
    field = Field.gf(p)
    mats = all_matrices(field)
    report = LawReport(f"{name}-gf{p}")
    for L in mats:
        for R in mats:
            report.checked += 1
            if premise(L, R) and not conclusion(L, R):
                report.violations.append(Violation(L, R, None, "premise holds, conclusion fails", name))
    return report


def check_claim_33(p: int, allow_large=False) -> LawReport:
    """Over GF(p): ``RL = 0 and R^2 = -LR`` implies ``R^2 = 0``."""
    return _counterexample_report(
        "ee0-square-zero",
        p,
        lambda L, R: satisfies_one_dim(0, L, R),
        lambda L, R: linalg.is_zero(linalg.matmul(R, R)),
        allow_large,
    )


def similar_to_rank_one_diagonal(L) -> bool:
    """A 2x2 matrix is similar to diag(a, 0) with a != 0 iff det = 0 and trace != 0.

    (det = 0 leaves eigenvalues 0 and trace; a nonzero trace makes them
    distinct, hence diagonalizable.)
    """
    return not linalg.det(L) and bool(linalg.trace(L))


def check_claim_34(p: int, allow_large=False) -> LawReport:
    """Over GF(p): ``RL = L, R^2 = R + L - LR, LR != RL`` implies L ~ diag(a, 0), a != 0."""
    mm = linalg.matmul
    return _counterexample_report(
        "ee1-rank-one",
        p,
        lambda L, R: satisfies_one_dim(1, L, R) and mm(L, R) != mm(R, L),
        lambda L, R: similar_to_rank_one_diagonal(L),
        allow_large,
    )
