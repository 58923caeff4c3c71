from fractions import Fraction

import pytest

from novikov import linalg
from novikov.errors import NotNovikov, ParameterConstraint
from novikov.core import SuperAlgebra
from novikov.modules import (
    CATALOG,
    CatalogTag,
    NovikovAlgebra1D,
    NovikovModule,
    catalog_instantiate,
    check_claim_33,
    check_claim_34,
    check_module_axioms,
    enumerate_modules_gf,
    module_equivalent,
    rational_grid_tags,
    satisfies_one_dim,
    similar_to_rank_one_diagonal,
    tags_over,
    verify_catalog_completeness,
)
from novikov.scalars import QQ, Field

import oracles

F2, F3 = Field.gf(2), Field.gf(3)


def values(M):
    return [[x.value for x in row] for row in M]


def module(eps, L, R, field=QQ):
    return NovikovModule(NovikovAlgebra1D(eps).algebra(field), [L], [R])


def test_t8_example_passes():
    M = module(1, [[2, 0], [0, 0]], [[1, 0], [0, 0]])
    assert check_module_axioms(M.base, M).passed


def test_zero_action_is_a_module():
    for eps in (0, 1):
        M = module(eps, [[0, 0], [0, 0]], [[0, 0], [0, 0]])
        assert check_module_axioms(M.base, M).passed


def test_planted_module_failure():
    M = module(0, [[0, 0], [0, 0]], [[1, 0], [0, 0]])
    report = check_module_axioms(M.base, M)
    assert not report.passed
    # R^2 = diag(1, 0) but -LR = 0: equation 2 fails at (x, y) = (0, 0)
    assert [(v.i, v.j, v.k) for v in report.violations] == [(0, 0, 2)]
    assert values(report.violations[0].residual) == [[-1, 0], [0, 0]]


def test_module_base_must_be_novikov():
    bad = SuperAlgebra.from_products(2, 0, {(0, 0, 1): 1, (1, 0, 0): 1})
    M = NovikovModule(bad, [[[0]], [[0]]], [[[0]], [[0]]])
    with pytest.raises(NotNovikov):
        check_module_axioms(bad, M)


def test_axioms_match_semidirect_oracle():
    """Module axioms hold exactly when the semidirect product is Novikov."""
    for eps in (0, 1):
        found = {(tuple(map(tuple, values(L))), tuple(map(tuple, values(R)))) for L, R in enumerate_modules_gf(2, eps)}
        assert found == set(oracles.module_pairs(2, eps))


def test_enumeration_counts_gf3():
    for eps, expected in ((0, 105), (1, 142)):
        assert len(enumerate_modules_gf(3, eps)) == len(oracles.module_pairs(3, eps)) == expected


def test_enumeration_prime_cap():
    with pytest.raises(ValueError):
        enumerate_modules_gf(5, 0)


def test_catalog_rows():
    alg, M = catalog_instantiate(CatalogTag("T5", {"a": 3}))
    assert alg.eps == 0
    assert values(M.L[0]) == [[0, 0], [3, 0]] and values(M.R[0]) == [[0, 0], [1, 0]]
    alg, M = catalog_instantiate(CatalogTag("T1"))
    assert alg.eps == 0 and values(M.L[0]) == values(M.R[0]) == [[0, 0], [0, 0]]
    assert str(CatalogTag("T11", {"a1": 1, "a2": Fraction(1, 2)})) == "T11(a1=1,a2=1/2)"


@pytest.mark.parametrize(
    "tag", [CatalogTag("T12", {"b": 0}), CatalogTag("T11", {"a1": 2, "a2": 2}), CatalogTag("T5"), CatalogTag("T13")]
)
def test_catalog_constraints(tag):
    with pytest.raises(ParameterConstraint):
        catalog_instantiate(tag)


def test_rational_grid_respects_constraints():
    tags = rational_grid_tags()
    assert not any(t.name == "T12" and t.params["b"] == 0 for t in tags)
    assert not any(t.name == "T11" and t.params["a1"] == t.params["a2"] for t in tags)
    assert sum(t.name == "T11" for t in tags) == 30
    assert sum(t.name == "T2" for t in tags) == 6


@pytest.mark.parametrize("name", [n for n in CATALOG if n != "T6"])
def test_catalog_rows_are_modules(name):
    for tag in rational_grid_tags():
        if tag.name == name:
            alg, M = catalog_instantiate(tag)
            assert check_module_axioms(alg.algebra(), M).passed, str(tag)


def test_row_t6_fails_for_every_parameter():
    # L = [[0,0],[a,1]], R = [[0,0],[1,0]]: R^2 = 0 while -LR = [[0,0],[-1,0]]
    for tag in rational_grid_tags():
        if tag.name == "T6":
            alg, M = catalog_instantiate(tag)
            report = check_module_axioms(alg.algebra(), M)
            assert {v.k for v in report.violations} == {2}
            L, R = M.L[0], M.R[0]
            expected = oracles.semidirect(0, values(L), values(R))
            assert not oracles.is_novikov(expected, [0, 0, 0], graded=False)


def test_module_equivalence():
    T3 = ([[0, 0], [1, 0]], [[0, 0], [0, 0]])
    P = linalg.matrix(F3, [[1, 1], [0, 1]])
    conj = (linalg.conjugate(P, linalg.matrix(F3, T3[0])), linalg.conjugate(P, linalg.matrix(F3, T3[1])))
    assert module_equivalent(0, T3, T3, F3)
    assert module_equivalent(0, T3, conj, F3)
    T7 = ([[0, 0], [0, 0]], [[0, 0], [0, 0]])
    T8 = ([[1, 0], [0, 0]], [[1, 0], [0, 0]])
    assert not module_equivalent(1, T7, T8, F3)


def test_scaling_only_when_eps_zero():
    a = ([[1, 0], [0, 0]], [[0, 0], [0, 0]])
    b = ([[2, 0], [0, 0]], [[0, 0], [0, 0]])
    assert module_equivalent(0, a, b, F3)
    assert not module_equivalent(1, a, b, F3)


def test_claims_hold_by_brute_force():
    for p in (2, 3):
        for fn in (check_claim_33, check_claim_34):
            r = fn(p)
            assert r.passed and r.checked == p**8


def test_rank_one_diagonal_test():
    assert similar_to_rank_one_diagonal(linalg.matrix(F3, [[1, 1], [0, 0]]))
    assert not similar_to_rank_one_diagonal(linalg.matrix(F3, [[0, 1], [0, 0]]))
    assert not similar_to_rank_one_diagonal(linalg.matrix(F3, [[1, 0], [0, 1]]))


def test_zero_right_action_satisfies_claim_33_premise():
    Z = linalg.zeros(F2, 2)
    for L in ([[1, 1], [0, 1]], [[0, 1], [1, 0]]):
        assert satisfies_one_dim(0, linalg.matrix(F2, L), Z)


def _irreducible_charpoly(L, p):
    tr, det = linalg.trace(L).value, linalg.det(L).value
    return all((x * x - tr * x + det) % p for x in range(p))


@pytest.mark.parametrize("p,orphans", [(2, 4), (3, 36)])
def test_completeness_orphans_are_irreducible(p, orphans):
    """Only L with no eigenvalue in GF(p) escape the catalog (R = 0 or R = I)."""
    r = verify_catalog_completeness(p)
    assert r.checked == len(oracles.module_pairs(p, 0)) + len(oracles.module_pairs(p, 1))
    assert len(r.violations) == orphans
    for v in r.violations:
        L, R = v.residual
        assert _irreducible_charpoly(L, p)
        assert values(R) == ([[0, 0], [0, 0]] if v.i == 0 else [[1, 0], [0, 1]])


def test_completeness_with_full_orbit_coverage():
    """Adding the two irreducible families closes the GF(2) classification."""
    extra = dict(CATALOG)
    extra["X0"] = {"eps": 0, "params": (), "constraint": None, "build": lambda: ([[0, 1], [1, 1]], [[0, 0], [0, 0]])}
    extra["X1"] = {"eps": 1, "params": (), "constraint": None, "build": lambda: ([[0, 1], [1, 1]], [[1, 0], [0, 1]])}
    assert verify_catalog_completeness(2, catalog=extra).passed


def test_tags_over_gf5_counts():
    tags = list(tags_over(Field.gf(5)))
    assert sum(t.name == "T11" for t in tags) == 20
    assert sum(t.name == "T12" for t in tags) == 4
