import random

import pytest

from novikov import linalg
from novikov.core import GradedVector, SuperAlgebra, is_graded, multiply, parity, transform
from novikov.errors import NotGraded, SingularTransform
from novikov.sampling import random_graded_matrix
from novikov.scalars import QQ, Field

ODD_SQUARE = SuperAlgebra.from_products(1, 1, {(1, 1, 0): 1})
ANTISYM = SuperAlgebra.from_products(1, 2, {(1, 2, 0): 1, (2, 1, 0): -1})


def test_parity():
    A = SuperAlgebra.zero(1, 2)
    assert parity(A, 0) == 0
    assert parity(A, 2) == 1
    with pytest.raises(IndexError):
        parity(A, 3)


def test_example_products():
    e, v = ODD_SQUARE.basis(0), ODD_SQUARE.basis(1)
    assert multiply(ODD_SQUARE, v, v) == e
    e, u, v = (ANTISYM.basis(i) for i in range(3))
    assert multiply(ANTISYM, u, v) == e
    assert multiply(ANTISYM, v, u) == -e


def test_multiply_by_zero_and_bilinearity():
    zero = ANTISYM.vector([0, 0, 0])
    assert multiply(ANTISYM, zero, ANTISYM.basis(1)).is_zero()
    x, y = ANTISYM.vector([1, 2, 3]), ANTISYM.vector([0, -1, 5])
    # (x1 u + x2 v)(y1 u + y2 v) = (x1 y2 - x2 y1) e
    assert multiply(ANTISYM, x, y) == ANTISYM.vector([2 * 5 - 3 * (-1), 0, 0])
    assert multiply(ANTISYM, 2 * x, y) == 2 * multiply(ANTISYM, x, y)


def test_graded_vector_arithmetic():
    a = GradedVector(QQ, [1, 2])
    b = GradedVector(QQ, [0, 1])
    assert a - b == GradedVector(QQ, [1, 1])
    assert (a + b).coeffs[1] == QQ(3)
    assert b.is_homogeneous(1, 1) and not a.is_homogeneous(1, 1)


def test_is_graded_flags_wrong_parity():
    bad = SuperAlgebra.from_products(1, 1, {(0, 0, 1): 1})
    report = is_graded(bad)
    assert not report.passed
    assert [v[:3] for v in report.violations] == [(0, 0, 1)]
    assert is_graded(ANTISYM).passed


def test_transform_identity_and_inverse():
    I = linalg.identity(QQ, 3)
    assert transform(ANTISYM, I) == ANTISYM
    rng = random.Random(1)
    for _ in range(20):
        P = random_graded_matrix(rng, 1, 2)
        B = transform(ANTISYM, P)
        assert transform(B, linalg.inverse(P)) == ANTISYM


def test_transform_known_change():
    # new odd basis vector 2v squares to 4e
    P = ((QQ(1), QQ(0)), (QQ(0), QQ(2)))
    B = transform(ODD_SQUARE, P)
    assert B.c[1][1][0] == QQ(4)


def test_transform_rejects_bad_matrices():
    with pytest.raises(SingularTransform):
        transform(ODD_SQUARE, ((QQ(1), QQ(0)), (QQ(0), QQ(0))))
    with pytest.raises(NotGraded):
        transform(ODD_SQUARE, ((QQ(1), QQ(1)), (QQ(0), QQ(1))))


def test_even_part_and_odd_square():
    assert ODD_SQUARE.even_part().n == 1
    assert not ODD_SQUARE.odd_square_zero()
    assert SuperAlgebra.zero(1, 2, Field.gf(3)).odd_square_zero()
