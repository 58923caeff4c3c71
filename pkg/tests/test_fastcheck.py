import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from novikov.core import SuperAlgebra
from novikov.fastcheck import from_array, gd_mask, novikov_masks, to_array
from novikov.laws import check_gd, is_novikov_algebra, is_novikov_superalgebra, super_commutator
from novikov.scalars import Field
from novikov.search import free_slots


def random_batch(rng, d0, d1, p, size):
    n = d0 + d1
    batch = np.zeros((size, n, n, n), dtype=np.int64)
    slots = free_slots(d0, d1)
    I, J, K = (np.array(x) for x in zip(*slots))
    # sparse tables hit the Novikov identities far more often than dense ones
    vals = rng.integers(0, p, size=(size, len(slots)))
    keep = rng.random((size, len(slots))) < 0.3
    batch[:, I, J, K] = vals * keep
    return batch


@pytest.mark.parametrize("d0,d1,p", [(1, 1, 3), (1, 2, 3), (2, 1, 3), (1, 2, 5), (2, 2, 3), (3, 0, 2)])
def test_masks_match_reference(d0, d1, p):
    rng = np.random.default_rng(d0 * 100 + d1 * 10 + p)
    batch = random_batch(rng, d0, d1, p, 300)
    sup, plain = novikov_masks(batch, d0, p)
    gd = gd_mask(batch, d0, p)
    for z in range(batch.shape[0]):
        A = from_array(d0, d1, batch[z], p)
        assert sup[z] == is_novikov_superalgebra(A, short_circuit=True).passed
        assert plain[z] == is_novikov_algebra(A, short_circuit=True).passed
        assert gd[z] == check_gd(A, super_commutator(A), short_circuit=True).passed
    assert sup.any()


def test_round_trip_array():
    A = SuperAlgebra.from_products(1, 2, {(1, 2, 0): 1, (2, 1, 0): 2}, Field.gf(3))
    assert from_array(1, 2, to_array(A), 3) == A
    with pytest.raises(ValueError):
        to_array(SuperAlgebra.zero(1, 1))


def test_optional_masks():
    batch = np.zeros((2, 2, 2, 2), dtype=np.int64)
    sup, plain = novikov_masks(batch, 1, 3, plain=False)
    assert plain is None and sup.all()


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_masks_match_reference_property(seed):
    rng = np.random.default_rng(seed)
    batch = random_batch(rng, 1, 2, 3, 8)
    sup, plain = novikov_masks(batch, 1, 3)
    for z in range(8):
        A = from_array(1, 2, batch[z], 3)
        assert sup[z] == is_novikov_superalgebra(A).passed
        assert plain[z] == is_novikov_algebra(A).passed
