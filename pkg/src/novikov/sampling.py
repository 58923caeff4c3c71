"""Seeded random inputs for property checks: graded basis changes and
algebras assembled from catalog modules."""
from __future__ import annotations

import random

from . import linalg
from .constructions import OddPairing, extend
from .modules import CATALOG, CatalogTag, catalog_instantiate
from .scalars import QQ, Field


def random_graded_matrix(rng: random.Random, d0: int, d1: int, field: Field = QQ, bound=3):
    """Invertible block-diagonal (even block, odd block) matrix with small entries."""

    def block(k):
        if k == 0:
            return ()
        while True:
            if field.is_rational:
                m = tuple(tuple(field(rng.randint(-bound, bound)) for _ in range(k)) for _ in range(k))
            else:
                m = tuple(tuple(field(rng.randrange(field.p)) for _ in range(k)) for _ in range(k))
            if linalg.det(m):
                return m

    even, odd = block(d0), block(d1)
    n = d0 + d1
    zero = field.zero()
    P = [[zero] * n for _ in range(n)]
    for i in range(d0):
        for j in range(d0):
            P[i][j] = even[i][j]
    for i in range(d1):
        for j in range(d1):
            P[d0 + i][d0 + j] = odd[i][j]
    return tuple(tuple(row) for row in P)


def random_tag(rng: random.Random, field: Field = QQ, values=(-2, -1, 0, 1, 2, 3), names=None):
    """A catalog tag with random parameters satisfying its constraints."""
    names = list(CATALOG) if names is None else list(names)
    while True:
        name = rng.choice(names)
        params = {k: rng.choice(values) for k in CATALOG[name]["params"]}
        tag = CatalogTag(name, params)
        try:
            catalog_instantiate(tag, field)
        except ValueError:
            continue
        return tag


def random_catalog_extension(rng: random.Random, field: Field = QQ, names=None, pairing=None):
    """``extend(base, module, pairing)`` for a random catalog row (zero pairing by default)."""
    tag = random_tag(rng, field, names=names)
    alg1, M = catalog_instantiate(tag, field)
    pairing = OddPairing.zero(2, 1) if pairing is None else pairing
    return tag, extend(alg1.algebra(field), M, pairing)
