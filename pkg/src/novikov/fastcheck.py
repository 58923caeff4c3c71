"""Vectorised Novikov checks for batches of GF(p) structure-constant tables.

Tables are integer arrays of shape ``(B, n, n, n)`` holding residues in
``range(p)``.  Values stay tiny (``n * (p-1)^2`` before reduction), so int64
never overflows for the primes this package enumerates.
"""
from __future__ import annotations

import numpy as np

from .core import SuperAlgebra
from .scalars import Field


def to_array(A: SuperAlgebra) -> np.ndarray:
    if A.field.is_rational:
        raise ValueError("fast checks need a prime field")
    n = A.n
    return np.array(
        [[[A.c[i][j][k].value for k in range(n)] for j in range(n)] for i in range(n)],
        dtype=np.int64,
    )


def from_array(d0: int, d1: int, table: np.ndarray, p: int) -> SuperAlgebra:
    return SuperAlgebra(d0, d1, table.tolist(), Field.gf(p))


def sign_matrix(d0: int, n: int) -> np.ndarray:
    odd = np.arange(n) >= d0
    return np.where(odd[:, None] & odd[None, :], -1, 1).astype(np.int64)


def _left_products(T: np.ndarray) -> np.ndarray:
    """``out[z,a,b,c,:] = (e_a e_b) e_c``."""
    B, n = T.shape[0], T.shape[1]
    return np.matmul(T.reshape(B, n * n, n), T.reshape(B, n, n * n)).reshape(B, n, n, n, n)


def _right_products(T: np.ndarray) -> np.ndarray:
    """``out[z,a,b,c,:] = e_a (e_b e_c)``."""
    B, n = T.shape[0], T.shape[1]
    # sum_k T[z,b,c,k] T[z,a,k,m], computed as (bc, k) @ (k, am)
    prod = np.matmul(T.reshape(B, n * n, n), T.transpose(0, 2, 1, 3).reshape(B, n, n * n))
    return prod.reshape(B, n, n, n, n).transpose(0, 3, 1, 2, 4)


def _identity_ok(left, right, sign, p):
    """Right commutativity and left symmetry for one sign pattern."""
    B = left.shape[0]
    # right commutativity, indexed [z, w, u, v]: (w u) v - s(u, v) (w v) u
    rc = (left - sign[None, None, :, :, None] * left.transpose(0, 1, 3, 2, 4)) % p
    ok = ~rc.reshape(B, -1).any(axis=1)
    if right is None:
        return ok
    assoc = left - right
    ls = (assoc - sign[None, :, :, None, None] * assoc.transpose(0, 2, 1, 3, 4)) % p
    return ok & ~ls.reshape(B, -1).any(axis=1)


def novikov_masks(T: np.ndarray, d0: int, p: int, graded=True, plain=True):
    """Boolean masks ``(super_ok, plain_ok)`` over the batch.

    ``super_ok`` uses the parity signs, ``plain_ok`` uses +1 everywhere;
    either is ``None`` when not requested.  Right commutativity is cheaper,
    so left symmetry is only evaluated on tables that survive it.
    """
    T = np.asarray(T, dtype=np.int64)
    B, n = T.shape[0], T.shape[1]
    signs = []
    if graded:
        signs.append(sign_matrix(d0, n))
    if plain:
        signs.append(np.ones((n, n), dtype=np.int64))
    left = _left_products(T)
    first = [_identity_ok(left, None, s, p) for s in signs]
    alive = np.zeros(B, dtype=bool)
    for m in first:
        alive |= m
    idx = np.flatnonzero(alive)
    masks = []
    if idx.size:
        sub = T[idx]
        sub_left, sub_right = left[idx], _right_products(sub)
    for m, s in zip(first, signs):
        out = np.zeros(B, dtype=bool)
        if idx.size:
            out[idx] = m[idx] & _identity_ok(sub_left, sub_right, s, p)
        masks.append(out)
    super_ok = masks.pop(0) if graded else None
    plain_ok = masks.pop(0) if plain else None
    return super_ok, plain_ok


def gd_mask(T: np.ndarray, d0: int, p: int) -> np.ndarray:
    """Gel'fand-Dorfman compatibility of each table with its own supercommutator."""
    T = np.asarray(T, dtype=np.int64)
    B, n = T.shape[0], T.shape[1]
    sign = sign_matrix(d0, n)
    Bt = (T - sign[None, :, :, None] * T.transpose(0, 2, 1, 3)) % p
    # pb[z,w,u,v] = [w u, v];  bp[z,w,u,v] = [w, u] v;  wb[z,u,v,w] = w [u, v]
    pb = np.einsum("zwuk,zkvm->zwuvm", T, Bt)
    bp = np.einsum("zwuk,zkvm->zwuvm", Bt, T)
    wb = np.einsum("zuvk,zwkm->zuvwm", Bt, T)
    s = sign[None, None, :, :, None]
    res = pb - s * pb.transpose(0, 1, 3, 2, 4) + bp - s * bp.transpose(0, 1, 3, 2, 4)
    res = res - wb.transpose(0, 3, 1, 2, 4)
    return ~(res % p).reshape(B, -1).any(axis=1)
