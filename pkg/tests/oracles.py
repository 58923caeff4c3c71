"""Independent brute-force evaluators used as test oracles.

These work on plain ``{(i, j, k): value}`` dictionaries with ``Fraction``
(or integers mod p) and share no code with the package.
"""
from fractions import Fraction
from functools import lru_cache
from itertools import product


def mul(c, n, x, y, p=None):
    out = [Fraction(0)] * n
    for (i, j, k), coef in c.items():
        if coef and x[i] and y[j]:
            out[k] += x[i] * y[j] * coef
    return [v % p for v in out] if p else out


def unit(n, i):
    return [Fraction(int(t == i)) for t in range(n)]


def _sign(par, a, b, graded):
    return -1 if graded and par[a] and par[b] else 1


def _nonzero(vec, p):
    return any((v % p) if p else v for v in vec)


def left_symmetry_failures(c, par, graded=True, p=None):
    return list(_left_symmetry(c, par, graded, p))


def _left_symmetry(c, par, graded, p):
    n = len(par)
    for u, v, w in product(range(n), repeat=3):
        s = _sign(par, u, v, graded)
        U, V, W = unit(n, u), unit(n, v), unit(n, w)
        lhs = [a - b for a, b in zip(mul(c, n, mul(c, n, U, V), W), mul(c, n, U, mul(c, n, V, W)))]
        rhs = [a - b for a, b in zip(mul(c, n, mul(c, n, V, U), W), mul(c, n, V, mul(c, n, U, W)))]
        if _nonzero([a - s * b for a, b in zip(lhs, rhs)], p):
            yield (u, v, w)


def right_commutativity_failures(c, par, graded=True, p=None):
    """``(wu)v - s (wv)u``; failures labelled ``(u, v, w)``."""
    return sorted(_right_commutativity(c, par, graded, p))


def _right_commutativity(c, par, graded, p):
    n = len(par)
    for w, u, v in product(range(n), repeat=3):
        s = _sign(par, u, v, graded)
        U, V, W = unit(n, u), unit(n, v), unit(n, w)
        lhs, rhs = mul(c, n, mul(c, n, W, U), V), mul(c, n, mul(c, n, W, V), U)
        if _nonzero([a - s * b for a, b in zip(lhs, rhs)], p):
            yield (u, v, w)


def is_novikov(c, par, graded=True, p=None):
    for failures in (_right_commutativity, _left_symmetry):
        if next(failures(c, par, graded, p), None) is not None:
            return False
    return True


def bracket(c, par, graded=True):
    """``[e_i, e_j] = e_i e_j - s e_j e_i`` as a dictionary."""
    n, out = len(par), {}
    for i, j, k in product(range(n), repeat=3):
        val = c.get((i, j, k), 0) - _sign(par, i, j, graded) * c.get((j, i, k), 0)
        if val:
            out[(i, j, k)] = val
    return out


def gd_failures(c, b, par, p=None):
    """``[wu,v] - s[wv,u] + [w,u]v - s[w,v]u - w[u,v]`` on all basis triples."""
    n, bad = len(par), []
    for w, u, v in product(range(n), repeat=3):
        s = _sign(par, u, v, True)
        W, U, V = unit(n, w), unit(n, u), unit(n, v)
        terms = [
            (1, mul(b, n, mul(c, n, W, U), V)),
            (-s, mul(b, n, mul(c, n, W, V), U)),
            (1, mul(c, n, mul(b, n, W, U), V)),
            (-s, mul(c, n, mul(b, n, W, V), U)),
            (-1, mul(c, n, W, mul(b, n, U, V))),
        ]
        total = [sum(k * t[i] for k, t in terms) for i in range(n)]
        if _nonzero(total, p):
            bad.append((w, u, v))
    return bad


def semidirect(eps, L, R):
    """All-even table of ``<e> + M`` with ``ee = eps e``, ``e v = L v``, ``v e = R v``."""
    c = {}
    if eps:
        c[(0, 0, 0)] = eps
    for s in range(2):
        for i in range(2):
            if L[i][s]:
                c[(0, 1 + s, 1 + i)] = L[i][s]
            if R[i][s]:
                c[(1 + s, 0, 1 + i)] = R[i][s]
    return c


@lru_cache(maxsize=None)
def module_pairs(p, eps):
    """Every 2x2 ``(L, R)`` over GF(p) making the semidirect product Novikov."""
    mats = [((a, b), (c, d)) for a, b, c, d in product(range(p), repeat=4)]
    return [(L, R) for L in mats for R in mats if is_novikov(semidirect(eps, L, R), [0, 0, 0], graded=False, p=p)]
