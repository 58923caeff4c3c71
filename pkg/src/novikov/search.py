"""Exhaustive and random search over GF(p) structure constants for type-S
Novikov superalgebras.

Candidates assign residues to the *free slots*: the ``(i, j, k)`` triples
the grading allows.  Odd-times-odd slots come first (most significant
digit), so the candidates with ``A1 A1 = 0`` form the contiguous block of
indices ``[0, p^(free - oddodd))`` and pruning skips it in one step.

Pruning (``prune_odd_square``) hunts for type S only:

* a signature with ``d0 = 0``, ``d1 = 0`` or ``d1 = 1`` is skipped outright;
* candidates with ``A1 A1 = 0`` are skipped.

Both rules are sound in any characteristic: the parity signs only differ
from +1 on odd-odd pairs, and every term they touch vanishes (or, for a
single odd basis vector, the graded identity forces ``2x = 0`` where the
plain one reads ``0 = 0``).

A finite-field search is consistency evidence, not a proof over C.
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from itertools import product as _cartesian

import numpy as np

from . import fastcheck
from .errors import BudgetExceeded
from .laws import is_novikov_algebra, is_novikov_superalgebra
from .report import LawReport, Violation
from .scalars import Field, is_prime

DEFAULT_BUDGET = 10**8
CHUNK = 1 << 14

DISCLAIMER = (
    "finite-field consistency evidence over GF({p}); this is not a proof over the complex numbers"
)


def free_slots(d0: int, d1: int):
    """Parity-admissible ``(i, j, k)`` slots, odd-odd slots first, lexicographic within."""
    n = d0 + d1

    def par(x):
        return 0 if x < d0 else 1

    slots = [
        (i, j, k) for i, j, k in _cartesian(range(n), repeat=3) if par(k) == (par(i) + par(j)) % 2
    ]
    odd_odd = [s for s in slots if par(s[0]) and par(s[1])]
    rest = [s for s in slots if not (par(s[0]) and par(s[1]))]
    return odd_odd + rest


def free_slot_count(d0: int, d1: int) -> int:
    return len(free_slots(d0, d1))


@dataclass
class SearchSpec:
    d0: int
    d1: int
    p: int
    mode: str = "exhaustive"  # or "random"
    samples: int = 0
    seed: int = 0
    prune_odd_square: bool = True
    short_circuit: bool = True
    budget: int = DEFAULT_BUDGET
    workers: int = 1
    witness_cap: int = 100
    hit_cap: int = 0

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.mode not in ("exhaustive", "random"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.d0 < 0 or self.d1 < 0 or self.d0 + self.d1 == 0:
            raise ValueError("need d0, d1 >= 0 with d0 + d1 >= 1")


@dataclass
class SearchReport:
    spec: SearchSpec
    candidates: int = 0
    graded: int = 0
    novikov_super: int = 0
    type_N: int = 0
    type_S: int = 0
    witnesses: list = dc_field(default_factory=list)
    witnesses_truncated: bool = False
    hits: list = dc_field(default_factory=list)
    elapsed: float = 0.0
    skipped: str | None = None

    @property
    def field(self):
        return Field.gf(self.spec.p)


def _signature_skip(spec: SearchSpec):
    if not spec.prune_odd_square:
        return None
    if spec.d0 == 0:
        return "d0 = 0: every product vanishes"
    if spec.d1 == 0:
        return "d1 = 0: graded and plain identities coincide"
    if spec.d1 == 1:
        return "d1 = 1: a single odd basis vector cannot separate the identities"
    return None


def _tables(spec, digits, slots):
    n = spec.d0 + spec.d1
    batch = np.zeros((digits.shape[0], n, n, n), dtype=np.int64)
    if slots:
        I, J, K = (np.array(x) for x in zip(*slots))
        batch[:, I, J, K] = digits
    return batch


def _classify(spec, batch, partial):
    super_ok, plain_ok = fastcheck.novikov_masks(batch, spec.d0, spec.p)
    partial["candidates"] += batch.shape[0]
    nov = int(super_ok.sum())
    s_mask = super_ok & ~plain_ok
    partial["novikov_super"] += nov
    partial["type_S"] += int(s_mask.sum())
    if s_mask.any() and len(partial["witnesses"]) < spec.witness_cap:
        partial["witnesses"].extend(batch[s_mask][: spec.witness_cap - len(partial["witnesses"])])
    if spec.hit_cap and nov and len(partial["hits"]) < spec.hit_cap:
        partial["hits"].extend(batch[super_ok][: spec.hit_cap - len(partial["hits"])])


def _empty_partial():
    return {"candidates": 0, "novikov_super": 0, "type_S": 0, "witnesses": [], "hits": []}


def _scan_range(spec: SearchSpec, lo: int, hi: int):
    """Exhaustively classify candidate indices ``[lo, hi)``."""
    slots = free_slots(spec.d0, spec.d1)
    F = len(slots)
    powers = np.array([spec.p ** (F - 1 - s) for s in range(F)], dtype=np.int64)
    partial = _empty_partial()
    for start in range(lo, hi, CHUNK):
        idx = np.arange(start, min(start + CHUNK, hi), dtype=np.int64)
        digits = (idx[:, None] // powers[None, :]) % spec.p
        _classify(spec, _tables(spec, digits, slots), partial)
    return partial


def _scan_random(spec: SearchSpec):
    slots = free_slots(spec.d0, spec.d1)
    F = len(slots)
    odd_odd = sum(1 for i, j, _ in slots if i >= spec.d0 and j >= spec.d0)
    rng = np.random.default_rng(spec.seed)
    partial = _empty_partial()
    remaining = spec.samples
    while remaining > 0:
        size = min(CHUNK, remaining)
        digits = rng.integers(0, spec.p, size=(size, F), dtype=np.int64)
        remaining -= size
        if spec.prune_odd_square and odd_odd:
            digits = digits[digits[:, :odd_odd].any(axis=1)]
        if digits.shape[0]:
            _classify(spec, _tables(spec, digits, slots), partial)
    return partial


def _partitions(lo, hi, block, workers):
    """Split ``[lo, hi)`` on multiples of ``block`` into at most ``workers * 4`` ranges."""
    starts = list(range(lo - lo % block, hi, block)) or [lo]
    groups = max(1, min(len(starts), workers * 4))
    step = -(-len(starts) // groups)
    out = []
    for g in range(0, len(starts), step):
        a = max(lo, starts[g])
        b = min(hi, starts[g + step] if g + step < len(starts) else hi)
        if a < b:
            out.append((a, b))
    return out


def _merge(parts):
    total = _empty_partial()
    for part in parts:
        for key in ("candidates", "novikov_super", "type_S"):
            total[key] += part[key]
        total["witnesses"].extend(part["witnesses"])
        total["hits"].extend(part["hits"])
    return total


def search(spec: SearchSpec) -> SearchReport:
    """Classify every (or a random sample of) graded table over GF(p)."""
    t0 = time.perf_counter()
    report = SearchReport(spec)
    reason = _signature_skip(spec)
    if reason is not None:
        report.skipped = reason
        report.elapsed = time.perf_counter() - t0
        return report
    slots = free_slots(spec.d0, spec.d1)
    F = len(slots)
    if spec.mode == "random":
        partial = _scan_random(spec)
    else:
        total = spec.p**F
        if total > spec.budget:
            raise BudgetExceeded(total, spec.budget)
        odd_odd = sum(1 for i, j, _ in slots if i >= spec.d0 and j >= spec.d0)
        lo = spec.p ** (F - odd_odd) if spec.prune_odd_square and odd_odd else 0
        # partition on the leading slot values so each worker owns whole subtrees
        block = spec.p ** max(F - 1, 0)
        ranges = _partitions(lo, total, block if block < total else max(1, total // spec.p), spec.workers)
        if spec.workers > 1 and len(ranges) > 1:
            with ProcessPoolExecutor(spec.workers) as pool:
                parts = list(pool.map(_scan_range, [spec] * len(ranges), *zip(*ranges)))
        else:
            parts = [_scan_range(spec, a, b) for a, b in ranges]
        partial = _merge(parts)

    field = Field.gf(spec.p)
    report.candidates = partial["candidates"]
    report.graded = partial["candidates"]
    report.novikov_super = partial["novikov_super"]
    report.type_S = partial["type_S"]
    report.type_N = report.novikov_super - report.type_S
    for arr in partial["witnesses"][: spec.witness_cap]:
        A = fastcheck.from_array(spec.d0, spec.d1, arr, spec.p)
        # every reported witness is re-derived on the exact scalar path
        if not is_novikov_superalgebra(A).passed or is_novikov_algebra(A).passed:
            raise RuntimeError(f"fast and reference checkers disagree on {A!r}")
        report.witnesses.append(A)
    report.witnesses_truncated = report.type_S > len(report.witnesses)
    report.hits = [fastcheck.from_array(spec.d0, spec.d1, arr, spec.p) for arr in partial["hits"]]
    assert all(A.field == field for A in report.hits)
    report.elapsed = time.perf_counter() - t0
    return report


def signatures_up_to(n_max: int):
    return [(d0, n - d0) for n in range(1, n_max + 1) for d0 in range(n, -1, -1)]


def verify_thm38_gf(p: int, prune=True, budget=DEFAULT_BUDGET, workers=1, hit_cap=0) -> LawReport:
    """Search every signature with ``d0 + d1 <= 3`` over GF(p) for type-S algebras.

    Signatures with no odd part are type N by definition (the graded and
    plain identities are the same equations) and are not enumerated.
    Per-signature :class:`SearchReport` objects are in ``details["searches"]``.
    """
    report = LawReport(f"type-n-up-to-dim-3-gf{p}")
    report.notes.append(DISCLAIMER.format(p=p))
    if p == 2:
        report.notes.append("in characteristic 2 every sign is +1, so type S cannot occur at all")
    searches = {}
    for d0, d1 in signatures_up_to(3):
        if d1 == 0:
            report.notes.append(f"({d0},{d1}): no odd part, type N by definition")
            continue
        spec = SearchSpec(d0, d1, p, prune_odd_square=prune, budget=budget, workers=workers, hit_cap=hit_cap)
        res = search(spec)
        searches[(d0, d1)] = res
        report.checked += res.candidates
        for W in res.witnesses:
            report.violations.append(Violation(d0, d1, None, W, "type-S"))
        if res.type_S and not res.witnesses:
            report.violations.append(Violation(d0, d1, None, res.type_S, "type-S"))
    report.details["searches"] = searches
    return report
