"""The ``verify paper`` suite: the full set of acceptance checks, end to end.

Each check prints one ``PASS``/``FAIL`` line.  Sections can be skipped by
name; ``gf3`` drops every GF(3) computation.
"""
from __future__ import annotations

import random
import sys
import time
from importlib import resources

from . import io
from .core import SuperAlgebra, transform
from .errors import NotNovikovSuper
from .laws import (
    AlgebraType,
    check_gd,
    classify_type,
    commutator,
    is_novikov_superalgebra,
    super_commutator,
)
from .modules import (
    CATALOG,
    check_claim_33,
    check_claim_34,
    check_module_axioms,
    catalog_instantiate,
    rational_grid_tags,
    tags_over,
    verify_catalog_completeness,
)
from .constructions import OddPairing, verify_prop36
from .sampling import random_catalog_extension, random_graded_matrix
from .scalars import QQ, Field
from .search import SearchSpec, search, verify_thm38_gf

SECTIONS = (
    "examples",
    "catalog",
    "claims",
    "completeness",
    "pairings",
    "search",
    "gd",
    "invariants",
    "roundtrip",
)

FIXTURES = (
    "odd_square.alg",
    "antisymmetric_pairing.alg",
    "assoc_module.alg",
    "truncated_derivation.alg",
    "zero_1_2.alg",
)
MODULE_FIXTURES = ("t8_a2.mod", "t5_a3.mod")


def fixture_text(name: str) -> str:
    return resources.files("novikov.fixtures").joinpath(name).read_text()


def fixture(name: str) -> SuperAlgebra:
    return io.parse(fixture_text(name))


def _table(B):
    return {k: v.value for k, v in B.nonzero_products().items()}


# --------------------------------------------------------------------------- checks


def check_examples():
    out = []
    expectations = {
        "odd_square.alg": ({(1, 1, 0): 2}, {}),
        "antisymmetric_pairing.alg": ({}, {(1, 2, 0): 2, (2, 1, 0): -2}),
    }
    for name, (slie, lie) in expectations.items():
        A = fixture(name)
        problems = []
        if not is_novikov_superalgebra(A).passed:
            problems.append("not a Novikov superalgebra")
        else:
            if classify_type(A) is not AlgebraType.N:
                problems.append("type is not N")
        if _table(super_commutator(A)) != slie:
            problems.append(f"SLie table {_table(super_commutator(A))} != {slie}")
        if _table(commutator(A)) != lie:
            problems.append(f"Lie table {_table(commutator(A))} != {lie}")
        out.append((name.replace(".alg", ""), not problems, "; ".join(problems) or "check, type N, SLie and Lie tables exact"))
    return out


def check_catalog(catalog=None):
    out = []
    failures = {}
    counts = {}
    for tag in rational_grid_tags(catalog):
        alg1, M = catalog_instantiate(tag, QQ, catalog)
        counts[tag.name] = counts.get(tag.name, 0) + 1
        report = check_module_axioms(alg1.algebra(QQ), M)
        if not report.passed:
            eqs = sorted({v.k for v in report.violations})
            failures.setdefault(tag.name, []).append(f"{tag} violates eq {eqs}")
    for name in (catalog or CATALOG):
        bad = failures.get(name, [])
        detail = "; ".join(bad) if bad else f"{counts.get(name, 0)} grid instances are modules"
        out.append((f"catalog {name}", not bad, detail))
    return out


def check_claims(primes):
    out = []
    for p in primes:
        for fn in (check_claim_33, check_claim_34):
            r = fn(p)
            out.append((r.law, r.passed, f"{len(r.violations)} counterexamples in {r.checked} pairs"))
    return out


def check_completeness(primes, catalog=None):
    out = []
    for p in primes:
        r = verify_catalog_completeness(p, catalog=catalog)
        detail = f"{len(r.violations)} orphans among {r.checked} module pairs"
        if r.violations:
            shown = [io._describe(v.residual) + f" (ee={'e' if v.i else '0'})" for v in r.violations[:4]]
            detail += ": " + "; ".join(shown)
        out.append((r.law, r.passed, detail))
    return out


def check_pairings(p=5, catalog=None):
    out = []
    field = Field.gf(p)
    results = {}
    for tag in tags_over(field, catalog=catalog):
        results.setdefault(tag.name, []).append(verify_prop36(tag, p, catalog=catalog))
    for name, reports in results.items():
        bad = [r for r in reports if not r.passed]
        counts = sorted({len(r.details["passing"]) for r in reports})
        detail = f"passing-pairing counts {counts} over {len(reports)} parameter values"
        if name == "T1":
            antisym = OddPairing.from_products(2, 1, {(0, 1, 0): 1, (1, 0, 0): p - 1})
            if not all(antisym in r.details["passing"] for r in reports):
                bad = bad or reports
                detail += "; antisymmetric pairing missing"
        if bad:
            detail += "; failing: " + ", ".join(r.law for r in bad[:5])
        out.append((f"odd-pairings {name} gf{p}", not bad, detail))
    return out


def check_type_s_search(primes, state):
    out = []
    for p in primes:
        t0 = time.perf_counter()
        r = verify_thm38_gf(p, prune=False, hit_cap=10**6 if p == 2 else 0)
        if p == 2:
            state["gf2_hits"] = [A for s in r.details["searches"].values() for A in s.hits]
        total_s = sum(s.type_S for s in r.details["searches"].values())
        cands = sum(s.candidates for s in r.details["searches"].values())
        out.append(
            (
                r.law,
                r.passed,
                f"{total_s} type-S among {cands} candidates in {time.perf_counter() - t0:.1f}s; "
                + r.notes[0],
            )
        )
    return out


def check_gd_section(state, samples=500, seed=2024):
    out = []
    hits = state.get("gf2_hits")
    if hits is None:
        r = verify_thm38_gf(2, prune=False, hit_cap=10**6)
        hits = [A for s in r.details["searches"].values() for A in s.hits]
    bad = [A for A in hits if not check_gd(A, super_commutator(A)).passed]
    out.append(("gd gf2 hits", not bad and bool(hits), f"{len(hits)} Novikov superalgebras, {len(bad)} violate GD"))
    rng = random.Random(seed)
    built, bad = 0, 0
    while built < samples:
        _, A = random_catalog_extension(rng)
        A = transform(A, random_graded_matrix(rng, A.d0, A.d1))
        if not is_novikov_superalgebra(A, short_circuit=True).passed:
            continue
        built += 1
        if not check_gd(A, super_commutator(A)).passed:
            bad += 1
    out.append(("gd rational extensions", bad == 0, f"{built} algebras, {bad} violate GD"))
    return out


def invariant_fixtures():
    return [fixture(n) for n in FIXTURES if fixture(n).field == QQ]


def check_invariants(seed=7, changes=200):
    out = []
    rng = random.Random(seed)
    bad = []
    for A in invariant_fixtures():
        base = classify_type(A)
        for _ in range(changes):
            B = transform(A, random_graded_matrix(rng, A.d0, A.d1))
            if classify_type(B) is not base:
                bad.append(A)
                break
    out.append(("invariant type under basis change", not bad, f"{changes} changes per fixture"))

    bad = 0
    algebras = [A for A in invariant_fixtures() if A.odd_square_zero()]
    while len(algebras) < 60:
        _, A = random_catalog_extension(rng)
        if is_novikov_superalgebra(A, short_circuit=True).passed:
            algebras.append(A)
    for A in algebras:
        try:
            ok = super_commutator(A) == commutator(A) and classify_type(A) is AlgebraType.N
        except NotNovikovSuper:
            ok = False
        bad += not ok
    out.append(("odd square zero gives equal brackets and type N", bad == 0, f"{len(algebras)} algebras"))

    pruned = search(SearchSpec(1, 2, 2, prune_odd_square=True))
    full = search(SearchSpec(1, 2, 2, prune_odd_square=False))
    agree = pruned.type_S == full.type_S and pruned.witnesses == full.witnesses
    out.append(
        (
            "pruned vs unpruned (1,2) gf2",
            agree,
            f"type_S {pruned.type_S} vs {full.type_S}; candidates {pruned.candidates} vs {full.candidates}",
        )
    )
    return out


def check_roundtrip():
    bad = []
    for name in FIXTURES:
        A = fixture(name)
        if io.parse(io.emit(A)) != A or io.emit(io.parse(io.emit(A))) != io.emit(A):
            bad.append(name)
    for name in MODULE_FIXTURES:
        M = io.parse_module(fixture_text(name))
        if io.parse_module(io.emit_module(M)) != M:
            bad.append(name)
    total = len(FIXTURES) + len(MODULE_FIXTURES)
    return [("round trip fixtures", not bad, f"{total} fixtures" + (f"; failing {bad}" if bad else ""))]


# --------------------------------------------------------------------------- runner


def run_verify_paper(skip=(), catalog=None, completeness_gf3=False, out=None, machine=False):
    """Run the suite; returns ``(exit_status, [(name, passed, detail), ...])``."""
    out = sys.stdout if out is None else out
    skip = set(skip)
    unknown = skip - set(SECTIONS) - {"gf3"}
    if unknown:
        raise ValueError(f"unknown sections to skip: {sorted(unknown)}")
    primes = [2] if "gf3" in skip else [2, 3]
    state = {}
    plan = {
        "examples": check_examples,
        "catalog": lambda: check_catalog(catalog),
        "claims": lambda: check_claims(primes),
        "completeness": lambda: check_completeness([2, 3] if completeness_gf3 and 3 in primes else [2], catalog),
        "pairings": lambda: check_pairings(5, catalog),
        "search": lambda: check_type_s_search(primes, state),
        "gd": lambda: check_gd_section(state),
        "invariants": check_invariants,
        "roundtrip": check_roundtrip,
    }
    results = []
    for section in SECTIONS:
        if section in skip:
            continue
        for name, passed, detail in plan[section]():
            results.append((name, passed, detail))
            if machine:
                print(f"record=check section={section} name={name.replace(' ', '_')} pass={int(passed)}", file=out)
            else:
                print(f"{'PASS' if passed else 'FAIL'}  [{section}] {name}: {detail}", file=out)
    failed = [r for r in results if not r[1]]
    if machine:
        print(f"record=summary checks={len(results)} failed={len(failed)}", file=out)
    else:
        print(f"{len(results) - len(failed)}/{len(results)} checks passed", file=out)
        if failed:
            print("failed: " + ", ".join(r[0] for r in failed), file=out)
    return (1 if failed else 0), results
