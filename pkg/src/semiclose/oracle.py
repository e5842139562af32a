"""Exhaustive enumeration of small semigroups and the lemma-verification suite.

Any violation reported by the suite indicts this implementation, not the
mathematics: the checked statements are theorems.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, permutations, product
from math import lcm
from typing import Callable, Iterator

import numpy as np

from . import invariants as inv
from .kernel import (
    FiniteSemigroup,
    SemigroupError,
    characteristic_is_homomorphism,
    is_homomorphism,
    is_prime_coideal,
    validate_table,
)
from .polynomials import (
    identity_cover,
    polyfinite_from_polybounded,
    search_polybounded,
    verify_polyfinite,
)

BANNER = ("Every check below is a proved statement; a counterexample means a bug "
          "in this implementation, not a refutation.")


class SpecTooLarge(SemigroupError):
    pass


def max_order(commutative_only: bool, up_to_isomorphism: bool) -> int:
    override = os.environ.get("SEMICLOSE_MAX_ORDER")
    if override:
        return int(override)
    return 5 if commutative_only and up_to_isomorphism else 4


@dataclass(frozen=True)
class EnumerationSpec:
    order: int
    commutative_only: bool = False
    up_to_isomorphism: bool = False

    def __post_init__(self):
        if self.order < 1:
            raise SpecTooLarge("order must be at least 1")
        limit = max_order(self.commutative_only, self.up_to_isomorphism)
        if self.order > limit:
            raise SpecTooLarge(
                f"order {self.order} exceeds the guardrail {limit} "
                f"(commutative_only={self.commutative_only}, "
                f"up_to_isomorphism={self.up_to_isomorphism}); "
                "set SEMICLOSE_MAX_ORDER to override")


# -- enumeration ----------------------------------------------------------------

def _search(n: int, commutative: bool, prefix: tuple[int, ...] = ()) -> Iterator[list[list[int]]]:
    """Backtracking over Cayley tables with incremental associativity checks.

    After a cell is filled, every triple that uses it in one of its four
    lookups and is now fully defined gets checked; so each triple is checked
    exactly when its last lookup becomes known.  ``prefix`` pins the first
    cells (row 0 comes first in both modes).
    """
    t = [[-1] * n for _ in range(n)]
    cells = [(i, j) for i in range(n) for j in range(n) if not commutative or i <= j]
    rng = range(n)

    def ok_cell(i, j):
        u = t[i][j]
        # (i, j, c): (ij)c == i(jc)
        for c in rng:
            l = t[u][c]
            r = t[j][c]
            if l >= 0 and r >= 0:
                r = t[i][r]
                if r >= 0 and l != r:
                    return False
        # (a, i, j): (ai)j == a(ij)
        for a in rng:
            r = t[a][u]
            l = t[a][i]
            if r >= 0 and l >= 0:
                l = t[l][j]
                if l >= 0 and l != r:
                    return False
        # (a, b, j) with ab == i: (ab)j = t[i][j] == a(bj)
        for a in rng:
            row = t[a]
            for b in rng:
                if row[b] == i:
                    bj = t[b][j]
                    if bj >= 0:
                        r = row[bj]
                        if r >= 0 and r != u:
                            return False
        # (i, b, c) with bc == j: i(bc) = t[i][j] == (ib)c
        ti = t[i]
        for b in rng:
            ib = ti[b]
            if ib < 0:
                continue
            row = t[b]
            for c in rng:
                if row[c] == j:
                    l = t[ib][c]
                    if l >= 0 and l != u:
                        return False
        return True

    def rec(k):
        if k == len(cells):
            yield [row[:] for row in t]
            return
        i, j = cells[k]
        for v in (prefix[k],) if k < len(prefix) else rng:
            t[i][j] = v
            if mirror := commutative and i != j:
                t[j][i] = v
            if ok_cell(i, j) and (not mirror or ok_cell(j, i)):
                yield from rec(k + 1)
        t[i][j] = -1
        if commutative:
            t[j][i] = -1

    yield from rec(0)


def _permutation_arrays(n: int):
    perms = np.array(list(permutations(range(n))), dtype=np.int64)
    inverse = np.argsort(perms, axis=1)
    weights = n ** np.arange(n * n - 1, -1, -1, dtype=np.int64)
    return perms, inverse, weights


def canonical_form(table, arrays=None) -> tuple[int, ...]:
    """Lexicographically least flattened table over all relabelings."""
    a = np.asarray(table, dtype=np.int64)
    n = len(a)
    perms, inverse, weights = arrays or _permutation_arrays(n)
    k = len(perms)
    # relabeled[p][x][y] = perm[a[inv[x]][inv[y]]]
    moved = a[inverse[:, :, None], inverse[:, None, :]]
    relabeled = perms[np.arange(k)[:, None, None], moved].reshape(k, n * n)
    codes = relabeled @ weights
    return tuple(int(v) for v in relabeled[int(np.argmin(codes))])


def _tables_with_first_row(args) -> list[tuple[int, ...]]:
    n, commutative, row, canonical = args
    tables = _search(n, commutative, row)
    if canonical:
        arrays = _permutation_arrays(n)
        return list({canonical_form(t, arrays) for t in tables})
    return [tuple(v for r in t for v in r) for t in tables]


def _flat_tables(spec: EnumerationSpec, canonical: bool, workers: int) -> Iterator[tuple[int, ...]]:
    n = spec.order
    jobs = [(n, spec.commutative_only, row, canonical) for row in product(range(n), repeat=n)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            for chunk in pool.map(_tables_with_first_row, jobs):
                yield from chunk
    else:
        for job in jobs:
            yield from _tables_with_first_row(job)


def _unflatten(flat, n) -> FiniteSemigroup:
    return FiniteSemigroup(tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n)))


def enumerate_semigroups(spec: EnumerationSpec, workers: int = 1) -> Iterator[FiniteSemigroup]:
    """Semigroups of ``spec.order`` in a deterministic order.

    Labeled enumeration yields tables in lexicographic order; up to
    isomorphism, the canonical (least) representative of each class is
    yielded, sorted.  The search is split by first row, so ``workers > 1``
    gives the same stream.
    """
    n = spec.order
    if not spec.up_to_isomorphism:
        for flat in _flat_tables(spec, False, workers):
            yield _unflatten(flat, n)
        return
    seen = set(_flat_tables(spec, True, workers))
    for flat in sorted(seen):
        yield _unflatten(flat, n)


# the spec name reads better at call sites as ``oracle.enumerate``
enumerate = enumerate_semigroups  # noqa: A001


def naive_labeled_count(n: int, commutative_only: bool = False) -> int:
    """Count associative tables by filtering every one of the ``n**(n*n)`` tables."""
    count = 0
    for flat in product(range(n), repeat=n * n):
        t = [flat[i * n:(i + 1) * n] for i in range(n)]
        if commutative_only and any(t[i][j] != t[j][i] for i in range(n) for j in range(i)):
            continue
        if all(t[t[i][j]][k] == t[i][t[j][k]] for i in range(n) for j in range(n) for k in range(n)):
            count += 1
    return count


def semilattices(max_n: int = 3) -> list[FiniteSemigroup]:
    """Semilattices of order ``<= max_n`` up to isomorphism."""
    out = []
    for n in range(1, max_n + 1):
        spec = EnumerationSpec(n, commutative_only=True, up_to_isomorphism=True)
        out += [S for S in enumerate_semigroups(spec) if inv.is_semilattice(S)]
    return out


# -- lemma suite ------------------------------------------------------------------

CheckResult = tuple[bool, object]  # (passed, witness on failure)


def check_ideal_center_idempotents_viable(S: FiniteSemigroup) -> CheckResult:
    E = inv.idempotents(S)
    Z = inv.center(S)
    IZ = inv.ideal_center(S)
    VE = inv.viable_idempotents(S)
    e_iz = frozenset(x for x in IZ if S.table[x][x] == x)
    e_z_iz = (E & Z) & IZ
    if e_iz != e_z_iz:
        return False, {"E(IZ)": sorted(e_iz), "E(Z)&IZ": sorted(e_z_iz)}
    if not e_iz <= VE:
        return False, {"E(IZ)": sorted(e_iz), "VE": sorted(VE)}
    return True, None


def check_reflection_injective_on_viable(S: FiniteSemigroup) -> CheckResult:
    q = inv.semilattice_reflection(S).projection
    VE = sorted(inv.viable_idempotents(S))
    images = [q(e) for e in VE]
    if len(set(images)) != len(images):
        return False, {"VE": VE, "images": images}
    return True, None


def check_prime_coideals(S: FiniteSemigroup) -> CheckResult:
    elems = list(S.elements)
    for r in range(len(elems) + 1):
        for C in combinations(elems, r):
            if is_prime_coideal(S, C) != characteristic_is_homomorphism(S, C):
                return False, {"subset": list(C)}
    return True, None


def check_viability_definitions(S: FiniteSemigroup) -> CheckResult:
    a, b = inv.viable_idempotents(S), inv.viable_idempotents_by_products(S)
    if a != b:
        return False, {"coideal": sorted(a), "products": sorted(b)}
    return True, None


def check_commutative_viable(S: FiniteSemigroup) -> CheckResult:
    E = inv.idempotents(S)
    Z = inv.center(S)
    if E <= Z and inv.viable_idempotents(S) != E:
        return False, {"E": sorted(E), "VE": sorted(inv.viable_idempotents(S))}
    return True, None


_TARGETS: list[FiniteSemigroup] | None = None


def _semilattice_targets() -> list[FiniteSemigroup]:
    global _TARGETS
    if _TARGETS is None:
        _TARGETS = semilattices(3)
    return _TARGETS


def check_reflection_universal(S: FiniteSemigroup) -> CheckResult:
    refl = inv.semilattice_reflection(S)
    q = refl.projection
    if not inv.is_semilattice(refl.reflection):
        return False, {"reason": "reflection is not a semilattice"}
    if not (q.is_homomorphism() and q.is_surjective()):
        return False, {"reason": "projection is not a surjective homomorphism"}
    for T in _semilattice_targets():
        for h in product(T.elements, repeat=S.order):
            if not is_homomorphism(S, T, h):
                continue
            for x in S.elements:
                for y in S.elements:
                    if q(x) == q(y) and h[x] != h[y]:
                        return False, {"target": [list(r) for r in T.table], "map": list(h)}
    return True, None


def check_polyfinite_from_polybounded(S: FiniteSemigroup) -> CheckResult:
    covers = [identity_cover(S)]
    found = search_polybounded(S, S.order)
    if found is not None:
        covers.append(found)
    for cover in covers:
        try:
            w = polyfinite_from_polybounded(S, cover)
        except SemigroupError as exc:
            return False, {"cover": cover.to_dict(), "error": str(exc)}
        if not verify_polyfinite(S, w):
            return False, {"cover": cover.to_dict(), "witness": w.to_dict()}
    return True, None


def check_clifford_part(S: FiniteSemigroup) -> CheckResult:
    a, b = inv.clifford_part(S), inv.clifford_part_via_pi(S)
    return (a == b), (None if a == b else {"union": sorted(a), "via_pi": sorted(b)})


def check_exponent(S: FiniteSemigroup) -> CheckResult:
    a, b = inv.exponent_of(S), inv.exponent_by_search(S)
    return a == b, (None if a == b else {"exponent_of": a, "search": b})


def check_centrobounded_divides(S: FiniteSemigroup) -> CheckResult:
    from .classifier import centrobounded_witness

    E = sorted(inv.idempotents(S))
    for r in range(len(E) + 1):
        for A in combinations(E, r):
            n = centrobounded_witness(S, A).n
            m = lcm(1, *(len(inv.maximal_subgroup(S, e)) for e in A))
            if m % n:
                return False, {"A": list(A), "n": n, "lcm": m}
    return True, None


CHECKS: dict[str, Callable[[FiniteSemigroup], CheckResult]] = {
    "ideal_center_idempotents_viable": check_ideal_center_idempotents_viable,
    "reflection_injective_on_viable": check_reflection_injective_on_viable,
    "prime_coideal_iff_characteristic_hom": check_prime_coideals,
    "viability_definitions_agree": check_viability_definitions,
    "central_idempotents_viable": check_commutative_viable,
    "reflection_universal_property": check_reflection_universal,
    "polyfinite_from_polybounded": check_polyfinite_from_polybounded,
    "clifford_part_two_ways": check_clifford_part,
    "exponent_two_ways": check_exponent,
    "centrobounded_divides_lcm": check_centrobounded_divides,
}


@dataclass
class SuiteReport:
    specs: list[EnumerationSpec]
    semigroups: int = 0
    passed: dict[str, int] = field(default_factory=dict)
    failed: dict[str, int] = field(default_factory=dict)
    counterexamples: list[dict] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_dict(self, include_time: bool = True) -> dict:
        d = {
            "banner": BANNER,
            "specs": [vars(s) for s in self.specs],
            "semigroups": self.semigroups,
            "checks": {k: {"passed": self.passed.get(k, 0), "failed": self.failed.get(k, 0)}
                       for k in CHECKS},
            "counterexamples": self.counterexamples,
        }
        if include_time:
            d["wall_time"] = round(self.wall_time, 3)
        return d

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


def check_semigroup(S: FiniteSemigroup, checks=None) -> list[tuple[str, bool, object]]:
    names = checks or list(CHECKS)
    return [(name, *CHECKS[name](S)) for name in names]


def _check_table(table, checks):
    return check_semigroup(FiniteSemigroup(table), checks)


def run_lemma_suite(spec, checks=None, workers: int = 1) -> SuiteReport:
    """Run every check on every semigroup the spec(s) enumerate."""
    specs = [spec] if isinstance(spec, EnumerationSpec) else list(spec)
    started = time.perf_counter()
    report = SuiteReport(specs)
    semigroups = [S for s in specs for S in enumerate_semigroups(s, workers)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_check_table, [S.table for S in semigroups],
                                    [checks] * len(semigroups), chunksize=16))
    else:
        results = [check_semigroup(S, checks) for S in semigroups]
    for S, res in zip(semigroups, results):
        report.semigroups += 1
        for name, passed, witness in res:
            if passed:
                report.passed[name] = report.passed.get(name, 0) + 1
            else:
                report.failed[name] = report.failed.get(name, 0) + 1
                validate_table(S.order, S.table)
                report.counterexamples.append(
                    {"check": name, "table": [list(r) for r in S.table], "witness": witness})
    report.wall_time = time.perf_counter() - started
    return report
