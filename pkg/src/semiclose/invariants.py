"""Structural invariants of finite semigroups.

Idempotents, monogenic data, the natural order on idempotents, maximal
subgroups and the Clifford part, (ideal) centers, viable idempotents, the
semilattice reflection, root sets and exponents.  Element sets are returned
as ``frozenset`` of indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from .kernel import (
    FiniteSemigroup,
    SemigroupError,
    SemigroupMap,
    generated_congruence,
    is_coideal,
    quotient,
)

INFINITY = float("inf")


class NotIdempotent(SemigroupError):
    pass


@dataclass(frozen=True)
class MonogenicData:
    element: int
    index: int
    period: int
    pi: int

    @property
    def idempotent_power(self) -> int:
        """Least ``n`` with ``x**n`` idempotent."""
        # x^n is idempotent iff n >= index and period divides n
        n = self.period * -(-self.index // self.period)
        return n


@dataclass(frozen=True)
class IdempotentPoset:
    elements: tuple[int, ...]
    leq: frozenset[tuple[int, int]]

    def le(self, x: int, y: int) -> bool:
        return (x, y) in self.leq

    def hasse_pairs(self) -> list[tuple[int, int]]:
        """Covering pairs ``(x, y)`` with ``x < y`` and nothing strictly between."""
        strict = [(x, y) for x, y in self.leq if x != y]
        return sorted(
            (x, y) for x, y in strict
            if not any((x, z) in self.leq and (z, y) in self.leq
                       for z in self.elements if z not in (x, y))
        )

    def is_chain(self) -> bool:
        return all(self.le(x, y) or self.le(y, x) for x in self.elements for y in self.elements)

    def is_antichain(self) -> bool:
        return all(x == y or not self.le(x, y) for x in self.elements for y in self.elements)

    def chain_finite(self) -> bool:
        # a finite poset has no infinite subsets, so the condition holds vacuously
        return True

    def well_founded(self) -> bool:
        # every nonempty finite subset has a minimal element
        return True

    def minimal_elements(self) -> list[int]:
        return [a for a in self.elements
                if all(x == a or not self.le(x, a) for x in self.elements)]


@dataclass(frozen=True)
class ReflectionResult:
    reflection: FiniteSemigroup
    projection: SemigroupMap


def idempotents(S: FiniteSemigroup) -> frozenset[int]:
    t = S.table
    return frozenset(x for x in S.elements if t[x][x] == x)


def monogenic_data(S: FiniteSemigroup, x: int) -> MonogenicData:
    t = S.table
    seen: dict[int, int] = {}
    y, k = x, 1
    while y not in seen:
        seen[y] = k
        y = t[y][x]
        k += 1
    index = seen[y]
    period = k - index
    # the powers x^index..x^(index+period-1) form a cyclic group; find its identity
    z = y
    for _ in range(period):
        if t[z][z] == z:
            break
        z = t[z][x]
    return MonogenicData(x, index, period, z)


def pi(S: FiniteSemigroup, x: int) -> int:
    return monogenic_data(S, x).pi


def natural_order(S: FiniteSemigroup) -> IdempotentPoset:
    t = S.table
    E = sorted(idempotents(S))
    leq = frozenset((x, y) for x in E for y in E if t[x][y] == x and t[y][x] == x)
    return IdempotentPoset(tuple(E), leq)


def _require_idempotent(S: FiniteSemigroup, e: int) -> None:
    if not 0 <= e < S.order or S.table[e][e] != e:
        raise NotIdempotent(f"{e} is not an idempotent")


def maximal_subgroup(S: FiniteSemigroup, e: int) -> frozenset[int]:
    """``H_e``: the units of the local monoid ``eSe``."""
    _require_idempotent(S, e)
    t = S.table
    local = {x for x in S.elements if t[e][x] == x and t[x][e] == x}
    return frozenset(
        x for x in local if any(t[x][y] == e and t[y][x] == e for y in local)
    )


def maximal_subgroups(S: FiniteSemigroup) -> dict[int, frozenset[int]]:
    return {e: maximal_subgroup(S, e) for e in sorted(idempotents(S))}


def clifford_part(S: FiniteSemigroup) -> frozenset[int]:
    out: set[int] = set()
    for H in maximal_subgroups(S).values():
        out |= H
    return frozenset(out)


def clifford_part_via_pi(S: FiniteSemigroup) -> frozenset[int]:
    """Clifford part computed as ``{x : x in H_pi(x)}``."""
    cache: dict[int, frozenset[int]] = {}
    out = set()
    for x in S.elements:
        e = pi(S, x)
        if e not in cache:
            cache[e] = maximal_subgroup(S, e)
        if x in cache[e]:
            out.add(x)
    return frozenset(out)


def group_inverse(S: FiniteSemigroup, e: int, x: int) -> int:
    """Inverse of ``x`` inside the group ``H_e``."""
    H = maximal_subgroup(S, e)
    if x not in H:
        raise SemigroupError(f"{x} is not in H_{e}")
    t = S.table
    return next(y for y in H if t[x][y] == e)


def center(S: FiniteSemigroup) -> frozenset[int]:
    t = S.table
    return frozenset(z for z in S.elements if all(t[z][x] == t[x][z] for x in S.elements))


def ideal_center(S: FiniteSemigroup) -> frozenset[int]:
    Z = center(S)
    t = S.table
    return frozenset(z for z in Z if all(t[z][x] in Z for x in S.elements))


def local_coideal(S: FiniteSemigroup, e: int) -> frozenset[int]:
    """``H_e/e = {x : xe = ex in H_e}``."""
    H = maximal_subgroup(S, e)
    t = S.table
    return frozenset(x for x in S.elements if t[x][e] == t[e][x] and t[x][e] in H)


def is_viable(S: FiniteSemigroup, e: int) -> bool:
    return is_coideal(S, local_coideal(S, e))


def viable_idempotents(S: FiniteSemigroup) -> frozenset[int]:
    return frozenset(e for e in idempotents(S) if is_viable(S, e))


def viable_idempotents_by_products(S: FiniteSemigroup) -> frozenset[int]:
    """Idempotents ``e`` such that ``xy = e`` forces ``xe = ex`` and ``ye = ey``."""
    t = S.table
    E = idempotents(S)
    good = set(E)
    for x in S.elements:
        for y in S.elements:
            e = t[x][y]
            if e in good and (t[x][e] != t[e][x] or t[y][e] != t[e][y]):
                good.discard(e)
    return frozenset(good)


def is_viable_semigroup(S: FiniteSemigroup) -> bool:
    return viable_idempotents(S) == idempotents(S)


def is_z_viable(S: FiniteSemigroup) -> bool:
    return (center(S) & idempotents(S)) <= viable_idempotents(S)


def is_e_commutative(S: FiniteSemigroup) -> bool:
    t = S.table
    E = idempotents(S)
    return all(t[x][y] == t[y][x] for x in E for y in E)


def is_semilattice(S: FiniteSemigroup) -> bool:
    return S.is_commutative() and len(idempotents(S)) == S.order


def smallest_semilattice_congruence(S: FiniteSemigroup):
    t = S.table
    pairs = [(t[x][x], x) for x in S.elements]
    pairs += [(t[x][y], t[y][x]) for x in S.elements for y in S.elements if x < y]
    return generated_congruence(S, pairs)


def semilattice_reflection(S: FiniteSemigroup) -> ReflectionResult:
    Q, q = quotient(S, smallest_semilattice_congruence(S))
    return ReflectionResult(Q, q)


def roots(S: FiniteSemigroup, A, n: int) -> frozenset[int]:
    """``{x : x**n in A}``."""
    if n < 1:
        raise ValueError("n must be positive")
    A = set(A)
    return frozenset(x for x in S.elements if S.power(x, n) in A)


def roots_all(S: FiniteSemigroup, A) -> frozenset[int]:
    """Union of the ``n``-th root sets over all ``n``."""
    A = set(A)
    t = S.table
    out = set()
    for x in S.elements:
        md = monogenic_data(S, x)
        y = x
        # beyond index + period - 1 the powers repeat
        for _ in range(md.index + md.period - 1):
            if y in A:
                out.add(x)
                break
            y = t[y][x]
    return frozenset(out)


def exponent_from(index_bound: int, period_lcm: int) -> int:
    """Least multiple of ``period_lcm`` that is at least ``index_bound``."""
    return period_lcm * max(1, -(-index_bound // period_lcm))


def exponent_of(S: FiniteSemigroup, B=None) -> int:
    """Least ``n`` with ``x**n`` idempotent for every ``x`` in ``B``.

    ``x**n`` is idempotent iff ``n`` reaches the index of ``x`` and is a
    multiple of its period, so the answer is the least multiple of the lcm of
    the periods that reaches the largest index.  This can be smaller than the
    lcm of the per-element minimal powers.
    """
    B = S.elements if B is None else B
    data = [monogenic_data(S, x) for x in B]
    return exponent_from(max((d.index for d in data), default=1),
                         lcm(1, *(d.period for d in data)))


def exponent_by_search(S: FiniteSemigroup, B=None) -> int:
    B = list(S.elements if B is None else B)
    E = idempotents(S)
    n = 1
    while not all(S.power(x, n) in E for x in B):
        n += 1
    return n


def structure_report(S: FiniteSemigroup) -> dict:
    """JSON-ready summary of the invariants of ``S``; sets are sorted index lists."""
    E = idempotents(S)
    refl = semilattice_reflection(S)
    return {
        "order": S.order,
        "names": [S.name(x) for x in S.elements],
        "commutative": S.is_commutative(),
        "idempotents": sorted(E),
        "natural_order": [list(p) for p in natural_order(S).hasse_pairs()],
        "maximal_subgroup_orders": {str(e): len(H) for e, H in maximal_subgroups(S).items()},
        "clifford_part": sorted(clifford_part(S)),
        "center": sorted(center(S)),
        "ideal_center": sorted(ideal_center(S)),
        "viable_idempotents": sorted(viable_idempotents(S)),
        "reflection": {
            "order": refl.reflection.order,
            "table": [list(r) for r in refl.reflection.table],
            "projection": list(refl.projection.image),
        },
        "exponent": exponent_of(S),
    }
