"""Finite semigroups given by Cayley tables.

Elements are the dense indices ``0..order-1``; names are carried along as
labels only.  Everything here is immutable and every function is pure.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np


class SemigroupError(ValueError):
    """Base class for invalid semigroup input."""


class OutOfRangeEntry(SemigroupError):
    def __init__(self, i: int, j: int, value):
        self.i, self.j, self.value = i, j, value
        super().__init__(f"table[{i}][{j}] = {value!r} is not an element index")


class NonAssociative(SemigroupError):
    def __init__(self, i: int, j: int, k: int):
        self.triple = (i, j, k)
        super().__init__(f"associativity fails at (x, y, z) = ({i}, {j}, {k})")


class NotAnIdeal(SemigroupError):
    pass


class IncompatiblePartition(SemigroupError):
    pass


@dataclass(frozen=True, eq=False)
class FiniteSemigroup:
    """A finite semigroup stored as its multiplication table.

    Build instances through :func:`validate_table`; the constructor itself
    does not check associativity.
    """

    table: tuple[tuple[int, ...], ...]
    names: tuple[str, ...] | None = None

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def elements(self) -> range:
        return range(len(self.table))

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def power(self, x: int, n: int) -> int:
        if n < 1:
            raise ValueError("powers start at 1")
        y = x
        for _ in range(n - 1):
            y = self.table[y][x]
        return y

    def array(self) -> np.ndarray:
        return np.asarray(self.table, dtype=np.intp)

    def name(self, x: int) -> str:
        return self.names[x] if self.names else str(x)

    def is_commutative(self) -> bool:
        t = self.table
        return all(t[i][j] == t[j][i] for i in self.elements for j in range(i))

    def __eq__(self, other):
        if not isinstance(other, FiniteSemigroup):
            return NotImplemented
        return self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        return f"FiniteSemigroup(order={self.order}, table={[list(r) for r in self.table]})"


@dataclass(frozen=True)
class SemigroupMap:
    source: FiniteSemigroup
    target: FiniteSemigroup
    image: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.image[x]

    def is_homomorphism(self) -> bool:
        return is_homomorphism(self.source, self.target, self.image)

    def is_injective(self) -> bool:
        return len(set(self.image)) == len(self.image)

    def is_surjective(self) -> bool:
        return set(self.image) == set(self.target.elements)


@dataclass(frozen=True)
class Congruence:
    parent: FiniteSemigroup
    class_of: tuple[int, ...]

    @property
    def num_classes(self) -> int:
        return max(self.class_of, default=-1) + 1

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.num_classes)]
        for x, c in enumerate(self.class_of):
            out[c].append(x)
        return out

    def is_compatible(self) -> bool:
        t, c = self.parent.table, self.class_of
        reps = [cls[0] for cls in self.classes()]
        # x ~ x' implies xa ~ x'a and ax ~ ax'; comparing to one representative suffices
        for x in self.parent.elements:
            r = reps[c[x]]
            for a in self.parent.elements:
                if c[t[x][a]] != c[t[r][a]] or c[t[a][x]] != c[t[a][r]]:
                    return False
        return True


def validate_table(order: int, table: Sequence[Sequence[int]], names=None) -> FiniteSemigroup:
    """Check ranges and associativity and return the semigroup.

    Raises :class:`OutOfRangeEntry` or :class:`NonAssociative` (carrying the
    first failing triple in lexicographic order).
    """
    if order < 1:
        raise SemigroupError("order must be positive")
    if len(table) != order or any(len(row) != order for row in table):
        raise SemigroupError(f"table must be {order}x{order}")
    for i, row in enumerate(table):
        for j, v in enumerate(row):
            if isinstance(v, bool) or not isinstance(v, (int, np.integer)) or not 0 <= v < order:
                raise OutOfRangeEntry(i, j, v)
    a = np.asarray(table, dtype=np.intp)
    bad = np.argwhere(a[a] != a[:, a])
    if len(bad):
        i, j, k = (int(v) for v in bad[0])
        raise NonAssociative(i, j, k)
    if names is not None:
        names = tuple(str(n) for n in names)
        if len(names) != order:
            raise SemigroupError("names must have one label per element")
    return FiniteSemigroup(tuple(tuple(int(v) for v in row) for row in table), names)


def from_table(table, names=None) -> FiniteSemigroup:
    return validate_table(len(table), table, names)


def is_associative(table) -> bool:
    n = len(table)
    return all(
        table[table[i][j]][k] == table[i][table[j][k]]
        for i, j, k in product(range(n), repeat=3)
    )


def is_homomorphism(S: FiniteSemigroup, T: FiniteSemigroup, image: Sequence[int]) -> bool:
    s, t = S.table, T.table
    return all(image[s[x][y]] == t[image[x]][image[y]] for x in S.elements for y in S.elements)


def is_subsemigroup(S: FiniteSemigroup, A: Iterable[int]) -> bool:
    A = set(A)
    return all(S.table[x][y] in A for x in A for y in A)


def is_ideal(S: FiniteSemigroup, A: Iterable[int]) -> bool:
    A = set(A)
    t = S.table
    return all(t[a][x] in A and t[x][a] in A for a in A for x in S.elements)


def is_coideal(S: FiniteSemigroup, A: Iterable[int]) -> bool:
    return is_ideal(S, set(S.elements) - set(A))


def is_prime_coideal(S: FiniteSemigroup, C: Iterable[int]) -> bool:
    C = set(C)
    return is_subsemigroup(S, C) and is_coideal(S, C)


def characteristic_is_homomorphism(S: FiniteSemigroup, C: Iterable[int]) -> bool:
    """Whether the indicator of ``C`` is a homomorphism onto ({0,1}, min)."""
    C = set(C)
    chi = [1 if x in C else 0 for x in S.elements]
    t = S.table
    return all(chi[t[x][y]] == min(chi[x], chi[y]) for x in S.elements for y in S.elements)


def identity_map(S: FiniteSemigroup) -> SemigroupMap:
    return SemigroupMap(S, S, tuple(S.elements))


def zero_extension(S: FiniteSemigroup) -> FiniteSemigroup:
    """Adjoin a new absorbing element with index ``S.order``."""
    z = S.order
    rows = [list(r) + [z] for r in S.table]
    rows.append([z] * (z + 1))
    names = S.names + ("0",) if S.names else None
    return FiniteSemigroup(tuple(map(tuple, rows)), names)


def one_extension(S: FiniteSemigroup) -> FiniteSemigroup:
    """Adjoin a new two-sided unit with index ``S.order``."""
    u = S.order
    rows = [list(r) + [i] for i, r in enumerate(S.table)]
    rows.append(list(range(u + 1)))
    names = S.names + ("1",) if S.names else None
    return FiniteSemigroup(tuple(map(tuple, rows)), names)


def direct_product(S: FiniteSemigroup, T: FiniteSemigroup) -> FiniteSemigroup:
    """Componentwise product; the pair (s, t) has index ``s * T.order + t``."""
    m = T.order
    s, t = S.table, T.table
    rows = []
    for a in range(S.order * m):
        a1, a2 = divmod(a, m)
        rows.append(tuple(s[a1][b // m] * m + t[a2][b % m] for b in range(S.order * m)))
    names = None
    if S.names or T.names:
        names = tuple(f"({S.name(a // m)},{T.name(a % m)})" for a in range(S.order * m))
    return FiniteSemigroup(tuple(rows), names)


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if rx < ry:
            rx, ry = ry, rx
        self.parent[rx] = ry
        return True


def _canonical_classes(labels: Sequence[int]) -> tuple[int, ...]:
    seen: dict[int, int] = {}
    return tuple(seen.setdefault(l, len(seen)) for l in labels)


def congruence_from_labels(S: FiniteSemigroup, labels: Sequence[int]) -> Congruence:
    """Wrap an arbitrary labelling as a congruence, renumbering canonically."""
    if len(labels) != S.order:
        raise IncompatiblePartition("one label per element is required")
    return Congruence(S, _canonical_classes(labels))


def generated_congruence(S: FiniteSemigroup, pairs: Iterable[tuple[int, int]]) -> Congruence:
    """Smallest congruence on ``S`` identifying every pair in ``pairs``.

    Union-find with a work queue of freshly merged pairs; each merge pushes
    its left and right translates.
    """
    uf = _UnionFind(S.order)
    t = S.table
    queue = []
    for x, y in pairs:
        if uf.union(x, y):
            queue.append((x, y))
    while queue:
        x, y = queue.pop()
        for a in S.elements:
            for u, v in ((t[a][x], t[a][y]), (t[x][a], t[y][a])):
                if uf.union(u, v):
                    queue.append((u, v))
    return Congruence(S, _canonical_classes([uf.find(x) for x in S.elements]))


def identity_congruence(S: FiniteSemigroup) -> Congruence:
    return Congruence(S, tuple(S.elements))


def quotient(S: FiniteSemigroup, congruence: Congruence) -> tuple[FiniteSemigroup, SemigroupMap]:
    if congruence.parent != S:
        raise IncompatiblePartition("congruence belongs to a different semigroup")
    c = congruence.class_of
    if sorted(set(c)) != list(range(congruence.num_classes)):
        raise IncompatiblePartition("class ids must cover 0..k-1")
    if not congruence.is_compatible():
        raise IncompatiblePartition("partition is not compatible with multiplication")
    reps = [cls[0] for cls in congruence.classes()]
    rows = tuple(tuple(c[S.table[r][s]] for s in reps) for r in reps)
    Q = FiniteSemigroup(rows)
    return Q, SemigroupMap(S, Q, c)


def rees_quotient(S: FiniteSemigroup, ideal: Iterable[int]) -> tuple[FiniteSemigroup, SemigroupMap]:
    """Collapse ``ideal`` to one absorbing element.

    The empty ideal gives back ``S`` with the identity map.
    """
    I = set(ideal)
    if not I:
        return S, identity_map(S)
    if not I <= set(S.elements) or not is_ideal(S, I):
        raise NotAnIdeal(f"{sorted(I)} is not an ideal")
    first = min(I)
    labels = [first if x in I else x for x in S.elements]
    return quotient(S, congruence_from_labels(S, labels))


def relabel(S: FiniteSemigroup, perm: Sequence[int]) -> FiniteSemigroup:
    """Isomorphic copy where element ``x`` becomes ``perm[x]``."""
    inv = [0] * S.order
    for x, p in enumerate(perm):
        inv[p] = x
    t = S.table
    return FiniteSemigroup(tuple(
        tuple(perm[t[inv[i]][inv[j]]] for j in S.elements) for i in S.elements
    ))


def find_isomorphism(S: FiniteSemigroup, T: FiniteSemigroup):
    """Brute-force isomorphism search; returns the image tuple or ``None``."""
    from itertools import permutations

    if S.order != T.order:
        return None
    for perm in permutations(range(T.order)):
        if is_homomorphism(S, T, perm):
            return perm
    return None


def is_isomorphic(S: FiniteSemigroup, T: FiniteSemigroup) -> bool:
    return find_isomorphism(S, T) is not None


# -- file formats -----------------------------------------------------------

def loads(text: str) -> FiniteSemigroup:
    """Parse the JSON object format or the plain whitespace-separated format."""
    stripped = text.strip()
    if stripped.startswith("{"):
        data = json.loads(stripped)
        table = data["table"]
        order = data.get("order", len(table))
        return validate_table(order, table, data.get("names"))
    tokens = stripped.split("\n")
    lines = [ln.split() for ln in tokens if ln.strip()]
    if not lines or len(lines[0]) != 1:
        raise SemigroupError("text format: first line must hold the order")
    try:
        order = int(lines[0][0])
        table = [[int(v) for v in row] for row in lines[1:]]
    except ValueError as exc:
        raise SemigroupError(f"text format: {exc}") from None
    return validate_table(order, table)


def load(path) -> FiniteSemigroup:
    return loads(Path(path).read_text())


def to_dict(S: FiniteSemigroup) -> dict:
    d = {"order": S.order, "table": [list(r) for r in S.table]}
    if S.names:
        d["names"] = list(S.names)
    return d


def dumps(S: FiniteSemigroup) -> str:
    return json.dumps(to_dict(S))


def dump(S: FiniteSemigroup, path) -> None:
    Path(path).write_text(dumps(S) + "\n")
