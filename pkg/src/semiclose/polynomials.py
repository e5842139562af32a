"""Semigroup polynomials ``x -> a0 x a1 x ... x an`` and polybounded covers.

Coefficients are element indices of the parent or ``UNIT`` (``-1``) for the
adjoined identity of the 1-extension.  Every search here is over an explicit,
truncated space; a negative answer only speaks about that space.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterable

from .kernel import FiniteSemigroup, SemigroupError

UNIT = -1
DEFAULT_MAX_DEGREE = 3
DEFAULT_WORD_LENGTH = 2


class InvalidCover(SemigroupError):
    pass


def mul1(S: FiniteSemigroup, a: int, b: int) -> int:
    """Multiplication in the 1-extension of ``S``."""
    if a == UNIT:
        return b
    if b == UNIT:
        return a
    return S.table[a][b]


@dataclass(frozen=True)
class SemigroupPolynomial:
    parent: FiniteSemigroup
    coefficients: tuple[int, ...]

    def __post_init__(self):
        if len(self.coefficients) < 2:
            raise ValueError("a polynomial needs at least two coefficients (degree >= 1)")
        for a in self.coefficients:
            if a != UNIT and not 0 <= a < self.parent.order:
                raise ValueError(f"coefficient {a} is not in the 1-extension")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x: int) -> int:
        return eval_polynomial(self, x)

    def values(self) -> tuple[int, ...]:
        return tuple(eval_polynomial(self, x) for x in self.parent.elements)

    def render(self) -> str:
        S = self.parent
        parts = []
        for i, a in enumerate(self.coefficients):
            if a != UNIT:
                parts.append(S.name(a))
            if i < self.degree:
                parts.append("x")
        return "*".join(parts)

    def __repr__(self):
        return f"SemigroupPolynomial({self.render()})"


def polynomial(S: FiniteSemigroup, coefficients: Iterable[int]) -> SemigroupPolynomial:
    return SemigroupPolynomial(S, tuple(coefficients))


def identity_polynomial(S: FiniteSemigroup) -> SemigroupPolynomial:
    return SemigroupPolynomial(S, (UNIT, UNIT))


def eval_polynomial(f: SemigroupPolynomial, x: int) -> int:
    S = f.parent
    coeffs = f.coefficients
    acc = coeffs[0]
    for a in coeffs[1:]:
        acc = mul1(S, mul1(S, acc, x), a)
    return acc


def compose(f: SemigroupPolynomial, g: SemigroupPolynomial) -> SemigroupPolynomial:
    """Coefficients of ``x -> f(g(x))``; adjacent constants are multiplied out."""
    if f.parent != g.parent:
        raise ValueError("polynomials over different semigroups")
    S = f.parent
    a, b = f.coefficients, g.coefficients
    out = [mul1(S, a[0], b[0])]
    for k in range(1, len(a)):
        out.extend(b[1:-1])
        last = mul1(S, b[-1], a[k])
        out.append(mul1(S, last, b[0]) if k < len(a) - 1 else last)
    return SemigroupPolynomial(S, tuple(out))


def coefficient_pool(S: FiniteSemigroup, word_length: int = DEFAULT_WORD_LENGTH) -> list[int]:
    """Distinct values of coefficient words of length ``<= word_length``."""
    pool = {UNIT}
    layer = {UNIT}
    for _ in range(word_length):
        layer = {mul1(S, w, a) for w in layer for a in S.elements}
        pool |= layer
    return sorted(pool)


def polynomial_functions(S: FiniteSemigroup, max_degree: int,
                         word_length: int = DEFAULT_WORD_LENGTH):
    """Map each realised value tuple to a lowest-degree polynomial realising it.

    Builds degree ``n+1`` from degree ``n`` via ``f(x) -> f(x) * x * a``, so
    only distinct functions are carried between layers.
    """
    pool = coefficient_pool(S, word_length)
    found: dict[tuple[int, ...], SemigroupPolynomial] = {}
    layer: dict[tuple[int, ...], tuple[int, ...]] = {}
    for a0, a1 in product(pool, repeat=2):
        coeffs = (a0, a1)
        vals = tuple(mul1(S, mul1(S, a0, x), a1) for x in S.elements)
        layer.setdefault(vals, coeffs)
    for vals, coeffs in layer.items():
        found.setdefault(vals, SemigroupPolynomial(S, coeffs))
    for _ in range(max_degree - 1):
        nxt: dict[tuple[int, ...], tuple[int, ...]] = {}
        for vals, coeffs in layer.items():
            for a in pool:
                v = tuple(mul1(S, S.table[vals[x]][x], a) for x in S.elements)
                nxt.setdefault(v, coeffs + (a,))
        layer = nxt
        for vals, coeffs in layer.items():
            found.setdefault(vals, SemigroupPolynomial(S, coeffs))
    return found


@dataclass(frozen=True)
class PolyboundedCover:
    items: tuple[tuple[SemigroupPolynomial, int], ...]
    max_degree: int | None = None
    word_length: int | None = None

    def __len__(self):
        return len(self.items)

    def to_dict(self) -> dict:
        d = {"items": [{"coefficients": list(f.coefficients), "target": b} for f, b in self.items]}
        if self.max_degree is not None:
            d["search_space"] = {"max_degree": self.max_degree, "word_length": self.word_length}
        return d


@dataclass(frozen=True)
class PolyfiniteWitness:
    d: int
    F: frozenset[int]
    recipe: tuple = field(default=(), compare=False)

    def to_dict(self) -> dict:
        return {"d": self.d, "F": sorted(self.F)}


def cover_from_dict(S: FiniteSemigroup, data: dict) -> PolyboundedCover:
    return PolyboundedCover(tuple(
        (polynomial(S, it["coefficients"]), int(it["target"])) for it in data["items"]
    ))


def cover_to_json(cover: PolyboundedCover) -> str:
    return json.dumps(cover.to_dict())


def identity_cover(S: FiniteSemigroup) -> PolyboundedCover:
    f = identity_polynomial(S)
    return PolyboundedCover(tuple((f, b) for b in S.elements))


def verify_cover(S: FiniteSemigroup, cover: PolyboundedCover) -> bool:
    if not cover.items:
        return False
    covered = set()
    for f, b in cover.items:
        if f.parent != S:
            return False
        covered |= {x for x in S.elements if f(x) == b}
    return covered == set(S.elements)


def search_polybounded(S: FiniteSemigroup, max_k: int,
                       max_degree: int = DEFAULT_MAX_DEGREE,
                       word_length: int = DEFAULT_WORD_LENGTH) -> PolyboundedCover | None:
    """Smallest cover by at most ``max_k`` polynomial fibres, or ``None``.

    ``None`` means no cover exists inside the truncated search space; it is
    not a proof that ``S`` fails to be ``max_k``-polybounded.
    """
    if max_k < 1:
        raise ValueError("max_k must be positive")
    fibres: dict[frozenset[int], tuple[SemigroupPolynomial, int]] = {}
    funcs = sorted(polynomial_functions(S, max_degree, word_length).values(),
                   key=lambda f: (f.degree, f.coefficients))
    for f in funcs:
        vals = f.values()
        for b in sorted(set(vals)):
            fibres.setdefault(frozenset(x for x in S.elements if vals[x] == b), (f, b))
    universe = frozenset(S.elements)
    # drop fibres contained in another: a minimal cover never needs them
    maximal = [A for A in fibres if not any(A < B for B in fibres)]
    maximal.sort(key=lambda A: (-len(A), sorted(A)))
    for k in range(1, max_k + 1):
        for combo in combinations(maximal, k):
            if frozenset().union(*combo) == universe:
                return PolyboundedCover(tuple(fibres[A] for A in combo), max_degree, word_length)
    return None


def polyfinite_from_polybounded(S: FiniteSemigroup, cover: PolyboundedCover) -> PolyfiniteWitness:
    """Polyfiniteness witness ``(d, F)`` built from a polybounded cover.

    ``F`` holds the targets ``b_i`` and every ``f_i(b_j)``; ``d`` is the largest
    degree of a composite ``f_i o f_j``.  For each pair ``(x, y)`` the
    polynomial ``f_j o f_i`` is constructed, where ``f_i(x) = b_i`` and
    ``f_j(f_i(y)) = b_j``, and checked to land in ``F``.
    """
    if not verify_cover(S, cover):
        raise InvalidCover("the given items do not cover the semigroup")
    items = cover.items
    F = {b for _, b in items} | {f(b) for f, _ in items for _, b in items}
    d = max(compose(f, g).degree for f, _ in items for g, _ in items)
    recipe = []
    for x in S.elements:
        i = next(k for k, (f, b) in enumerate(items) if f(x) == b)
        fi = items[i][0]
        for y in S.elements:
            fy = fi(y)
            j = next(k for k, (f, b) in enumerate(items) if f(fy) == b)
            h = compose(items[j][0], fi)
            hx, hy = h(x), h(y)
            if h.degree > d or hx not in F or hy not in F:
                raise InvalidCover(f"recipe failed at pair ({x}, {y})")
            recipe.append((x, y, i, j))
    return PolyfiniteWitness(d, frozenset(F), tuple(recipe))


def verify_polyfinite(S: FiniteSemigroup, witness: PolyfiniteWitness,
                      word_length: int = DEFAULT_WORD_LENGTH) -> bool:
    """Whether every pair is mapped into ``F`` by some polynomial of degree ``<= d``."""
    F = witness.F
    if not F:
        return False
    funcs = polynomial_functions(S, witness.d, word_length)
    hits = [vals for vals in funcs if any(v in F for v in vals)]
    for x in S.elements:
        for y in range(x, S.order):
            if not any(vals[x] in F and vals[y] in F for vals in hits):
                return False
    return True
