"""Small named semigroups and the finite families used by the symbolic engine."""

from __future__ import annotations

from .kernel import FiniteSemigroup, direct_product, validate_table


def cyclic_group(n: int) -> FiniteSemigroup:
    """Z/n written additively; element ``k`` is ``a**k`` and ``0`` is the identity."""
    if n < 1:
        raise ValueError("cyclic group order must be positive")
    names = ["e"] + [f"a^{k}" if k > 1 else "a" for k in range(1, n)]
    return validate_table(n, [[(i + j) % n for j in range(n)] for i in range(n)], names)


def monogenic(index: int, period: int) -> FiniteSemigroup:
    """Monogenic semigroup with ``x**(index+period) == x**index``.

    Element ``k`` stands for ``x**(k+1)``, so the order is ``index + period - 1``.
    """
    if index < 1 or period < 1:
        raise ValueError("index and period must be positive")
    n = index + period - 1

    def reduce(e):  # exponent e >= 1
        if e < index + period:
            return e
        return index + (e - index) % period

    table = [[reduce(i + j + 2) - 1 for j in range(n)] for i in range(n)]
    names = ["x" if k == 0 else f"x^{k + 1}" for k in range(n)]
    return validate_table(n, table, names)


def chain(n: int) -> FiniteSemigroup:
    """The ``n``-element chain ``{0 < 1 < ... < n-1}`` under ``min``."""
    return validate_table(n, [[min(i, j) for j in range(n)] for i in range(n)])


def null_semigroup(n: int) -> FiniteSemigroup:
    """All products equal ``0``."""
    return validate_table(n, [[0] * n for _ in range(n)])


def left_zero(n: int) -> FiniteSemigroup:
    return validate_table(n, [[i] * n for i in range(n)])


def right_zero(n: int) -> FiniteSemigroup:
    return validate_table(n, [list(range(n)) for _ in range(n)])


def trivial() -> FiniteSemigroup:
    return validate_table(1, [[0]])


def power(S: FiniteSemigroup, n: int) -> FiniteSemigroup:
    """``S**n`` as an iterated direct product."""
    out = S
    for _ in range(n - 1):
        out = direct_product(out, S)
    return out


S2 = chain(2)
Z2 = cyclic_group(2)
Z3 = cyclic_group(3)
LZ2 = validate_table(2, [[0, 0], [1, 1]], ["x", "y"])
N2 = validate_table(2, [[0, 0], [0, 0]], ["0", "a"])
M21 = monogenic(2, 1)

FIXTURES = {"S2": S2, "Z2": Z2, "Z3": Z3, "LZ2": LZ2, "N2": N2, "M21": M21}
