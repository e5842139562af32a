"""Constructor terms for possibly infinite commutative semigroups."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .. import fixtures
from ..kernel import FiniteSemigroup, SemigroupError, direct_product, one_extension, zero_extension


class InvalidArgument(SemigroupError):
    pass


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % q for q in range(2, int(p ** 0.5) + 1))


class Node:
    """Base class; subclasses are frozen dataclasses."""

    def children(self) -> tuple["Node", ...]:
        return ()

    @property
    def is_finite(self) -> bool:
        raise NotImplementedError

    def materialize(self) -> FiniteSemigroup:
        """Cayley table of a finite term."""
        raise InvalidArgument(f"{self} denotes an infinite semigroup")

    def __mul__(self, other: "Node") -> "Product":
        return Product(self, other)


@dataclass(frozen=True)
class Table(Node):
    semigroup: FiniteSemigroup = field(compare=True)
    source: str | None = field(default=None, compare=False)

    is_finite = True

    @property
    def commutative(self) -> bool:
        return self.semigroup.is_commutative()

    def materialize(self):
        return self.semigroup

    def __str__(self):
        return f"Table({self.source})" if self.source else f"Table(<order {self.semigroup.order}>)"


@dataclass(frozen=True)
class Cyclic(Node):
    n: int
    is_finite = True

    def __post_init__(self):
        if self.n < 1:
            raise InvalidArgument("C(n) needs n >= 1")

    def materialize(self):
        return fixtures.cyclic_group(self.n)

    def __str__(self):
        return f"C({self.n})"


@dataclass(frozen=True)
class Monogenic(Node):
    index: int
    period: int
    is_finite = True

    def __post_init__(self):
        if self.index < 1 or self.period < 1:
            raise InvalidArgument("M(i, p) needs i, p >= 1")

    def materialize(self):
        return fixtures.monogenic(self.index, self.period)

    def __str__(self):
        return f"M({self.index},{self.period})"


@dataclass(frozen=True)
class OmegaChain(Node):
    """The naturals under ``min``."""

    is_finite = False

    def __str__(self):
        return "OmegaChain"


@dataclass(frozen=True)
class NullOmega(Node):
    """Countably infinite semigroup with all products equal to ``0``."""

    is_finite = False

    def __str__(self):
        return "NullOmega"


@dataclass(frozen=True)
class Prufer(Node):
    p: int
    is_finite = False

    def __post_init__(self):
        if not _is_prime(self.p):
            raise InvalidArgument(f"Prufer({self.p}): argument must be prime")

    def __str__(self):
        return f"Prufer({self.p})"


@dataclass(frozen=True)
class FreeComm(Node):
    k: int
    is_finite = False

    def __post_init__(self):
        if self.k < 1:
            raise InvalidArgument("FreeComm(k) needs k >= 1")

    def __str__(self):
        return f"FreeComm({self.k})"


@dataclass(frozen=True)
class SumOmega(Node):
    """Direct sum of countably many copies of a finite abelian group."""

    group: Node

    def __post_init__(self):
        if not self.group.is_finite:
            raise InvalidArgument("Sum(omega, G) needs a finite group G")
        from ..invariants import idempotents, maximal_subgroup

        G = self.group.materialize()
        E = idempotents(G)
        if len(E) != 1 or len(maximal_subgroup(G, next(iter(E)))) != G.order:
            raise InvalidArgument(f"Sum(omega, {self.group}): argument is not a group")
        if not G.is_commutative():
            raise InvalidArgument(f"Sum(omega, {self.group}): argument is not commutative")

    @cached_property
    def group_table(self) -> FiniteSemigroup:
        return self.group.materialize()

    @property
    def is_finite(self) -> bool:
        # countably many copies of the trivial group is trivial
        return self.group_table.order == 1

    def materialize(self):
        if not self.is_finite:
            return super().materialize()
        return self.group_table

    def __str__(self):
        return f"Sum(omega, {self.group})"


@dataclass(frozen=True)
class Zero(Node):
    child: Node

    def children(self):
        return (self.child,)

    @property
    def is_finite(self):
        return self.child.is_finite

    def materialize(self):
        return zero_extension(self.child.materialize())

    def __str__(self):
        return f"Zero({self.child})"


@dataclass(frozen=True)
class One(Node):
    child: Node

    def children(self):
        return (self.child,)

    @property
    def is_finite(self):
        return self.child.is_finite

    def materialize(self):
        return one_extension(self.child.materialize())

    def __str__(self):
        return f"One({self.child})"


@dataclass(frozen=True)
class Product(Node):
    left: Node
    right: Node

    def children(self):
        return (self.left, self.right)

    @property
    def is_finite(self):
        return self.left.is_finite and self.right.is_finite

    def materialize(self):
        return direct_product(self.left.materialize(), self.right.materialize())

    def __str__(self):
        return f"{self.left} * {self._wrap(self.right)}"

    @staticmethod
    def _wrap(node):
        return f"({node})" if isinstance(node, Product) else str(node)


def truncate(node: Node, n: int) -> FiniteSemigroup | None:
    """A finite subsemigroup of ``node`` growing with ``n``.

    ``OmegaChain`` becomes the ``n``-chain, ``NullOmega`` the null semigroup on
    ``n`` points, ``Prufer(p)`` the cyclic group of order ``p**n`` and
    ``Sum(omega, G)`` the power ``G**n``.  Free commutative semigroups have no
    finite subsemigroups, so terms containing them give ``None``.
    """
    if node.is_finite:
        return node.materialize()
    match node:
        case OmegaChain():
            return fixtures.chain(n)
        case NullOmega():
            return fixtures.null_semigroup(n)
        case Prufer(p=p):
            return fixtures.cyclic_group(p ** n)
        case SumOmega():
            return fixtures.power(node.group_table, n)
        case FreeComm():
            return None
        case Zero(child=c):
            T = truncate(c, n)
            return None if T is None else zero_extension(T)
        case One(child=c):
            T = truncate(c, n)
            return None if T is None else one_extension(T)
        case Product(left=a, right=b):
            A, B = truncate(a, n), truncate(b, n)
            return None if A is None or B is None else direct_product(A, B)
    raise TypeError(f"unknown node {node!r}")


def truncation_order(node: Node, n: int) -> int | None:
    """Order of ``truncate(node, n)`` without building it."""
    if node.is_finite:
        return node.materialize().order
    match node:
        case OmegaChain() | NullOmega():
            return n
        case Prufer(p=p):
            return p ** n
        case SumOmega():
            return node.group_table.order ** n
        case FreeComm():
            return None
        case Zero(child=c) | One(child=c):
            k = truncation_order(c, n)
            return None if k is None else k + 1
        case Product(left=a, right=b):
            x, y = truncation_order(a, n), truncation_order(b, n)
            return None if x is None or y is None else x * y
    raise TypeError(f"unknown node {node!r}")
