"""Three-valued evaluation of semigroup predicates on constructor terms.

A verdict is ``TRUE`` or ``FALSE`` only when a sound rule fires; everything
else is ``UNKNOWN``.  Finite terms are expanded to Cayley tables and decided
exactly.  Infinite terms go through the rule table below, which is
compositional over ``Zero``, ``One`` and ``*``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from math import lcm

from .. import invariants as inv
from ..kernel import FiniteSemigroup, SemigroupError
from .ast import (
    FreeComm, Node, NullOmega, OmegaChain, One, Product, Prufer, SumOmega, Table, Zero,
    truncate, truncation_order,
)


class UnknownPredicate(SemigroupError):
    pass


class Truth(Enum):
    TRUE = "true"
    FALSE = "false"
    UNKNOWN = "unknown"

    @classmethod
    def of(cls, b: bool) -> "Truth":
        return cls.TRUE if b else cls.FALSE

    def __and__(self, other: "Truth") -> "Truth":
        if Truth.FALSE in (self, other):
            return Truth.FALSE
        if Truth.UNKNOWN in (self, other):
            return Truth.UNKNOWN
        return Truth.TRUE

    def __or__(self, other: "Truth") -> "Truth":
        if Truth.TRUE in (self, other):
            return Truth.TRUE
        if Truth.UNKNOWN in (self, other):
            return Truth.UNKNOWN
        return Truth.FALSE

    def __invert__(self) -> "Truth":
        return {Truth.TRUE: Truth.FALSE, Truth.FALSE: Truth.TRUE}.get(self, Truth.UNKNOWN)


T, F, U = Truth.TRUE, Truth.FALSE, Truth.UNKNOWN

PREDICATES = (
    "finite", "commutative", "chain_finite", "periodic", "bounded",
    "group_finite", "group_bounded", "group_commutative", "clifford",
    "clifford_plus_finite", "nonsingular", "E_commutative", "viable", "Z_viable",
)
# auxiliary facts the product rules need
AUXILIARY = ("has_idempotents", "is_group")

DEFINITIONS = {
    "finite": "X is finite",
    "commutative": "xy = yx for all x, y",
    "chain_finite": "every infinite I contains x, y with xy not in {x, y}",
    "periodic": "every x has an idempotent power",
    "bounded": "one n makes every x^n idempotent",
    "group_finite": "every subgroup is finite",
    "group_bounded": "every subgroup is bounded",
    "group_commutative": "every subgroup is commutative",
    "clifford": "X = H(X)",
    "clifford_plus_finite": "X \\ H(X) is finite",
    "nonsingular": "no infinite A has AA a singleton",
    "E_commutative": "idempotents commute",
    "viable": "every idempotent is viable",
    "Z_viable": "every central idempotent is viable",
    "has_idempotents": "E(X) is nonempty",
    "is_group": "X is a group",
}


@dataclass(frozen=True)
class TraceStep:
    rule: str
    citation: str
    subverdicts: tuple["Verdict", ...] = ()


@dataclass(frozen=True)
class Verdict:
    value: Truth
    trace: tuple[TraceStep, ...]
    predicate: str = ""
    subject: str = ""
    # (largest index, lcm of periods) when a bounded verdict is TRUE
    bound: tuple[int, int] | None = None
    witness: object = field(default=None, compare=False)

    @property
    def exponent(self) -> int | None:
        if self.value is not T or self.bound is None:
            return None
        return inv.exponent_from(*self.bound)

    @property
    def rule(self) -> str:
        return self.trace[0].rule if self.trace else ""

    @property
    def citation(self) -> str:
        return self.trace[0].citation if self.trace else ""

    def to_dict(self) -> dict:
        d = {"predicate": self.predicate, "subject": self.subject, "value": self.value.value,
             "rule": self.rule, "citation": self.citation}
        if self.exponent is not None:
            d["exponent"] = self.exponent
        subs = [s for step in self.trace for s in step.subverdicts]
        if subs:
            d["because"] = [s.to_dict() for s in subs]
        return d

    def explain(self, indent: int = 0) -> str:
        pad = "  " * indent
        head = f"{pad}{self.predicate}({self.subject}) = {self.value.value}"
        if self.exponent is not None:
            head += f" [exponent {self.exponent}]"
        lines = [head]
        for step in self.trace:
            lines.append(f"{pad}  by {step.rule}: {step.citation}")
            lines.extend(s.explain(indent + 2) for s in step.subverdicts)
        return "\n".join(lines)


# -- finite semigroups --------------------------------------------------------

def finite_facts(S: FiniteSemigroup) -> dict[str, object]:
    """Exact values of every predicate on a finite semigroup."""
    E = inv.idempotents(S)
    groups = inv.maximal_subgroups(S)
    H = inv.clifford_part(S)
    VE = inv.viable_idempotents(S)
    t = S.table
    data = [inv.monogenic_data(S, x) for x in S.elements]
    return {
        "finite": True,
        "commutative": S.is_commutative(),
        "chain_finite": True,
        "periodic": True,
        "bounded": True,
        "group_finite": True,
        "group_bounded": True,
        "group_commutative": all(t[x][y] == t[y][x] for G in groups.values() for x in G for y in G),
        "clifford": len(H) == S.order,
        "clifford_plus_finite": True,
        "nonsingular": True,
        "E_commutative": inv.is_e_commutative(S),
        "viable": VE == E,
        "Z_viable": (inv.center(S) & E) <= VE,
        "has_idempotents": bool(E),
        "is_group": len(E) == 1 and len(H) == S.order,
        "_bound": (max(d.index for d in data), lcm(*(d.period for d in data))),
    }


# -- rule table for infinite constructors --------------------------------------

# (value, reason); bounded entries also carry (index bound, period lcm)
_OMEGA_CHAIN = {
    "finite": (F, "the naturals are infinite"),
    "commutative": (T, "min is commutative"),
    "chain_finite": (F, "the whole chain: min(x, y) is always x or y"),
    "periodic": (T, "every element is idempotent"),
    "bounded": (T, "every element is idempotent", (1, 1)),
    "group_finite": (T, "subgroups are trivial"),
    "group_bounded": (T, "subgroups are trivial"),
    "group_commutative": (T, "subgroups are trivial"),
    "clifford": (T, "every element is a trivial subgroup"),
    "clifford_plus_finite": (T, "Clifford"),
    "nonsingular": (T, "AA contains A for sets of idempotents"),
    "E_commutative": (T, "commutative"),
    "has_idempotents": (T, "every element is idempotent"),
    "is_group": (F, "more than one idempotent"),
}
_NULL_OMEGA = {
    "finite": (F, "countably infinite"),
    "commutative": (T, "all products are 0"),
    "chain_finite": (T, "xy = 0 is outside {x, y} for distinct nonzero x, y"),
    "periodic": (T, "x^2 = 0"),
    "bounded": (T, "x^2 = 0", (2, 1)),
    "group_finite": (T, "the only subgroup is {0}"),
    "group_bounded": (T, "the only subgroup is {0}"),
    "group_commutative": (T, "the only subgroup is {0}"),
    "clifford": (F, "H(X) = {0}"),
    "clifford_plus_finite": (F, "X \\ H(X) = X \\ {0} is infinite"),
    "nonsingular": (F, "A = X \\ {0} has AA = {0}"),
    "E_commutative": (T, "E = {0}"),
    "has_idempotents": (T, "0 is idempotent"),
    "is_group": (F, "0 is absorbing"),
}
_FREE_COMM = {
    "finite": (F, "infinitely many words"),
    "commutative": (T, "free commutative"),
    "chain_finite": (T, "|xy| = |x| + |y| so xy is never x or y"),
    "periodic": (F, "no power of a generator is idempotent"),
    "bounded": (F, "not periodic"),
    "group_finite": (T, "no idempotents, hence no subgroups"),
    "group_bounded": (T, "no idempotents, hence no subgroups"),
    "group_commutative": (T, "no idempotents, hence no subgroups"),
    "clifford": (F, "H(X) is empty"),
    "clifford_plus_finite": (F, "X \\ H(X) = X is infinite"),
    "nonsingular": (T, "cancellative: aa = ab forces a = b"),
    "E_commutative": (T, "E(X) is empty"),
    "has_idempotents": (F, "word length grows under squaring"),
    "is_group": (F, "no identity"),
}
_PRUFER = {
    "finite": (F, "quasicyclic groups are infinite"),
    "commutative": (T, "abelian group"),
    "chain_finite": (T, "groups are chain-finite: xy in {x, y} forces a unit"),
    "periodic": (T, "every element has finite order"),
    "bounded": (F, "element orders p^k are unbounded"),
    "group_finite": (F, "the whole group is an infinite subgroup"),
    "group_bounded": (F, "the whole group is an unbounded subgroup"),
    "group_commutative": (T, "abelian"),
    "clifford": (T, "a group"),
    "clifford_plus_finite": (T, "a group"),
    "nonsingular": (T, "cancellative"),
    "E_commutative": (T, "one idempotent"),
    "has_idempotents": (T, "identity"),
    "is_group": (T, "a group"),
}


def _sum_omega_rules(node: SumOmega) -> dict:
    G = node.group_table
    L = inv.exponent_of(G)
    return {
        "finite": (F, "countably many nontrivial summands"),
        "commutative": (T, "abelian group"),
        "chain_finite": (T, "groups are chain-finite: xy in {x, y} forces a unit"),
        "periodic": (T, "bounded"),
        "bounded": (T, f"x^{L} = e for the exponent {L} of G", (1, L)),
        "group_finite": (F, "the whole group is an infinite subgroup"),
        "group_bounded": (T, f"the whole group has exponent {L}"),
        "group_commutative": (T, "abelian"),
        "clifford": (T, "a group"),
        "clifford_plus_finite": (T, "a group"),
        "nonsingular": (T, "cancellative"),
        "E_commutative": (T, "one idempotent"),
        "has_idempotents": (T, "identity"),
        "is_group": (T, "a group"),
    }


_BASE_TABLES = {OmegaChain: _OMEGA_CHAIN, NullOmega: _NULL_OMEGA, FreeComm: _FREE_COMM, Prufer: _PRUFER}

_DEF = "definition"
_RULE = "rule table"


class Engine:
    """Memoizing evaluator confined to one evaluation pass."""

    def __init__(self, compositional: bool = False):
        # compositional=True applies Zero/One/Product rules even to finite terms
        self.compositional = compositional
        self.memo: dict[tuple[Node, str], Verdict] = {}
        self._facts: dict[Node, dict] = {}

    def evaluate(self, node: Node, predicate: str) -> Verdict:
        if predicate not in PREDICATES and predicate not in AUXILIARY:
            raise UnknownPredicate(predicate)
        key = (node, predicate)
        if key not in self.memo:
            self.memo[key] = self._evaluate(node, predicate)
        return self.memo[key]

    def _verdict(self, node, predicate, value, rule, citation, subs=(), bound=None, witness=None):
        return Verdict(value, (TraceStep(rule, citation, tuple(subs)),), predicate, str(node),
                       bound if value is T and predicate == "bounded" else None, witness)

    def _evaluate(self, node: Node, pred: str) -> Verdict:
        if isinstance(node, Table) or (node.is_finite and not (
                self.compositional and isinstance(node, (Zero, One, Product)))):
            return self._finite(node, pred)
        if type(node) in _BASE_TABLES:
            return self._base(node, pred, _BASE_TABLES[type(node)])
        if isinstance(node, SumOmega):
            return self._base(node, pred, _sum_omega_rules(node))
        if isinstance(node, (Zero, One)):
            return self._extension(node, pred)
        if isinstance(node, Product):
            return self._product(node, pred)
        raise TypeError(f"no rules for {node!r}")

    def _finite(self, node: Node, pred: str) -> Verdict:
        if node not in self._facts:
            self._facts[node] = finite_facts(node.materialize())
        facts = self._facts[node]
        return self._verdict(node, pred, Truth.of(facts[pred]), "finite table",
                             f"decided on the Cayley table ({DEFINITIONS[pred]})",
                             bound=facts["_bound"])

    def _base(self, node, pred, table) -> Verdict:
        if pred in ("viable", "Z_viable"):
            return self._viable_from_commutative(node, pred)
        entry = table[pred]
        bound = entry[2] if len(entry) > 2 else None
        return self._verdict(node, pred, entry[0], f"{_RULE}: {type(node).__name__}", entry[1],
                             bound=bound)

    def _viable_from_commutative(self, node, pred) -> Verdict:
        c = self.evaluate(node, "commutative")
        value = T if c.value is T else U
        return self._verdict(node, pred, value, "commutative semigroups are viable",
                             "every commutative semigroup is viable" if value is T
                             else "no sound rule for noncommutative terms", [c])

    def _extension(self, node, pred) -> Verdict:
        kind = "zero" if isinstance(node, Zero) else "one"
        if pred == "has_idempotents":
            return self._verdict(node, pred, T, f"{kind}-extension", f"the adjoined {kind} is idempotent")
        if pred == "is_group":
            return self._verdict(node, pred, F, f"{kind}-extension",
                                 f"the adjoined {kind} is a second idempotent or has no inverse")
        child = self.evaluate(node.child, pred)
        bound = None
        if pred == "bounded" and child.bound is not None:
            bound = (max(child.bound[0], 1), child.bound[1])
        return self._verdict(node, pred, child.value, f"{kind}-extension inherits",
                             f"adjoining a {kind} preserves {DEFINITIONS[pred]}", [child], bound)

    def _product(self, node: Product, pred: str) -> Verdict:
        ev = self.evaluate
        a, b = node.left, node.right
        A, B = ev(a, pred), ev(b, pred)
        rule = "product"

        if pred in ("commutative", "periodic", "clifford", "has_idempotents", "is_group"):
            return self._verdict(node, pred, A.value & B.value, f"{rule}: conjunctive",
                                 f"{DEFINITIONS[pred]} holds in A x B iff in both factors", [A, B])

        if pred == "bounded":
            bound = None
            if A.bound and B.bound:
                bound = (max(A.bound[0], B.bound[0]), lcm(A.bound[1], B.bound[1]))
            return self._verdict(node, pred, A.value & B.value, f"{rule}: conjunctive",
                                 "powers are computed componentwise; exponent data combine by max/lcm",
                                 [A, B], bound)

        if pred == "finite":
            fa, fb = A.value, B.value
            return self._verdict(node, pred, fa & fb, f"{rule}: finite iff both finite",
                                 "factors are nonempty", [A, B])

        if pred in ("group_finite", "group_bounded", "group_commutative", "E_commutative"):
            ia, ib = ev(a, "has_idempotents"), ev(b, "has_idempotents")
            if F in (ia.value, ib.value):
                return self._verdict(node, pred, T, f"{rule}: vacuous",
                                     "a factor has no idempotents, so A x B has no idempotents and no subgroups",
                                     [ia if ia.value is F else ib])
            value = A.value & B.value if (ia.value is T and ib.value is T) else U
            return self._verdict(node, pred, value, f"{rule}: conjunctive",
                                 "maximal subgroups and idempotents of A x B are products of those of the factors",
                                 [A, B, ia, ib])

        if pred == "clifford_plus_finite":
            ca, cb = ev(a, "clifford"), ev(b, "clifford")
            fa, fb = ev(a, "finite"), ev(b, "finite")
            if fa.value is T and fb.value is T:
                return self._verdict(node, pred, T, f"{rule}: finite", "A x B is finite", [fa, fb])
            if ca.value is T and cb.value is T:
                return self._verdict(node, pred, T, f"{rule}: Clifford x Clifford",
                                     "H(A x B) = H(A) x H(B) = A x B", [ca, cb])
            for c, f in ((ca, fb), (cb, fa)):
                if c.value is F and f.value is F:
                    return self._verdict(node, pred, F, f"{rule}: infinite non-Clifford part",
                                         "(non-Clifford part of one factor) x (infinite other factor)",
                                         [c, f])
            return self._verdict(node, pred, U, f"{rule}: no sound rule",
                                 "no compositional rule applies", [ca, cb, fa, fb])

        if pred in ("chain_finite", "nonsingular"):
            fa, fb = ev(a, "finite"), ev(b, "finite")
            if fa.value is T and fb.value is T:
                return self._verdict(node, pred, T, f"{rule}: finite", "A x B is finite", [fa, fb])
            ia, ib = ev(a, "has_idempotents"), ev(b, "has_idempotents")
            for side, other_idem in ((A, ib), (B, ia)):
                if side.value is F and other_idem.value is T:
                    how = ("I x {f} for a witness I and an idempotent f" if pred == "chain_finite"
                           else "A x {f} for a singular witness A and an idempotent f")
                    return self._verdict(node, pred, F, f"{rule}: witness lifts", how,
                                         [side, other_idem])
            if pred == "chain_finite":
                ga, gb = ev(a, "is_group"), ev(b, "is_group")
                if ga.value is T and gb.value is T:
                    return self._verdict(node, pred, T, f"{rule}: group x group",
                                         "groups are chain-finite", [ga, gb])
            return self._verdict(node, pred, U, f"{rule}: no sound rule",
                                 "preservation under products is open here", [A, B])

        if pred in ("viable", "Z_viable"):
            return self._viable_from_commutative(node, pred)

        raise UnknownPredicate(pred)


def as_node(S) -> Node:
    if isinstance(S, Node):
        return S
    if isinstance(S, FiniteSemigroup):
        return Table(S)
    raise TypeError(f"cannot evaluate predicates on {type(S).__name__}")


def eval_predicate(S, predicate: str, engine: Engine | None = None) -> Verdict:
    """Three-valued verdict of ``predicate`` on a term or finite semigroup."""
    return (engine or Engine()).evaluate(as_node(S), predicate)


def eval_all(S, engine: Engine | None = None) -> dict[str, Verdict]:
    engine = engine or Engine()
    node = as_node(S)
    return {p: engine.evaluate(node, p) for p in PREDICATES}


# predicates inherited by subsemigroups; a TRUE verdict must survive truncation
HEREDITARY = ("commutative", "periodic", "bounded", "group_finite", "group_bounded",
              "group_commutative", "E_commutative")


def truncation_contradictions(node: Node, max_n: int = 4, max_order: int = 64,
                              engine: Engine | None = None) -> tuple[int, list[dict]]:
    """Compare TRUE verdicts on hereditary predicates with finite truncations.

    Returns the number of (truncation, predicate) comparisons made and the
    contradictions found.  A bounded verdict also has its exponent checked on
    every element of the truncation.
    """
    engine = engine or Engine()
    checked, bad = 0, []
    for n in range(1, max_n + 1):
        size = truncation_order(node, n)
        if size is None or size > max_order:
            break
        S = truncate(node, n)
        facts = finite_facts(S)
        E = inv.idempotents(S)
        for pred in HEREDITARY:
            verdict = engine.evaluate(node, pred)
            if verdict.value is not T:
                continue
            checked += 1
            ok = facts[pred]
            if ok and pred == "bounded":
                ok = all(S.power(x, verdict.exponent) in E for x in S.elements)
            if not ok:
                bad.append({"term": str(node), "n": n, "predicate": pred})
    return checked, bad
