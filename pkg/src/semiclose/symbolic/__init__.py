"""Constructor language, parser and rule engine for infinite semigroups."""

from .ast import (
    Cyclic, FreeComm, InvalidArgument, Monogenic, Node, NullOmega, OmegaChain,
    One, Product, Prufer, SumOmega, Table, Zero, truncate, truncation_order,
)
from .engine import (
    PREDICATES, Engine, Truth, TraceStep, UnknownPredicate, Verdict,
    eval_all, eval_predicate, finite_facts, truncation_contradictions, HEREDITARY,
)
from .parser import DSLSyntaxError, parse_dsl
