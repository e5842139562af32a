"""Finite semigroup invariants, closedness classification and a small-order oracle."""

from .kernel import (
    FiniteSemigroup, SemigroupError, NonAssociative, OutOfRangeEntry, NotAnIdeal,
    IncompatiblePartition, validate_table, from_table, load, loads, dump, dumps,
)
from .classifier import classify
from .symbolic import parse_dsl, eval_predicate

__version__ = "0.1.0"
