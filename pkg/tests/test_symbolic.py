import json
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from semiclose import kernel
from semiclose import invariants as inv
from semiclose.fixtures import FIXTURES, LZ2, S2, Z2
from semiclose.symbolic import (
    PREDICATES, Cyclic, DSLSyntaxError, Engine, FreeComm, InvalidArgument, Monogenic, NullOmega,
    OmegaChain, One, Product, Prufer, SumOmega, Table, Truth, UnknownPredicate, Zero,
    eval_all, eval_predicate, finite_facts, parse_dsl, truncate, truncation_contradictions,
)

from conftest import semigroups

T, F, U = Truth.TRUE, Truth.FALSE, Truth.UNKNOWN


# -- three-valued logic --------------------------------------------------------------

def test_kleene_tables():
    vals = [T, F, U]
    for a, b in product(vals, repeat=2):
        assert (a & b) is (b & a) and (a | b) is (b | a)
        assert ~(a & b) is (~a | ~b)
    assert (T & U) is U and (F & U) is F and (T | U) is T and ~U is U


# -- parser ----------------------------------------------------------------------------

def test_parse_examples():
    assert parse_dsl("C(2)") == Cyclic(2)
    assert parse_dsl("Sum(omega, C(2))") == SumOmega(Cyclic(2))
    assert parse_dsl("Zero(Prufer(3)) * OmegaChain") == Product(Zero(Prufer(3)), OmegaChain())


def test_parse_is_left_associative_and_grouped():
    a, b, c = Cyclic(2), Cyclic(3), NullOmega()
    assert parse_dsl("C(2) * C(3) * NullOmega") == Product(Product(a, b), c)
    assert parse_dsl("C(2) * (C(3) * NullOmega)") == Product(a, Product(b, c))
    assert parse_dsl(" M( 2 ,1 ) ") == Monogenic(2, 1)
    assert parse_dsl("One(FreeComm(2))") == One(FreeComm(2))


def test_parse_table(tmp_path):
    kernel.dump(S2, tmp_path / "s2.json")
    node = parse_dsl("Table(s2.json) * C(2)", base_dir=tmp_path)
    assert node.left == Table(S2) and node.is_finite
    assert node.materialize().order == 4


@pytest.mark.parametrize("text", ["", "C(", "C(2))", "Foo", "C(x)", "Sum(C(2), C(2))", "C(2) *", "C(2) $"])
def test_syntax_errors(text):
    with pytest.raises(DSLSyntaxError) as info:
        parse_dsl(text)
    assert 0 <= info.value.pos <= len(text)


@pytest.mark.parametrize("text", ["Prufer(4)", "C(0)", "Sum(omega, OmegaChain)", "Sum(omega, M(2,1))",
                                  "FreeComm(0)", "Table(/no/such/file.json)"])
def test_invalid_arguments(text):
    with pytest.raises(InvalidArgument):
        parse_dsl(text)


def test_str_roundtrip():
    for text in ["C(2) * (C(3) * NullOmega)", "Zero(Sum(omega, C(2))) * Prufer(5)", "One(M(2,3))"]:
        assert parse_dsl(str(parse_dsl(text))) == parse_dsl(text)


def test_sum_of_trivial_group_is_finite():
    node = SumOmega(Cyclic(1))
    assert node.is_finite and node.materialize().order == 1


# -- rule table examples --------------------------------------------------------------------

def v(node, pred):
    return eval_predicate(node, pred).value


def test_rule_examples():
    assert v(OmegaChain(), "chain_finite") is F
    assert v(Prufer(3), "bounded") is F and v(Prufer(3), "periodic") is T
    r = eval_predicate(SumOmega(Cyclic(2)), "group_finite")
    assert r.value is F and "whole group" in r.citation
    r = eval_predicate(SumOmega(Cyclic(2)), "bounded")
    assert r.value is T and r.exponent == 2
    assert v(NullOmega(), "nonsingular") is F
    assert v(FreeComm(1), "periodic") is F


def test_base_rows():
    assert eval_predicate(OmegaChain(), "bounded").exponent == 1
    assert v(OmegaChain(), "group_finite") is T and v(OmegaChain(), "clifford") is T
    assert eval_predicate(NullOmega(), "bounded").exponent == 2
    assert v(NullOmega(), "chain_finite") is T and v(NullOmega(), "clifford_plus_finite") is F
    assert v(FreeComm(2), "chain_finite") is T and v(FreeComm(2), "nonsingular") is T
    assert v(Prufer(2), "group_finite") is F and v(Prufer(2), "group_bounded") is F
    S6 = SumOmega(Cyclic(6))
    assert eval_predicate(S6, "bounded").exponent == 6
    assert all(v(S6, p) is T for p in ("group_bounded", "clifford", "clifford_plus_finite",
                                       "group_commutative", "chain_finite"))


def test_every_verdict_has_a_trace():
    nodes = [OmegaChain(), NullOmega(), FreeComm(1), Prufer(2), SumOmega(Cyclic(3)),
             Zero(Prufer(2)), One(NullOmega()), Product(OmegaChain(), Prufer(3)),
             Product(FreeComm(1), SumOmega(Cyclic(2))), Product(Zero(NullOmega()), Cyclic(2))]
    for node in nodes:
        for pred, verdict in eval_all(node).items():
            assert verdict.trace and verdict.citation and verdict.predicate == pred
            json.dumps(verdict.to_dict())
            assert pred in verdict.explain()


def test_unknown_predicate():
    with pytest.raises(UnknownPredicate):
        eval_predicate(OmegaChain(), "noetherian")


def test_viability_of_commutative_terms():
    for node in [OmegaChain(), Product(FreeComm(1), Prufer(2)), One(NullOmega())]:
        assert v(node, "viable") is T and v(node, "Z_viable") is T
    assert v(Table(LZ2), "viable") is F


def test_product_with_idempotent_free_factor_has_no_subgroups():
    node = Product(FreeComm(1), Prufer(2))
    assert v(node, "group_finite") is T and v(node, "group_bounded") is T
    assert v(node, "chain_finite") is U


def test_witnesses_lift_through_products():
    assert v(Product(OmegaChain(), Cyclic(2)), "chain_finite") is F
    assert v(Product(Cyclic(3), NullOmega()), "nonsingular") is F
    assert v(Product(Prufer(2), Prufer(3)), "chain_finite") is T


def test_bounded_product_takes_max_index_and_lcm_period():
    r = eval_predicate(Product(NullOmega(), SumOmega(Cyclic(3))), "bounded")
    assert r.value is T and r.bound == (2, 3) and r.exponent == 3
    r = eval_predicate(Product(Zero(NullOmega()), SumOmega(Cyclic(2))), "bounded")
    assert r.exponent == 2


def test_engine_is_deterministic():
    node = Product(Zero(SumOmega(Cyclic(2))), One(NullOmega()))
    first = {p: x.to_dict() for p, x in eval_all(node, Engine()).items()}
    again = {p: x.to_dict() for p, x in eval_all(node, Engine()).items()}
    assert first == again


# -- agreement with the finite kernel ----------------------------------------------------------

def agrees(symbolic, S):
    facts = finite_facts(S)
    for pred in PREDICATES:
        got = Engine(compositional=True).evaluate(symbolic, pred)
        if got.value is U:
            assert pred in ("viable", "Z_viable"), (symbolic, pred)
            continue
        assert got.value is Truth.of(facts[pred]), (symbolic, pred)
        if pred == "bounded":
            assert got.exponent == inv.exponent_of(S)


@settings(max_examples=150)
@given(semigroups(constructions=False), semigroups(max_order=2, constructions=False))
def test_product_rules_match_direct_product(S, R):
    agrees(Product(Table(S), Table(R)), kernel.direct_product(S, R))


@settings(max_examples=150)
@given(semigroups(constructions=False))
def test_extension_rules_match_kernel_extensions(S):
    agrees(Zero(Table(S)), kernel.zero_extension(S))
    agrees(One(Table(S)), kernel.one_extension(S))


def test_finite_constructors_match_fixtures():
    assert Cyclic(2).materialize() == Z2
    for name, S in FIXTURES.items():
        assert finite_facts(S)["finite"]
    assert eval_predicate(Monogenic(3, 2), "bounded").exponent == 4


# -- soundness by truncation ----------------------------------------------------------------------

atoms = st.sampled_from([OmegaChain(), NullOmega(), Prufer(2), Prufer(3), SumOmega(Cyclic(2)),
                         SumOmega(Cyclic(3)), FreeComm(1), Cyclic(2), Monogenic(2, 1), Table(LZ2)])


def terms():
    return st.recursive(atoms, lambda inner: st.one_of(
        st.builds(Zero, inner), st.builds(One, inner), st.builds(Product, inner, inner)),
        max_leaves=3)


@settings(max_examples=150, deadline=None)
@given(terms())
def test_truncations_never_contradict(node):
    checked, bad = truncation_contradictions(node)
    assert not bad


def test_truncation_families():
    assert truncate(OmegaChain(), 4).order == 4
    assert truncate(NullOmega(), 3).order == 3
    assert truncate(Prufer(2), 3).order == 8
    assert truncate(SumOmega(Cyclic(2)), 3).order == 8
    assert truncate(FreeComm(1), 3) is None
    assert truncate(Product(Zero(OmegaChain()), Cyclic(2)), 2).order == 6
