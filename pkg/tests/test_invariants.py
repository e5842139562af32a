from itertools import product
from math import lcm

import pytest
from hypothesis import given, settings

from semiclose import invariants as inv
from semiclose import kernel
from semiclose.fixtures import LZ2, M21, N2, S2, Z2, Z3, chain, cyclic_group, monogenic

from conftest import all_of_order, semigroups


def test_idempotents_examples():
    assert inv.idempotents(S2) == {0, 1}
    assert inv.idempotents(Z2) == {0}
    assert inv.idempotents(M21) == {1}


def test_monogenic_examples():
    d = inv.monogenic_data(Z2, 1)
    assert (d.index, d.period, d.pi) == (1, 2, 0)
    d = inv.monogenic_data(M21, 0)
    assert (d.index, d.period, d.pi) == (2, 1, 1)
    d = inv.monogenic_data(S2, 0)
    assert (d.index, d.period, d.pi) == (1, 1, 0)


@pytest.mark.parametrize("i,p", [(1, 1), (1, 5), (3, 1), (2, 4), (4, 6)])
def test_monogenic_recovers_parameters(i, p):
    M = monogenic(i, p)
    d = inv.monogenic_data(M, 0)
    assert (d.index, d.period) == (i, p)
    assert M.power(0, i + p) == M.power(0, i)


@settings(max_examples=200)
@given(semigroups())
def test_pi_is_the_idempotent_power(S):
    E = inv.idempotents(S)
    for x in S.elements:
        d = inv.monogenic_data(S, x)
        assert d.pi in E
        assert S.power(x, d.idempotent_power) == d.pi
        assert all(S.power(x, n) not in E for n in range(1, d.idempotent_power))


def test_natural_order_examples():
    P = inv.natural_order(S2)
    assert P.le(0, 1) and not P.le(1, 0) and P.hasse_pairs() == [(0, 1)]
    assert inv.natural_order(LZ2).is_antichain()
    P = inv.natural_order(kernel.zero_extension(S2))
    assert P.is_chain() and P.minimal_elements() == [2]


@settings(max_examples=100)
@given(semigroups())
def test_natural_order_is_partial_order(S):
    P = inv.natural_order(S)
    E = P.elements
    assert all(P.le(e, e) for e in E)
    for a, b in product(E, repeat=2):
        if a != b:
            assert not (P.le(a, b) and P.le(b, a))
        for c in E:
            if P.le(a, b) and P.le(b, c):
                assert P.le(a, c)
    assert P.chain_finite() and P.well_founded()
    assert P.minimal_elements() or not E


def test_maximal_subgroup_examples():
    assert inv.maximal_subgroup(Z2, 0) == {0, 1}
    assert inv.maximal_subgroup(S2, 1) == {1}
    assert inv.maximal_subgroup(N2, 0) == {0}
    with pytest.raises(inv.NotIdempotent):
        inv.maximal_subgroup(N2, 1)


def test_clifford_part_examples():
    assert inv.clifford_part(Z2) == {0, 1}
    assert inv.clifford_part(N2) == {0}
    assert inv.clifford_part(M21) == {1}


@settings(max_examples=200)
@given(semigroups())
def test_maximal_subgroups_are_disjoint_groups(S):
    H = inv.maximal_subgroups(S)
    seen = set()
    for e, G in H.items():
        assert e in G and not (G & seen)
        seen |= G
        for x in G:
            assert S.mul(x, inv.group_inverse(S, e, x)) == e
            assert all(S.mul(x, y) in G for y in G)
    assert inv.clifford_part(S) == inv.clifford_part_via_pi(S)


def test_center_examples():
    assert inv.center(LZ2) == set() and inv.ideal_center(LZ2) == set()
    assert inv.center(S2) == inv.ideal_center(S2) == {0, 1}
    O = kernel.one_extension(LZ2)
    assert inv.center(O) == {2} and inv.ideal_center(O) == set()


@settings(max_examples=100)
@given(semigroups())
def test_ideal_center_is_ideal_inside_center(S):
    IZ, Z = inv.ideal_center(S), inv.center(S)
    assert IZ <= Z
    assert kernel.is_ideal(S, IZ)


def test_local_coideal_examples():
    assert inv.local_coideal(Z2, 0) == {0, 1}
    assert inv.local_coideal(LZ2, 0) == {0}
    assert inv.local_coideal(S2, 1) == {1}


def test_viable_examples():
    assert inv.viable_idempotents(LZ2) == set()
    assert inv.viable_idempotents(Z2) == {0}
    assert not inv.is_viable_semigroup(LZ2)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_commutative_semigroups_are_viable(n):
    for S in all_of_order(n, commutative=True):
        assert inv.viable_idempotents(S) == inv.idempotents(S)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_two_viability_definitions_agree(n):
    for S in all_of_order(n):
        assert inv.viable_idempotents(S) == inv.viable_idempotents_by_products(S)


def test_reflection_examples():
    R = inv.semilattice_reflection(S2)
    assert R.reflection == S2 and R.projection.image == (0, 1)
    assert inv.semilattice_reflection(Z2).reflection.order == 1
    assert inv.semilattice_reflection(LZ2).reflection.order == 1
    assert inv.semilattice_reflection(chain(4)).reflection.order == 4


@settings(max_examples=100)
@given(semigroups())
def test_reflection_is_semilattice_quotient(S):
    R = inv.semilattice_reflection(S)
    assert inv.is_semilattice(R.reflection)
    assert R.projection.is_homomorphism() and R.projection.is_surjective()


def test_roots_examples():
    assert inv.roots(S2, {1}, 2) == {1}
    assert inv.roots(Z2, {0}, 2) == {0, 1}
    assert inv.roots_all(M21, {1}) == {0, 1}
    assert inv.roots_all(Z3, {1}) == {1, 2}
    with pytest.raises(ValueError):
        inv.roots(Z2, {0}, 0)


def test_exponent_examples():
    assert inv.exponent_of(S2) == 1
    assert inv.exponent_of(Z2) == 2
    assert inv.exponent_of(kernel.direct_product(Z3, Z2)) == 6
    assert inv.exponent_by_search(kernel.direct_product(Z3, Z2)) == 6


def test_exponent_can_undercut_lcm_of_elementwise_powers():
    # x has minimal idempotent power 2, the group elements need 3; n = 3 serves both
    S = kernel.direct_product(M21, Z3)
    per_element = lcm(*(inv.monogenic_data(S, x).idempotent_power for x in S.elements))
    assert per_element == 6
    assert inv.exponent_of(S) == inv.exponent_by_search(S) == 3


@settings(max_examples=200)
@given(semigroups())
def test_exponent_matches_search(S):
    n = inv.exponent_of(S)
    E = inv.idempotents(S)
    assert n == inv.exponent_by_search(S)
    assert all(S.power(x, n) in E for x in S.elements)


@pytest.mark.parametrize("n", [1, 2, 3, 6])
def test_cyclic_group_exponent(n):
    assert inv.exponent_of(cyclic_group(n)) == n


def test_structure_report_shape():
    r = inv.structure_report(Z3)
    assert r["idempotents"] == [0] and r["exponent"] == 3
    assert r["viable_idempotents"] == [0] and r["reflection"]["order"] == 1
    assert r["maximal_subgroup_orders"] == {"0": 3}
