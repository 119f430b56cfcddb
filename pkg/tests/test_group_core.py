from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pgx import build_group
from pgx.group_core import (
    GroupError,
    GroupTable,
    OrderCapError,
    are_isomorphic,
    center,
    check_associative,
    derived_and_frattini,
    element_order,
    find_isomorphisms,
    generated_subgroup,
    group_profile,
    is_homomorphism,
    is_normal,
    is_subgroup,
    prime_power,
    quotient,
)
from pgx.lattice import enumerate_subgroups

SMALL = ["C8", "C4 x C2", "C2^3", "D8", "Q8", "D16", "SD16", "Mod16", "C4:C4", "Heis(3)", "Mp3(3)", "C9 x C3", "Heis(5)"]


def test_prime_power():
    assert prime_power(1) == (1, 0)
    assert prime_power(81) == (3, 4)
    with pytest.raises(GroupError):
        prime_power(12)


def test_from_table_rejects_bad_tables():
    with pytest.raises(GroupError):
        GroupTable.from_table(np.array([[0, 1], [1, 1]]))  # row 1 is not a permutation
    with pytest.raises(GroupError):
        GroupTable.from_table(np.array([[1, 0], [0, 1]]))  # identity is not element 0
    z6 = np.add.outer(np.arange(6), np.arange(6)) % 6
    with pytest.raises(GroupError):
        GroupTable.from_table(z6)  # not a prime power


def test_non_associative_table_rejected():
    # a Latin square with identity 0 that is not associative (a loop of order 5)
    t = np.array(
        [
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0],
        ]
    )
    with pytest.raises(GroupError):
        check_associative(t)


def test_order_cap():
    with pytest.raises(OrderCapError):
        build_group("C2^12")


def test_element_order_examples():
    assert element_order(build_group("D8"), 0) == 1
    assert element_order(build_group("C8"), 1) == 8
    assert element_order(build_group("D8"), 1) == 4


def test_profiles():
    p = group_profile(build_group("C2^3"))
    assert p.exponent == 2 and p.is_elementary_abelian
    h = group_profile(build_group("Heis(3)"))
    assert h.exponent == 3 and not h.is_abelian
    d = group_profile(build_group("D8"))
    assert d.exponent == 4 and not d.is_abelian and d.order_census == {1: 1, 2: 5, 4: 2}


def test_center_derived_frattini():
    D8 = build_group("D8")
    assert center(D8).elements() == (0, 2)
    der, phi = derived_and_frattini(D8)
    assert der == phi == center(D8)
    assert center(build_group("Heis(3)")).order == 3
    assert center(build_group("C4 x C2")).order == 8
    der, phi = derived_and_frattini(build_group("C4"))
    assert der.order == 1 and phi.order == 2
    der, phi = derived_and_frattini(build_group("C2^3"))
    assert der.order == phi.order == 1


def test_normality():
    D8 = build_group("D8")
    assert not is_normal(D8, generated_subgroup(D8, [4]))
    assert is_normal(D8, center(D8))
    with pytest.raises(GroupError):
        is_normal(D8, D8.mask([0, 1]))  # not a subgroup


@pytest.mark.parametrize("spec", SMALL)
def test_characteristic_subgroups_are_normal(spec):
    G = build_group(spec)
    der, phi = derived_and_frattini(G)
    for H in (center(G), der, phi):
        assert is_subgroup(G, H) and is_normal(G, H)


@pytest.mark.parametrize("spec", SMALL)
def test_maximal_subgroups_are_normal(spec):
    G = build_group(spec)
    L = enumerate_subgroups(G)
    assert all(is_normal(G, H) for H in L.by_exponent[-2])


@pytest.mark.parametrize("spec", SMALL)
def test_inverse_has_same_order(spec):
    G = build_group(spec)
    assert np.array_equal(G.orders, G.orders[G.inverses])


def test_quotient_examples():
    C8 = build_group("C8")
    Q = quotient(C8, C8.mask([0, 4]))
    assert Q.order == 4 and group_profile(Q).is_cyclic
    D8 = build_group("D8")
    Q = quotient(D8, center(D8))
    assert Q.order == 4 and group_profile(Q).order_census == {1: 1, 2: 3}
    assert are_isomorphic(quotient(D8, D8.mask([0])), D8)


@pytest.mark.parametrize("spec", ["D8", "Q8", "Heis(3)", "C4:C4", "D8 x C2"])
def test_every_quotient_is_a_group_of_the_right_order(spec):
    G = build_group(spec)
    for N in enumerate_subgroups(G).masks():
        if is_normal(G, N):
            assert quotient(G, N, validate=True).order == G.order // N.order


def test_isomorphism_examples():
    V4, C4 = build_group("C2^2"), build_group("C4")
    assert find_isomorphisms(V4, C4) == []
    assert len(find_isomorphisms(V4, V4)) == 6
    assert find_isomorphisms(build_group("D8"), build_group("Q8")) == []
    assert len(find_isomorphisms(build_group("D8"), build_group("D8"))) == 8
    assert len(find_isomorphisms(build_group("Q8"), build_group("Q8"))) == 24


@pytest.mark.parametrize("spec", ["D8", "Q8", "C4 x C2", "Heis(3)", "SD16"])
def test_isomorphisms_are_homomorphisms(spec):
    G = build_group(spec)
    for f in find_isomorphisms(G, G):
        assert is_homomorphism(G, G, f) and sorted(f) == list(range(G.order))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(SMALL), st.sampled_from(SMALL))
def test_isomorphism_is_symmetric(a, b):
    A, B = build_group(a), build_group(b)
    assert bool(find_isomorphisms(A, B, first_only=True)) == bool(find_isomorphisms(B, A, first_only=True))


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(SMALL), st.randoms(use_true_random=False))
def test_isomorphism_survives_relabelling(spec, rnd):
    G = build_group(spec)
    perm = [0] + rnd.sample(range(1, G.order), G.order - 1)
    inv = np.argsort(perm)
    t = np.asarray(perm)[G.table[np.ix_(inv, inv)]]
    H = GroupTable.from_table(t, label="relabelled")
    f = find_isomorphisms(G, H, first_only=True)
    assert f and is_homomorphism(G, H, f[0])
