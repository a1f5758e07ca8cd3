import json

import pytest
from hypothesis import given, settings

from lazytour.multidegrees import compositions, multidegree
from lazytour.parking import (NotColumnRestrictedError, ParkingFunction, cpf_set, dominance,
                              is_column_restricted, parking_functions, r_map, tau, tau_inverse)
from lazytour.tournament import pi_lazy
from lazytour.trees import enumerate_trees, parse_tree

from oracles import brute_cpf
from strategies import random_trees

EXAMPLE = "(a,b,(((2,3),4),(c,1)))"


def pf(text):
    return ParkingFunction.from_text(text)


def test_text_format():
    p = pf("3;-;1;2,4")
    assert p.columns == ((3,), (), (1,), (2, 4))
    assert p.heights == (1, 0, 1, 2)
    assert p.to_text() == "3;-;1;2,4"
    assert json.loads(p.to_json()) == [[3], [], [1], [2, 4]]
    assert pf("").n == 0
    assert p.column_of(4) == 4


@pytest.mark.parametrize("text", ["1,2,3;-;-", "2,1;-", "1,2;-;3", "1;1", "x"])
def test_rejects_non_parking_functions(text):
    with pytest.raises(ValueError):
        pf(text)


def test_dominance():
    p = pf("3;-;1;2,4")
    assert dominance(p) == {3: 2, 1: 0, 2: 0, 4: 0}
    assert is_column_restricted(p)
    q = pf("2;-;1;3,4")
    assert dominance(q)[2] == 2
    assert not is_column_restricted(q)


@pytest.mark.parametrize("n", range(1, 7))
def test_parking_function_count(n):
    assert sum(1 for _ in parking_functions(n)) == (n + 1) ** (n - 1)


@pytest.mark.parametrize("n", range(1, 6))
def test_cpf_sets_match_brute_force(n):
    for k in compositions(n):
        assert {p.columns for p in cpf_set(k)} == brute_cpf(k)


@pytest.mark.parametrize("n", range(1, 7))
def test_cpf_counts_are_multidegrees(n):
    for k in compositions(n):
        assert sum(1 for _ in cpf_set(k)) == multidegree(k)


def test_tau_example():
    assert tau(parse_tree(EXAMPLE)).to_text() == "3;-;1;2,4"
    assert tau_inverse(pf("3;-;1;2,4")) == parse_tree(EXAMPLE)


def test_tau_inverse_rejects_unrestricted():
    with pytest.raises(NotColumnRestrictedError):
        tau_inverse(pf("2;-;1;3,4"))


@pytest.mark.parametrize("n", range(0, 7))
def test_tau_is_a_bijection(n):
    images = {}
    for t in enumerate_trees(n, True):
        p = tau(t)
        assert is_column_restricted(p)
        assert tau_inverse(p) == t
        images[p] = t
    every = {p for k in compositions(n) for p in cpf_set(k)}
    assert set(images) == every


@pytest.mark.parametrize("n", range(1, 7))
def test_square_commutes(n):
    for t in enumerate_trees(n, True):
        assert r_map(tau(t)) == tau(pi_lazy(t)[0])


def test_r_map():
    assert r_map(pf("3;-;1;2,4")).to_text() == "2;-;1,3"
    assert r_map(pf("1")).n == 0
    with pytest.raises(ValueError):
        r_map(pf(""))


@pytest.mark.parametrize("n", range(1, 7))
def test_r_preserves_restriction_when_car_one_is_undominated(n):
    for p in parking_functions(n):
        if dominance(p)[1] == 0:
            assert is_column_restricted(p) == is_column_restricted(r_map(p))


@given(random_trees(min_n=1, max_n=10, ab_adjacent=True))
@settings(max_examples=150, deadline=None)
def test_tau_roundtrip_on_large_trees(t):
    p = tau(t)
    assert is_column_restricted(p)
    assert tau_inverse(p) == t
