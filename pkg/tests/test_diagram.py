import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import D, fixture_json, pi
from parmon.diagram import (
    PartitionDiagram,
    bell,
    compose,
    enumerate_diagrams,
    identity,
    in_half_monoid,
    p_half,
    p_int,
    propagation_number,
    reverse,
    special_diagram,
)
from parmon.errors import OrderMismatch, ResourceLimit

k2 = enumerate_diagrams(2)
k3 = enumerate_diagrams(3)


def test_compose_examples():
    assert compose(pi(2), pi(10)) == (pi(1), 1)
    assert pi(2) == D(2, (1, 2, -2), (-1,))
    assert pi(10) == D(2, (2, -1, -2), (1,))
    assert compose(identity(3), identity(3)) == (identity(3), 0)
    assert compose(pi(7), pi(7)) == (pi(9), 0)


def test_compose_order_five():
    a = D(5, (1, 2, 4, 5, -4), (3, -2), (-1, -5), (-3,))
    b = D(5, (2, -5), (4, -3, -4), (1, -1, -2), (3,), (5,))
    assert compose(a, b) == (D(5, (3, -5), (1, 2, 4, 5, -3, -4), (-1, -2)), 1)


def test_compose_order_mismatch():
    with pytest.raises(OrderMismatch):
        compose(identity(2), identity(3))


def test_propagation_number():
    d = D(5, (-5, 4), (-4, 1, 2, 3), (-3, -1), (-2,), (5,))
    assert propagation_number(d) == 2
    assert propagation_number(identity(4)) == 4
    assert propagation_number(pi(15)) == 0


def test_enumeration_counts():
    assert len(enumerate_diagrams(1)) == 2
    assert len(k2) == 15
    assert len(k3) == 203
    assert len(set(k3)) == 203 == bell(6)
    assert [bell(m) for m in range(6)] == [1, 1, 2, 5, 15, 52]


def test_enumeration_k2_order_matches_list():
    data = fixture_json("k2_diagrams.json")["diagrams"]
    assert [PartitionDiagram.from_blocks(2, b) for b in data] == list(k2)
    assert k2[0] == D(2, (2, -1, -2, 1))
    assert k2[8] == identity(2)


def test_enumeration_limit():
    with pytest.raises(ResourceLimit):
        enumerate_diagrams(5)


def test_members_are_canonical():
    for d in k3:
        assert PartitionDiagram.from_blocks(3, d.blocks) == d
        assert d.blocks == PartitionDiagram.from_blocks(3, reversed(d.blocks)).blocks


def test_special_diagrams():
    assert p_int(1, 2) == D(2, (1,), (-1,), (2, -2))
    assert p_half(1, 2) == pi(1)
    assert reverse(2) == pi(7)
    assert special_diagram("p_int", 2, 1) == p_int(1, 2)
    with pytest.raises(IndexError):
        p_int(3, 2)
    with pytest.raises(IndexError):
        p_half(2, 2)


def test_in_half_monoid():
    assert in_half_monoid(identity(2))
    assert not in_half_monoid(pi(7))
    assert in_half_monoid(pi(11))


def test_associativity_k2():
    for a in k2:
        for b in k2:
            ab, l1 = compose(a, b)
            for c in k2:
                left, l2 = compose(ab, c)
                bc, l3 = compose(b, c)
                right, l4 = compose(a, bc)
                assert left == right
                assert l1 + l2 == l3 + l4


diagrams3 = st.sampled_from(k3)


@settings(max_examples=1000, deadline=None)
@given(diagrams3, diagrams3, diagrams3)
def test_associativity_k3(a, b, c):
    assert compose(compose(a, b).diagram, c).diagram == compose(a, compose(b, c).diagram).diagram


@settings(max_examples=300, deadline=None)
@given(diagrams3, diagrams3)
def test_identity_and_propagation_bound(a, b):
    one = identity(3)
    assert compose(one, a) == (a, 0) and compose(a, one) == (a, 0)
    d = compose(a, b).diagram
    assert propagation_number(d) <= min(propagation_number(a), propagation_number(b))
    if in_half_monoid(a) and in_half_monoid(b):
        assert in_half_monoid(d)
