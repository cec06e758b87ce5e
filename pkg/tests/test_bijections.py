import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import D, fixture_json, pi
from parmon.bijections import (
    EMPTY,
    SetPartitionTableau,
    bh_forward,
    bh_inverse,
    bh_to_hr,
    diagram_rsk,
    diagram_rsk_inverse,
    diagram_to_pair,
    enumerate_spt,
    hr_to_bh,
    hr_to_tableau,
    lastletter_compare,
    pair_to_diagram,
    schensted_insert,
    tableau_to_hr,
)
from parmon.bratteli import dimension_decomposition, enumerate_vt, vertices_at
from parmon.diagram import bell, enumerate_diagrams, propagation_number
from parmon.errors import InvalidTableau

E = ()


def spt(*rows):
    return SetPartitionTableau.from_rows(rows)


def test_lastletter_order():
    assert lastletter_compare({1, 3}, {2}) == 1
    assert lastletter_compare({2}, {1, 3}) == -1
    assert lastletter_compare({1, 2}, {2}) == 0
    assert lastletter_compare(EMPTY, {1}) == -1


def test_schensted_insert_bumps_leftmost_larger():
    t = spt([[], [1], [3]])
    assert schensted_insert(t, {2}) == spt([[], [1], [2]], [[3]])
    assert schensted_insert(t, {4}) == spt([[], [1], [3], [4]])
    assert schensted_insert(spt([[], [2]]), {1, 3}) == spt([[], [2], [1, 3]])


def test_hr_to_bh_examples():
    assert hr_to_bh([E] * 5, 4) == ((4,), (3,), (4,), (3,), (4,))
    assert hr_to_bh([E, E, (1,), (1,), (2,)], 4) == ((4,), (3,), (3, 1), (2, 1), (2, 2))
    assert bh_to_hr(((4,), (3,), (3, 1), (2, 1), (2, 2))) == (E, E, (1,), (1,), (2,))
    with pytest.raises(InvalidTableau):
        hr_to_bh([E, E, (1,), (1,), (2,)], 2)
    with pytest.raises(InvalidTableau):
        bh_to_hr(((4,), (4,), (4,)))


def test_bh_examples():
    b = ((4,), (3,), (4,), (3,), (4,))
    assert bh_inverse(b) == spt([[], [], [], [1, 2]])
    assert bh_forward(spt([[], [], [], [1, 2]])) == b
    assert bh_forward(spt([[], [], [1], [2]])) == ((4,), (3,), (3, 1), (3,), (4,))


def test_bh_rejects_bad_input():
    with pytest.raises(InvalidTableau):
        bh_inverse(((4,), (3,)))
    with pytest.raises(InvalidTableau):
        spt([[1]], [[]]).validate()


def test_fixture_bh_pairs():
    for item in fixture_json("k2_bh.json")["pairs"]:
        t = SetPartitionTableau.from_json(item["tableau"])
        b = tuple(tuple(x) for x in item["bh"])
        h = tuple(tuple(x) for x in item["hr"])
        assert bh_forward(t) == b
        assert bh_inverse(b) == t
        assert bh_to_hr(b) == h
        assert hr_to_bh(h, 4) == b


def test_fixture_rsk_pairs():
    for item in fixture_json("k2_rsk.json")["pairs"]:
        t1 = SetPartitionTableau.from_json(item["rsk1"])
        t2 = SetPartitionTableau.from_json(item["rsk2"])
        d = pi(item["diagram"])
        assert diagram_rsk(d) == (t1, t2)
        assert diagram_rsk_inverse(t1, t2) == d


def test_mixed_pair_inverse():
    t1 = diagram_rsk(pi(2))[0]
    t2 = diagram_rsk(pi(10))[1]
    assert diagram_rsk_inverse(t1, t2) == pi(1)


def test_rsk_shape_records_propagation():
    d = D(3, (1, -2), (2,), (3, -1, -3))
    t1, t2 = diagram_rsk(d)
    assert t1.shape == t2.shape
    assert t1.size == t2.size == 6
    assert sorted(x for c in t1.labels() for x in c) == [1, 2, 3]
    assert sorted(x for c in t2.labels() for x in c) == [1, 2, 3]
    assert len(t1.labels()) - propagation_number(d) == 1


@pytest.mark.parametrize("k", [1, 2, 3])
def test_rsk_round_trip(k):
    seen = set()
    for d in enumerate_diagrams(k):
        t1, t2 = diagram_rsk(d)
        assert t1.shape == t2.shape
        assert diagram_rsk_inverse(t1, t2) == d
        seen.add((t1, t2))
    assert len(seen) == bell(2 * k)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_pair_round_trip(k):
    pairs = set()
    for d in enumerate_diagrams(k):
        p, q = diagram_to_pair(d)
        assert p[-1] == q[-1]
        assert len(p) == 2 * k + 1
        assert pair_to_diagram(p, q, k) == d
        pairs.add((p, q))
    assert len(pairs) == bell(2 * k)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_hr_bh_round_trip_over_paths(k):
    for mu in vertices_at(2 * k):
        for p in enumerate_vt(k, mu):
            t = hr_to_tableau(p, k)
            assert t.size == 2 * k
            assert tableau_to_hr(t) == p
            assert bh_to_hr(hr_to_bh(p, 2 * k)) == p


@pytest.mark.parametrize("k", [1, 2, 3])
def test_spt_counts(k):
    tabs = enumerate_spt(k)
    by_shape: dict = {}
    for t in tabs:
        by_shape[t.shape] = by_shape.get(t.shape, 0) + 1
    assert sum(c * c for c in by_shape.values()) == bell(2 * k)
    dims = dimension_decomposition(k)
    assert sorted(by_shape.values()) == sorted(dims.values())
    assert {bh_forward(t) for t in tabs} == {hr_to_bh(p, 2 * k) for mu in dims for p in enumerate_vt(k, mu)}


def test_spt_single_row_count():
    # a single row holds every labelling of a set partition in increasing order
    assert sum(1 for t in enumerate_spt(3) if len(t.shape) == 1) == bell(3)
    assert len(enumerate_spt(1)) == 2
    assert sum(1 for t in enumerate_spt(3) if t.shape == (3, 1, 1, 1)) == 1


k4 = enumerate_diagrams(4)


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(k4))
def test_k4_round_trip(d):
    t1, t2 = diagram_rsk(d)
    assert diagram_rsk_inverse(t1, t2) == d
    p, q = diagram_to_pair(d)
    assert pair_to_diagram(p, q, 4) == d
