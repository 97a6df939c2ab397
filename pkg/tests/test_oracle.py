import pytest
from hypothesis import given, strategies as st

from guessability.oracle import (
    FinitePrefix,
    QueryBeyondLimit,
    SequenceOracle,
    SequenceSpecError,
    agrees_through,
    from_spec,
    prefix_of,
    prefix_spec,
    zero_pad,
)

entry_lists = st.lists(st.integers(0, 40), max_size=12)


def test_query_identity_rule():
    assert from_spec("id").query(2) == 2


def test_query_constant_rule():
    assert from_spec("const:7").query(10) == 7


def test_query_zero_padded_prefix():
    assert zero_pad(FinitePrefix((3, 0, 2))).query(5) == 0


def test_zero_pad_agrees_then_zero():
    o = zero_pad(FinitePrefix((3, 0, 2)))
    assert [o.query(i) for i in range(6)] == [3, 0, 2, 0, 0, 0]


def test_zero_pad_empty_prefix_is_all_zeros():
    o = zero_pad(FinitePrefix(()))
    assert [o.query(i) for i in range(4)] == [0, 0, 0, 0]


def test_zero_pad_single_entry():
    o = zero_pad(FinitePrefix((5,)))
    assert o.query(0) == 5
    assert o.query(1) == 0


def test_prefix_of_identity():
    assert prefix_of(from_spec("id"), 3) == FinitePrefix((0, 1, 2, 3))


def test_prefix_of_constant():
    assert prefix_of(from_spec("const:7"), 0) == FinitePrefix((7,))


def test_prefix_of_zero_padded():
    assert prefix_of(zero_pad(FinitePrefix((3, 0, 2))), 4) == FinitePrefix((3, 0, 2, 0, 0))


def test_agrees_through_examples():
    ident = from_spec("id")
    padded = zero_pad(FinitePrefix((0, 1, 2)))
    zeros = from_spec("const:0")
    assert agrees_through(ident, padded, 2)
    assert agrees_through(from_spec("id"), zeros, 0)
    assert not agrees_through(from_spec("id"), from_spec("const:0"), 1)


@given(entry_lists)
def test_zero_pad_round_trips_through_prefix_of(entries):
    prefix = FinitePrefix(tuple(entries))
    if len(prefix) == 0:
        return
    assert prefix_of(zero_pad(prefix), len(prefix) - 1) == prefix


@given(entry_lists, st.integers(0, 50))
def test_repeated_queries_agree(entries, index):
    o = zero_pad(FinitePrefix(tuple(entries)))
    assert o.query(index) == o.query(index)


def test_memo_pins_a_misbehaving_rule():
    calls = {"n": 0}

    def shifty(i):
        calls["n"] += 1
        return calls["n"]

    o = SequenceOracle(shifty)
    first = o.query(3)
    assert o.query(3) == first
    assert calls["n"] == 1


def test_log_tracks_queried_indices():
    o = from_spec("id")
    log = o.begin_session()
    o.query(4)
    o.query(1)
    assert log.queried == {1, 4}
    assert log.max_queried == 4


def test_fresh_session_resets_the_log():
    o = from_spec("id")
    o.query(9)
    log = o.begin_session()
    assert log.queried == set()
    assert log.max_queried is None


def test_capped_session_raises_past_the_limit():
    o = zero_pad(FinitePrefix((3, 0, 2)))
    o.begin_session(limit=2)
    o.query(2)
    with pytest.raises(QueryBeyondLimit) as err:
        o.query(3)
    assert err.value.index == 3


def test_negative_values_rejected():
    with pytest.raises(ValueError):
        FinitePrefix((1, -2))
    o = SequenceOracle(lambda i: -1)
    with pytest.raises(ValueError):
        o.query(0)
    with pytest.raises(ValueError):
        from_spec("id").query(-1)


def test_prefix_indexing():
    p = FinitePrefix((4, 5, 6))
    assert len(p) == 3
    assert p[1] == 5
    assert list(p) == [4, 5, 6]
    assert p.last_index == 2
    assert p.extended(9) == FinitePrefix((4, 5, 6, 9))


def test_from_spec_plantzero():
    o = from_spec("plantzero:5")
    assert [o.query(i) for i in range(7)] == [1, 1, 1, 1, 1, 0, 1]


def test_from_spec_cycle():
    o = from_spec("cycle:[3,1]")
    assert [o.query(i) for i in range(5)] == [3, 1, 3, 1, 3]


def test_from_spec_prefix_empty():
    assert from_spec("prefix:[]:pad0").query(0) == 0


def test_prefix_spec_round_trip():
    p = FinitePrefix((3, 0, 2))
    assert prefix_spec(p) == "prefix:[3,0,2]:pad0"
    assert prefix_of(from_spec(prefix_spec(p)), 2) == p


@pytest.mark.parametrize("bad", ["", "idd", "const:", "cycle:[]", "prefix:[1,]:pad0",
                                 "prefix:[1 ,2]:pad0", "plantzero:x"])
def test_from_spec_rejects_malformed(bad):
    with pytest.raises(SequenceSpecError):
        from_spec(bad)
