from math import prod

import pytest
from hypothesis import given, strategies as st

from lensfill.arith import InvalidInput, neg_cf
from lensfill.chains import (
    ChainComponent,
    chain_cf,
    chain_from_rotations,
    chain_lens,
    classify,
    enumerate_structures,
    euler_lower_bound,
    format_chain,
    inconsistent_subchains,
    is_universally_tight,
    make_chain,
    mirror,
    rotation_vector,
    structure_count,
    structures_of_cf,
    ut_chain,
)

cfs = st.lists(st.integers(2, 6), min_size=1, max_size=5).map(tuple)


def test_component_validation():
    with pytest.raises(InvalidInput):
        ChainComponent(4, 1, 0)
    with pytest.raises(InvalidInput):
        ChainComponent(1)
    c = ChainComponent(6, 2, 2)
    assert c.rotation == 0 and c.doubly and c.sign == 0
    assert str(c) == "6(2+,2-)"


def test_rotation_vector_validation():
    with pytest.raises(InvalidInput):
        chain_from_rotations((3, 3), (1,))
    with pytest.raises(InvalidInput):
        chain_from_rotations((4,), (1,))  # parity
    with pytest.raises(InvalidInput):
        chain_from_rotations((4,), (4,))  # magnitude
    assert rotation_vector(chain_from_rotations((5, 2, 4), (-1, 0, 2))) == (-1, 0, 2)


@given(cfs)
def test_structures_count_and_are_distinct(cf):
    ss = structures_of_cf(cf)
    assert len(ss) == prod(a - 1 for a in cf)
    assert len(set(ss)) == len(ss)
    assert sum(is_universally_tight(c) for c in ss) == (1 if all(a == 2 for a in cf) else 2)


def test_structure_count_of_8_3():
    # 8/3 = [3,3]; [3,2,2] is 7/3
    assert neg_cf(8, 3) == (3, 3)
    assert structure_count(8, 3) == 4
    assert neg_cf(7, 3) == (3, 2, 2)
    assert structure_count(7, 3) == 2


@given(cfs)
def test_mirror_is_an_involution(cf):
    for c in structures_of_cf(cf):
        m = mirror(c)
        assert mirror(m) == c
        assert rotation_vector(m) == tuple(-r for r in rotation_vector(c))
        assert classify(m).maximal_collections == classify(c).maximal_collections


def test_ut_chain_is_positive():
    c = ut_chain((3, 2, 5))
    assert rotation_vector(c) == (1, 0, 3)
    assert chain_cf(c) == (3, 2, 5)
    assert chain_lens(c).p == 22
    assert format_chain(c) == "[3(1+,0-),2,5(3+,0-)]"


def test_overlapping_inconsistent_subchains():
    # signs + . . - + . -: intervals share L4 and L5
    c = make_chain([(3, 1, 0), (2, 0, 0), (2, 0, 0), (3, 0, 1), (3, 1, 0), (2, 0, 0), (3, 0, 1)])
    cl = classify(c)
    assert cl.inconsistent_subchains == ((0, 3), (3, 4), (4, 6))
    assert cl.S == frozenset(range(7))
    ms = set(cl.maximal_collections)
    assert ms == {frozenset(s) for s in ({3, 5}, {3, 6}, {0, 4}, {1, 4}, {2, 4})}
    assert all(len(m) == 2 for m in ms)
    assert euler_lower_bound(c) == 1 + 0 + 2


def test_doubly_stabilized_components_break_runs():
    c = chain_from_rotations((3, 6, 3), (1, 0, -1))
    cl = classify(c)
    assert cl.doubly_stabilized == frozenset({1})
    assert inconsistent_subchains(c) == []
    assert cl.maximal_collections == (frozenset(),)


def test_example_chain_57_22():
    c = chain_from_rotations((3, 3, 2, 5), (1, 1, 0, -3))
    cl = classify(c)
    assert cl.inconsistent_subchains == ((1, 3),)
    assert set(cl.maximal_collections) == {frozenset({1}), frozenset({2}), frozenset({3})}


@given(cfs)
def test_maximal_collections_hit_every_interval_once(cf):
    for c in structures_of_cf(cf):
        cl = classify(c)
        assert cl.maximal_collections
        for m in cl.maximal_collections:
            assert m <= cl.S
            for lo, hi in cl.inconsistent_subchains:
                assert sum(lo <= i <= hi for i in m) == 1
            # every piece left over is consistently stabilized
            cuts = sorted(cl.doubly_stabilized | m)
            start = 0
            for stop in cuts + [len(c)]:
                assert is_universally_tight(c[start:stop])
                start = stop + 1


def test_enumerate_structures_matches_expansion():
    assert {chain_cf(c) for c in enumerate_structures(84, 19)} == {(5, 2, 4, 3)}
