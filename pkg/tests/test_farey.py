from collections import deque
from math import gcd

import pytest
from hypothesis import given, strategies as st

from lensfill.arith import InvalidInput, Rational, neg_cf
from lensfill.chains import chain_from_rotations, enumerate_structures, structure_count
from lensfill.farey import (
    BLANK,
    DecoratedPath,
    FareyPath,
    block_decomposition,
    block_jump_vertex,
    blocks_of_cf,
    chain_to_decorated_path,
    decorated_path_to_chain,
    decoration_classes,
    farey_sum,
    is_edge,
    minimal_path,
    path_endpoint_cf,
    split_at,
)


def bfs_path(p, q):
    """Shortest decreasing Farey path from 0 to -p/q through slopes with den <= q."""
    verts = sorted(
        {Rational(-n, d) for d in range(1, q + 1) for n in range(0, p * d // q + 1) if gcd(n, d) == 1},
        reverse=True,
    )
    start, goal = Rational(0, 1), Rational(-p, q)
    prev = {start: None}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        if u == goal:
            break
        for v in verts:
            if v < u and v not in prev and is_edge(u, v) and v >= goal:
                prev[v] = u
                queue.append(v)
    out = [goal]
    while prev[out[-1]] is not None:
        out.append(prev[out[-1]])
    return tuple(reversed(out))


PAIRS = [(p, q) for p in range(2, 26) for q in range(1, p) if gcd(p, q) == 1]


@pytest.mark.parametrize("p,q", PAIRS)
def test_minimal_path_is_the_shortest_decreasing_path(p, q):
    path = minimal_path(p, q)
    assert path.vertices[0] == Rational(0, 1)
    assert path.vertices[-1] == Rational(-p, q)
    assert len(path.vertices) == len(bfs_path(p, q))
    assert list(path.vertices) == sorted(path.vertices, reverse=True)


def test_minimal_path_example():
    assert [str(v) for v in minimal_path(7, 3).vertices] == ["0/1", "-1/1", "-2/1", "-7/3"]


@pytest.mark.parametrize("p,q", PAIRS)
def test_blocks_recover_the_expansion(p, q):
    cf = neg_cf(p, q)
    path = minimal_path(p, q)
    assert path_endpoint_cf(path) == cf
    blocks = blocks_of_cf(cf)
    assert [b.length for b in blocks] == [a - 2 for a in cf]
    assert block_decomposition(path) == blocks
    # decorated edges exclude the first and last edge
    assert sum(b.length for b in blocks) == path.edges - 2


@pytest.mark.parametrize("p,q", [(84, 19), (57, 22), (155, 42)])
def test_jump_vertex_is_constant_across_a_block(p, q):
    path = minimal_path(p, q)
    for b in blocks_of_cf(neg_cf(p, q)):
        if b.length == 0:
            with pytest.raises(InvalidInput):
                block_jump_vertex(path, b)
            continue
        m = block_jump_vertex(path, b)
        for j in range(b.start, b.start + b.length):
            u, v = path.vertices[j], path.vertices[j + 1]
            assert Rational(v.num - u.num, v.den - u.den) == m
        assert is_edge(path.vertices[b.start], m)


def test_farey_sum_and_edges():
    assert farey_sum(Rational(0, 1), Rational(-1, 1)) == Rational(-1, 2)
    assert is_edge(Rational(-1, 2), Rational(-1, 1))
    with pytest.raises(InvalidInput):
        FareyPath((Rational(0, 1), Rational(-2, 1)))


def test_decorated_path_needs_blank_ends():
    path = minimal_path(4, 1)
    with pytest.raises(InvalidInput):
        DecoratedPath(path, ("+", "+", "+"))


@pytest.mark.parametrize("p,q", [(p, q) for p, q in PAIRS if p <= 20])
def test_chain_path_round_trip(p, q):
    for c in enumerate_structures(p, q):
        dp = chain_to_decorated_path(c)
        assert dp.signs[0] == BLANK and dp.signs[-1] == BLANK
        assert decorated_path_to_chain(dp) == c
    assert decoration_classes(p, q) == structure_count(p, q)


def test_decorated_path_of_l61_rotation_zero():
    dp = chain_to_decorated_path(chain_from_rotations((6,), (0,)))
    assert [str(v) for v in dp.path.vertices] == ["0/1", "-1/1", "-2/1", "-3/1", "-4/1", "-5/1", "-6/1"]
    assert sorted(dp.signs[1:-1]) == ["+", "+", "-", "-"]


@given(st.lists(st.integers(2, 6), min_size=2, max_size=6), st.data())
def test_split_partitions_the_expansion(cf, data):
    k = data.draw(st.integers(1, len(cf)))
    left, right = split_at(cf, k)
    assert left + (cf[k - 1],) + right == tuple(cf)
