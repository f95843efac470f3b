"""Null sequences, blowups and the admissible sets Z_{p,q}.

A blowup at position s of (n_1, ..., n_k) inserts a 1 after n_s and raises
both neighbours by one; it is strict when s >= 1.  Null sequences are the
sequences reachable from (0) by strict blowups.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

from .arith import InvalidInput, LensSpace, NegCF, neg_cf, riemenschneider_dual

NullSequence = tuple[int, ...]
ZERO: NullSequence = (0,)


class _Empty:
    """Marker for the filling of the empty chain (the 4-ball)."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self) -> str:
        return "EMPTY"

    def __reduce__(self):
        return (_Empty, ())


EMPTY = _Empty()

MAX_LENGTH_ENV = "LENSFILL_MAX_NULL_LENGTH"
DEFAULT_MAX_LENGTH = 14


class ResourceLimit(RuntimeError):
    pass


def max_enumeration_length() -> int:
    return int(os.environ.get(MAX_LENGTH_ENV, DEFAULT_MAX_LENGTH))


def blowup(s: Sequence[int], pos: int) -> NullSequence:
    s = list(s)
    k = len(s)
    if not 0 <= pos <= k:
        raise InvalidInput(f"blowup position {pos} out of range 0..{k}")
    if pos > 0:
        s[pos - 1] += 1
    if pos < k:
        s[pos] += 1
    return tuple(s[:pos] + [1] + s[pos:])


def blowdowns(s: Sequence[int]) -> list[NullSequence]:
    """All strict blowdowns of ``s`` (inverse blowups at positions >= 1)."""
    s = tuple(s)
    if s == (1, 1):
        return [ZERO]
    out = []
    k = len(s)
    for j in range(1, k):
        if s[j] != 1:
            continue
        t = list(s)
        t[j - 1] -= 1
        if j + 1 < k:
            t[j + 1] -= 1
        del t[j]
        if min(t) >= 1:
            out.append(tuple(t))
    return out


@lru_cache(maxsize=None)
def _is_null(s: NullSequence) -> bool:
    if s == ZERO:
        return True
    if len(s) < 2 or min(s) < 1:
        return False
    return any(_is_null(t) for t in blowdowns(s))


def is_null(s: Sequence[int]) -> bool:
    """Exhaustive search over every order of strict blowdowns."""
    return _is_null(tuple(s))


def is_null_greedy(s: Sequence[int]) -> bool:
    """Blow down the first available 1 each time (valid only if blowdown is confluent)."""
    s = tuple(s)
    while s != ZERO:
        if len(s) < 2 or min(s) < 1:
            return False
        options = blowdowns(s)
        if not options:
            return False
        s = options[0]
    return True


def is_null_cf(s: Sequence[int]) -> bool:
    """Continued-fraction test: all partial denominators positive and value zero.

    Evaluates [n_1, ..., n_k] from the right; every tail must be positive and
    the full value must vanish.  Used as an independent oracle.
    """
    s = tuple(s)
    if s == ZERO:
        return True
    if len(s) < 2 or min(s) < 1:
        return False
    num, den = s[-1], 1
    for n in reversed(s[:-1]):
        if num <= 0:
            return False
        num, den = n * num - den, num
    return num == 0


def reverse(s: Sequence[int]) -> NullSequence:
    return tuple(reversed(tuple(s)))


def canonical(s: NullSequence, symmetric: bool) -> NullSequence:
    return min(s, reverse(s)) if symmetric else s


def enumerate_null(m: int, bound: Sequence[int] | None = None) -> set[NullSequence]:
    """All null sequences of length m, by breadth-first strict blowups of (0)."""
    if m < 1:
        raise InvalidInput("length must be at least 1")
    if m > max_enumeration_length():
        raise ResourceLimit(f"length {m} exceeds the limit {max_enumeration_length()} (set {MAX_LENGTH_ENV})")
    level = {ZERO}
    for _ in range(m - 1):
        level = {blowup(s, i) for s in level for i in range(1, len(s) + 1)}
    if bound is not None:
        b = tuple(bound)
        if len(b) != m:
            raise InvalidInput("bound must have length m")
        level = {s for s in level if all(x <= y for x, y in zip(s, b))}
    return level


def bounded_null_search(bound: Sequence[int]) -> set[NullSequence]:
    """Oracle: filter every sequence 0 <= n <= bound with the blowdown search."""
    b = tuple(bound)
    return {s for s in product(*(range(x + 1) for x in b)) if is_null(s)}


def bounded_null(bound: Sequence[int], budget: int | None = None) -> frozenset[NullSequence]:
    """Null sequences n <= bound with deficit sum(bound - n) <= budget.

    Each sequence is peeled at its rightmost 1 (an index j >= 1 past which all
    entries are at least 2).  Undoing that blowup leaves a null sequence bounded
    by ``bound`` with j removed and its neighbours lowered, whose own rightmost
    1 sits at index j or earlier; the deficit spent at j is ``bound[j] - 1``.
    Exactness of this canonical order is checked against the order-free
    search in the test suite.
    """
    b = tuple(bound)
    if budget is None:
        budget = sum(b)
    return _bounded_null(b, budget, len(b) - 1)


@lru_cache(maxsize=200_000)
def _bounded_null(bound: tuple[int, ...], budget: int, limit: int) -> frozenset[NullSequence]:
    m = len(bound)
    if m == 1:
        return frozenset([ZERO]) if bound[0] <= budget else frozenset()
    # entry sums of null sequences of length m lie in [2m - 2, 3m - 3]
    if sum(bound) - budget > 3 * (m - 1) or sum(bound) < 2 * m - 2:
        return frozenset()
    out = set()
    # entries right of the peeled 1 are >= 2, so their bounds must be too
    j = m - 1
    while j >= 1 and (j + 1 >= m or bound[j + 1] >= 2):
        if j <= limit and 1 <= bound[j] <= budget + 1:
            sub = list(bound)
            sub[j - 1] -= 1
            if j + 1 < m:
                sub[j + 1] -= 1
            del sub[j]
            if min(sub) >= (0 if m == 2 else 1):
                for s in _bounded_null(tuple(sub), budget - bound[j] + 1, j):
                    out.add(blowup(s, j))
        j -= 1
    return frozenset(out)


@dataclass(frozen=True)
class AdmissibleSet:
    lens: LensSpace
    dual: NegCF
    sequences: frozenset[NullSequence]


def admissible_sequences(cf: Sequence[int], max_b2: int | None = None) -> frozenset[NullSequence]:
    """Z for the lens space of ``cf``, optionally only members with b2 <= max_b2."""
    dual = riemenschneider_dual(cf)
    # sum(b - n) = b2 + 1 <= length(cf) + 1 for every member
    budget = len(cf) + 1 if max_b2 is None else min(len(cf), max_b2) + 1
    return bounded_null(dual, budget)


def admissible_set(p: int, q: int) -> AdmissibleSet:
    cf = neg_cf(p, q)
    return AdmissibleSet(LensSpace(p, q), riemenschneider_dual(cf), admissible_sequences(cf))


def fuse(n, a: int, m) -> NullSequence:
    """Null sequence of the filling glued from W_n and W_m along a component framed -a."""
    if a < 2:
        raise InvalidInput(f"fusion coefficient must be >= 2, got {a}")
    n_empty, m_empty = n is EMPTY, m is EMPTY
    if a == 2:
        if n_empty and m_empty:
            return ZERO
        if n_empty:
            return tuple(m)
        if m_empty:
            return tuple(n)
        return tuple(n[:-1]) + (n[-1] + m[0],) + tuple(m[1:])
    left = (1,) if n_empty else tuple(n[:-1]) + (n[-1] + 1,)
    right = (1,) if m_empty else (m[0] + 1,) + tuple(m[1:])
    return left + (2,) * (a - 3) + right


def rational_ball_sequence(p: int, q: int) -> NullSequence | None:
    """The unique null sequence n <= dual with a single deficit-one slot, if any.

    Such a sequence has exactly one entry 1, sitting where the dual has a 2,
    and agrees with the dual elsewhere.  It is grown from (2,1,2) by blowups
    immediately left or right of the 1, so we peel those off in reverse.
    """
    b = riemenschneider_dual(neg_cf(p, q))
    found = None
    for i in range(1, len(b) - 1):
        if b[i] != 2:
            continue
        n = list(b)
        n[i] = 1
        if _peels_to_base(n, i):
            if found is not None:
                raise AssertionError(f"two rational-ball sequences for L({p},{q})")
            found = tuple(n)
    return found


def _peels_to_base(n: list[int], i: int) -> bool:
    n = list(n)
    while len(n) > 3:
        if i == 0 or i == len(n) - 1:
            return False
        left, right = n[i - 1], n[i + 1]
        if right == 2 and left >= 3:
            # undo a blowup to the left of the 1
            del n[i + 1]
            n[i - 1] -= 1
        elif left == 2 and right >= 3:
            del n[i - 1]
            i -= 1
            n[i + 1] -= 1
        else:
            return False
    return n == [2, 1, 2]


def is_square_ball_lens(p: int, q: int) -> bool:
    """True iff L(p, q) is equivalent to L(m^2, mh - 1) with gcd(h, m) = 1."""
    from math import gcd, isqrt

    from .arith import lens_equivalent

    m = isqrt(p)
    if m * m != p or m < 2:
        return False
    target = LensSpace(p, q)
    return any(
        gcd(h, m) == 1 and lens_equivalent(target, LensSpace(p, m * h - 1))
        for h in range(1, m)
    )
