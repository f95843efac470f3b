"""Chains of framed Legendrian unknots and the combinatorics of their structures.

Component i has framing ``-a`` and ``a - 2`` stabilizations, ``pos`` of them
positive.  Indices in this module are 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import prod
from typing import Iterable, Sequence

from .arith import InvalidInput, LensSpace, NegCF, neg_cf, validate_cf


@dataclass(frozen=True, order=True)
class ChainComponent:
    a: int
    pos: int = 0
    neg: int = 0

    def __post_init__(self) -> None:
        if self.a < 2 or self.pos < 0 or self.neg < 0 or self.pos + self.neg != self.a - 2:
            raise InvalidInput(f"bad component a={self.a} pos={self.pos} neg={self.neg}")

    @property
    def rotation(self) -> int:
        return self.pos - self.neg

    @property
    def doubly(self) -> bool:
        return self.pos > 0 and self.neg > 0

    @property
    def sign(self) -> int:
        """+1 or -1 for a singly-signed stabilized component, 0 otherwise."""
        if self.doubly or self.a == 2:
            return 0
        return 1 if self.pos else -1

    def mirror(self) -> "ChainComponent":
        return ChainComponent(self.a, self.neg, self.pos)

    def __str__(self) -> str:
        return str(self.a) if self.a == 2 else f"{self.a}({self.pos}+,{self.neg}-)"


Chain = tuple[ChainComponent, ...]

# maximal Thurston-Bennequin unknot, framing -2
UNKNOT = ChainComponent(2)


def make_chain(components: Iterable[ChainComponent | tuple[int, int, int]]) -> Chain:
    out = tuple(c if isinstance(c, ChainComponent) else ChainComponent(*c) for c in components)
    return out


def chain_cf(c: Chain) -> NegCF:
    return tuple(x.a for x in c)


def chain_lens(c: Chain) -> LensSpace:
    return LensSpace.from_cf(chain_cf(c))


def chain_from_rotations(cf: Sequence[int], rot: Sequence[int]) -> Chain:
    cf = validate_cf(cf)
    if len(rot) != len(cf):
        raise InvalidInput(f"expected {len(cf)} rotation numbers, got {len(rot)}")
    comps = []
    for a, r in zip(cf, rot):
        if abs(r) > a - 2 or (r - a) % 2:
            raise InvalidInput(f"rotation {r} impossible on a component with a={a}")
        comps.append(ChainComponent(a, (a - 2 + r) // 2, (a - 2 - r) // 2))
    return tuple(comps)


def ut_chain(cf: Sequence[int]) -> Chain:
    """The all-positive (universally tight) structure on ``cf``."""
    return tuple(ChainComponent(a, a - 2, 0) for a in validate_cf(cf))


def structures_of_cf(cf: Sequence[int]) -> list[Chain]:
    cf = validate_cf(cf)
    options = [[ChainComponent(a, k, a - 2 - k) for k in range(a - 1)] for a in cf]
    return [tuple(c) for c in product(*options)]


def enumerate_structures(p: int, q: int) -> list[Chain]:
    return structures_of_cf(neg_cf(p, q))


def structure_count(p: int, q: int) -> int:
    return prod(a - 1 for a in neg_cf(p, q))


def rotation_vector(c: Chain) -> tuple[int, ...]:
    return tuple(x.rotation for x in c)


def mirror(c: Chain) -> Chain:
    return tuple(x.mirror() for x in c)


def is_universally_tight(c: Chain) -> bool:
    signs = set()
    for x in c:
        if x.pos:
            signs.add(1)
        if x.neg:
            signs.add(-1)
    return len(signs) <= 1


@dataclass(frozen=True)
class StructureClassification:
    doubly_stabilized: frozenset[int]
    inconsistent_subchains: tuple[tuple[int, int], ...]  # closed intervals
    S: frozenset[int]
    maximal_collections: tuple[frozenset[int], ...] = field(default=())


def inconsistent_subchains(c: Chain) -> list[tuple[int, int]]:
    """Closed intervals of ``c`` minus D with opposite-sign ends and bare interior."""
    out = []
    last = None  # index of the previous singly-signed component in the current run
    for i, x in enumerate(c):
        if x.doubly:
            last = None
            continue
        if x.sign == 0:
            continue
        if last is not None and c[last].sign != x.sign:
            out.append((last, i))
        last = i
    return out


def _maximal_collections(intervals: list[tuple[int, int]]) -> list[frozenset[int]]:
    # intervals are sorted and meet only at shared endpoints
    results: list[frozenset[int]] = []

    def search(k: int, chosen: tuple[int, ...]) -> None:
        if k == len(intervals):
            results.append(frozenset(chosen))
            return
        lo, hi = intervals[k]
        hit = [i for i in chosen if lo <= i <= hi]
        if len(hit) > 1:
            return
        if hit:
            search(k + 1, chosen)
            return
        for i in range(lo, hi + 1):
            # an element shared with the next interval must be counted there too
            search(k + 1, chosen + (i,))

    search(0, ())
    valid = []
    for m in results:
        if all(sum(lo <= i <= hi for i in m) == 1 for lo, hi in intervals):
            valid.append(m)
    return sorted(set(valid), key=sorted)


def classify(c: Chain) -> StructureClassification:
    D = frozenset(i for i, x in enumerate(c) if x.doubly)
    intervals = inconsistent_subchains(c)
    S = frozenset(i for lo, hi in intervals for i in range(lo, hi + 1))
    return StructureClassification(D, tuple(intervals), S, tuple(_maximal_collections(intervals)))


def euler_lower_bound(c: Chain) -> int:
    cl = classify(c)
    l = len(cl.inconsistent_subchains)
    return 1 + len(cl.doubly_stabilized) + (l + 1) // 2


def format_chain(c: Chain) -> str:
    return "[" + ",".join(str(x) for x in c) + "]"
