"""Farey graph paths and sign decorations describing tight structures.

The minimal path for L(p, q) runs counterclockwise from 0 to -p/q.  Walking it
backwards from -p/q, the last coefficient of the expansion is lowered by one
at each step (an entry that reaches 1 is absorbed into its predecessor) until
the value 0 is reached.  Every edge except the first and last is decorated,
and the decorated edges fall into one block per coefficient, block i holding
``a_i - 2`` edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .arith import INFINITY, InvalidInput, NegCF, Rational, cf_value, neg_cf, validate_cf
from .chains import Chain, chain_cf

Slope = Rational
BLANK, PLUS, MINUS = "", "+", "-"


def farey_sum(a: Slope, b: Slope) -> Slope:
    return Rational(a.num + b.num, a.den + b.den)


def det(a: Slope, b: Slope) -> int:
    return a.num * b.den - b.num * a.den


def is_edge(a: Slope, b: Slope) -> bool:
    return abs(det(a, b)) == 1


@dataclass(frozen=True)
class FareyPath:
    vertices: tuple[Slope, ...]

    def __post_init__(self) -> None:
        for u, v in zip(self.vertices, self.vertices[1:]):
            if not is_edge(u, v):
                raise InvalidInput(f"{u} and {v} are not joined by a Farey edge")

    @property
    def edges(self) -> int:
        return len(self.vertices) - 1


@dataclass(frozen=True)
class Block:
    start: int  # index of the first decorated edge of the block
    length: int
    down_step: int


@dataclass(frozen=True)
class DecoratedPath:
    path: FareyPath
    signs: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(self.signs) != self.path.edges:
            raise InvalidInput("one sign per edge required")
        if self.signs[0] != BLANK or self.signs[-1] != BLANK:
            raise InvalidInput("first and last edges must be blank")
        if any(s not in (PLUS, MINUS) for s in self.signs[1:-1]):
            raise InvalidInput("interior edges must carry a sign")


def _cf_vertex(entries: list[int]) -> Slope:
    v = cf_value(entries)
    return Rational(-v.num, v.den)


def minimal_path(p: int, q: int) -> FareyPath:
    entries = list(neg_cf(p, q))
    back = [_cf_vertex(entries)]
    while entries != [0]:
        entries[-1] -= 1
        while len(entries) > 1 and entries[-1] == 1:
            entries.pop()
            entries[-1] -= 1
        back.append(_cf_vertex(entries))
    return FareyPath(tuple(reversed(back)))


def path_endpoint_cf(path: FareyPath) -> NegCF:
    end = path.vertices[-1]
    if end.is_infinite or end.num >= 0:
        raise InvalidInput("path must end at a negative slope")
    return neg_cf(-end.num, end.den)


def blocks_of_cf(cf: Sequence[int]) -> list[Block]:
    """Block layout of the decorated edges of the minimal path of ``cf``.

    ``down_step`` is 1 plus the number of coefficients equal to 2 just before
    the block; those coefficients own no decorated edges.
    """
    cf = validate_cf(cf)
    blocks, start, twos = [], 1, 0
    for a in cf:
        blocks.append(Block(start, a - 2, 1 + twos))
        start += a - 2
        twos = twos + 1 if a == 2 else 0
    return blocks


def block_decomposition(path: FareyPath) -> list[Block]:
    cf = path_endpoint_cf(path)
    if path != minimal_path(*_pq(cf)):
        raise InvalidInput("path is not the minimal path to its endpoint")
    return blocks_of_cf(cf)


def _pq(cf: Sequence[int]) -> tuple[int, int]:
    v = cf_value(cf)
    return v.num, v.den


def block_jump_vertex(path: FareyPath, block: Block) -> Slope:
    """The vertex m with v_{j+1} = v_j + m inside a block (as lattice vectors)."""
    if block.length == 0:
        raise InvalidInput("empty block has no jump vertex")
    u, v = path.vertices[block.start], path.vertices[block.start + 1]
    return Rational(v.num - u.num, v.den - u.den)


def split_at(cf: Sequence[int], k: int) -> tuple[NegCF, NegCF]:
    """Remove the k-th coefficient (1-based)."""
    cf = tuple(cf)
    if not 1 <= k <= len(cf):
        raise InvalidInput(f"index {k} out of range for a chain of length {len(cf)}")
    return cf[: k - 1], cf[k:]


def chain_to_decorated_path(chain: Chain) -> DecoratedPath:
    cf = chain_cf(chain)
    path = minimal_path(*_pq(cf))
    signs = [BLANK]
    for comp in chain:
        signs.extend([PLUS] * comp.pos + [MINUS] * comp.neg)
    signs.append(BLANK)
    return DecoratedPath(path, tuple(signs))


def decorated_path_to_chain(dp: DecoratedPath) -> Chain:
    from .chains import ChainComponent

    cf = path_endpoint_cf(dp.path)
    out = []
    for a, b in zip(cf, blocks_of_cf(cf)):
        seg = dp.signs[b.start : b.start + b.length]
        out.append(ChainComponent(a, seg.count(PLUS), seg.count(MINUS)))
    return tuple(out)


def decoration_classes(p: int, q: int) -> int:
    """Count sign decorations of the minimal path up to per-block equivalence."""
    n = 1
    for b in blocks_of_cf(neg_cf(p, q)):
        n *= b.length + 1
    return n


__all__ = [
    "BLANK", "MINUS", "PLUS", "INFINITY", "Block", "DecoratedPath", "FareyPath", "Slope",
    "block_decomposition", "block_jump_vertex", "blocks_of_cf", "chain_to_decorated_path",
    "decorated_path_to_chain", "decoration_classes", "det", "farey_sum", "is_edge",
    "minimal_path", "path_endpoint_cf", "split_at",
]
