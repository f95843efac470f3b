"""Stein cobordisms between tight lens spaces.

Moves implemented:

* ``ROLLED_UP_1/2/3`` - delete an unknot from the rolled-up diagram, read as
  rewrites of the continued fraction (and their mirror images).
* ``SUBCHAIN`` - re-merge a connected sum by surgery on the joining unknot.
* ``TORUS_FRAMED`` - surgery on a torus knot with contact framing one above
  the torus framing; the result is a connected sum of two lens spaces.
* ``TORUS_PLUS_ONE`` / ``TORUS_MINUS_ONE`` - surgery on a torus knot with
  contact framing two above (resp. equal to) the torus framing, acting on the
  lower meridian by a Dehn twist along the knot.

Slopes are ``num/den`` and the curve of slope ``b/a`` has coordinates
``(den, num) = (a, b)``.  A lens space L(p, q) has lower meridian vector
``(q, -p)``.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .arith import InvalidInput, LensSpace, NegCF, Rational, cf_value, lens_equivalent, neg_cf, validate_cf
from .chains import UNKNOT, Chain, ChainComponent, chain_cf, chain_lens
from .farey import blocks_of_cf, chain_to_decorated_path


class Verdict(enum.Enum):
    FORBIDDEN = "FORBIDDEN"
    RIGID = "RIGID"
    OPEN = "OPEN"


class MoveKind(enum.Enum):
    SUBCHAIN = "SUBCHAIN"
    ROLLED_UP_1 = "ROLLED_UP_1"
    ROLLED_UP_2 = "ROLLED_UP_2"
    ROLLED_UP_3 = "ROLLED_UP_3"
    TORUS_FRAMED = "TORUS_FRAMED"
    TORUS_PLUS_ONE = "TORUS_PLUS_ONE"
    TORUS_MINUS_ONE = "TORUS_MINUS_ONE"


@dataclass(frozen=True)
class CobordismMove:
    kind: MoveKind
    data: tuple = ()


@dataclass(frozen=True)
class CobordismPath:
    start: object
    steps: tuple[tuple[CobordismMove, object], ...] = field(default=())

    @property
    def end(self):
        return self.steps[-1][1] if self.steps else self.start


def _cf_len(lens: LensSpace) -> int:
    return len(lens.cf)


def length_obstruction(src: LensSpace, dst: LensSpace) -> Verdict:
    ls, ld = _cf_len(src), _cf_len(dst)
    if ld < ls:
        return Verdict.FORBIDDEN
    if ld == ls:
        # equal lengths force an h-cobordism, impossible between distinct spaces
        return Verdict.RIGID if lens_equivalent(src, dst) else Verdict.FORBIDDEN
    return Verdict.OPEN


# --- rolled-up diagrams -------------------------------------------------------


def rolled_up_framings(cf: Sequence[int]) -> list[int]:
    """Framings b_i = 2(i-1) - (a_1 + ... + a_i) of the rolled-up diagram (i from 1)."""
    out, total = [], 0
    for i, a in enumerate(cf):
        total += a
        out.append(2 * i - total)
    return out


def cf_from_rolled_up(framings: Sequence[int]) -> NegCF:
    out, prev = [], 0
    for i, b in enumerate(framings):
        # b_i - b_{i-1} = 2 - a_i, with b_0 taken as 0 and no +2 at i = 1
        out.append((prev - b) + (2 if i else 0))
        prev = b
    return tuple(out)


def normalize_cf(entries: Sequence[int]) -> NegCF:
    """Absorb entries equal to 1 using [.., x, 1, y, ..] = [.., x-1, y-1, ..]."""
    e = list(entries)
    changed = True
    while changed:
        changed = False
        for i, x in enumerate(e):
            if x == 1:
                if i > 0:
                    e[i - 1] -= 1
                if i + 1 < len(e):
                    e[i + 1] -= 1
                del e[i]
                changed = True
                break
    if any(x < 1 for x in e):
        raise InvalidInput(f"cannot normalize {list(entries)}")
    return tuple(e)


def _rolled_up_moves(cf: NegCF) -> list[tuple[MoveKind, tuple, NegCF]]:
    n = len(cf)
    moves = []
    for side, seq in (("left", cf), ("right", cf[::-1])):
        flip = (lambda t: t) if side == "left" else (lambda t: tuple(reversed(t)))
        if n >= 2:
            moves.append((MoveKind.ROLLED_UP_1, (side,), flip((seq[0] + seq[1] - 2,) + seq[2:])))
        moves.append((MoveKind.ROLLED_UP_2, (side,), flip(seq[1:])))
    for i, a in enumerate(cf):
        if a == 2:
            moves.append((MoveKind.ROLLED_UP_3, (i,), cf[:i] + cf[i + 1 :]))
    return [(k, d, normalize_cf(r)) for k, d, r in moves]


def rolled_up_predecessors(cf: Sequence[int]) -> set[NegCF]:
    cf = validate_cf(cf)
    if not cf:
        raise InvalidInput("S^3 has no rolled-up predecessors")
    return {r for _, _, r in _rolled_up_moves(cf)}


def _same_space(a: NegCF, b: NegCF) -> bool:
    return lens_equivalent(LensSpace.from_cf(a), LensSpace.from_cf(b))


def rolled_up_reachable(src: Sequence[int], dst: Sequence[int], depth: int) -> CobordismPath | None:
    """Shortest chain of rolled-up moves leading from ``src`` up to ``dst``.

    Searches the iterated predecessors of ``dst`` breadth-first.  Returns
    None if ``src`` is not found within ``depth`` moves.
    """
    src, dst = validate_cf(src), validate_cf(dst)
    if depth < 0:
        raise InvalidInput("depth must be non-negative")
    parent: dict[NegCF, tuple[NegCF, CobordismMove] | None] = {dst: None}
    frontier = deque([(dst, 0)])
    hit = dst if _same_space(src, dst) else None
    while frontier and hit is None:
        cur, d = frontier.popleft()
        if d == depth or not cur:
            continue
        for kind, data, pred in sorted(_rolled_up_moves(cur), key=lambda m: (m[0].value, m[1], m[2])):
            if pred in parent:
                continue
            parent[pred] = (cur, CobordismMove(kind, data))
            if _same_space(src, pred):
                hit = pred
                break
            frontier.append((pred, d + 1))
    if hit is None:
        return None
    steps = []
    node = hit
    while parent[node] is not None:
        nxt, move = parent[node]
        steps.append((move, LensSpace.from_cf(nxt)))
        node = nxt
    return CobordismPath(LensSpace.from_cf(hit), tuple(steps))


# --- torus-knot surgeries -----------------------------------------------------


def plus_one_matrix(a: int, b: int) -> tuple[tuple[int, int], tuple[int, int]]:
    """Negative Dehn twist along the (a, b) curve."""
    return ((1 - a * b, a * a), (-b * b, 1 + a * b))


def minus_one_matrix(a: int, b: int) -> tuple[tuple[int, int], tuple[int, int]]:
    """The matrix printed for the framing-equal surgery, in its raw (a, b) form.

    With ``(a, b)`` taken from a slope ``b/a`` the twist is along the swapped
    curve, so :func:`torus_minus_one` feeds it ``(num, den)`` instead; then
    ``minus_one_matrix(num, den)`` inverts ``plus_one_matrix(den, num)``.
    """
    return ((1 + a * b, -b * b), (a * a, 1 - a * b))


def _apply(m, v):
    return (m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1])


def _lens_from_meridian(c: int, d: int) -> LensSpace:
    # lower meridian d/c = -p'/q'
    p = abs(d)
    if p == 1:
        return LensSpace(1, 0)
    if p == 0:
        raise InvalidInput("meridian became the torus fibre slope")
    sign = 1 if d > 0 else -1
    return LensSpace(p, (-c * sign) % p)


def torus_plus_one(lens: LensSpace, slope: Rational) -> LensSpace:
    a, b = slope.den, slope.num
    if a * b == 0:
        raise InvalidInput("slope must be finite and nonzero")
    return _lens_from_meridian(*_apply(plus_one_matrix(a, b), (lens.q, -lens.p)))


def torus_minus_one(lens: LensSpace, slope: Rational) -> LensSpace:
    if slope.is_infinite or not (-lens.p * slope.den < lens.q * slope.num < 0):
        raise InvalidInput(f"slope {slope} must lie strictly between -{lens.p}/{lens.q} and 0")
    return _lens_from_meridian(*_apply(minus_one_matrix(slope.num, slope.den), (lens.q, -lens.p)))


def balanced_windows(c: Chain, half: int) -> list[tuple[int, int, Rational]]:
    """(component, offset, central slope) for every balanced window of 2*half edges.

    Signs inside a block can be reordered freely, so any window of the block's
    decorated edges can be made balanced when the component carries at least
    ``half`` stabilizations of each sign.
    """
    dp = chain_to_decorated_path(c)
    out = []
    for i, (comp, blk) in enumerate(zip(c, blocks_of_cf(chain_cf(c)))):
        if comp.pos < half or comp.neg < half:
            continue
        for t in range(blk.length - 2 * half + 1):
            out.append((i, t, dp.path.vertices[blk.start + t + half]))
    return out


def torus_plus_one_chain(c: Chain, i: int, offset: int = 0) -> Chain:
    """Transport the structure of ``c`` through a TORUS_PLUS_ONE move.

    The balanced window of four edges at ``offset`` in block ``i`` is cut out
    of the decorated path; the part between the window and -p/q is carried by
    the Dehn twist, keeping its signs.
    """
    from .farey import BLANK, DecoratedPath, FareyPath, decorated_path_to_chain

    comp = c[i]
    if comp.pos < 2 or comp.neg < 2:
        raise InvalidInput(f"component {i} is not stabilized twice each way")
    blk = blocks_of_cf(chain_cf(c))[i]
    if not 0 <= offset <= blk.length - 4:
        raise InvalidInput("window does not fit in the block")
    dp = chain_to_decorated_path(c)
    # lay the window's signs out as + + - - after `offset` other signs
    rest = [s for s in dp.signs[blk.start : blk.start + blk.length]]
    rest.remove("+"), rest.remove("+"), rest.remove("-"), rest.remove("-")
    block_signs = rest[:offset] + ["+", "+", "-", "-"] + rest[offset:]
    signs = list(dp.signs[: blk.start]) + block_signs + list(dp.signs[blk.start + blk.length :])
    w0 = blk.start + offset
    centre = dp.path.vertices[w0 + 2]
    m = plus_one_matrix(centre.den, centre.num)
    verts = list(dp.path.vertices[: w0 + 1])
    for v in dp.path.vertices[w0 + 5 :]:
        x, y = _apply(m, (v.den, v.num))
        verts.append(Rational(y, x))
    new_signs = signs[:w0] + signs[w0 + 4 :]
    if new_signs:
        new_signs[0], new_signs[-1] = BLANK, BLANK
    return decorated_path_to_chain(DecoratedPath(FareyPath(tuple(verts)), tuple(new_signs)))


def torus_framed_split(c: Chain, i: int, offset: int = 0) -> tuple[Chain, Chain]:
    """Split ``c`` along the torus knot of a (+, -) window in block ``i``.

    The window of two edges sits after ``offset`` of the block's other signs
    (laid out + before -).  The first summand is the chain before component i
    closed off by a component carrying the ``offset`` leading signs; the
    second starts with the remaining signs of component i.  With offset 0 the
    first summand ends in a maximal unknot and the second starts with
    component i destabilized once each way.
    """
    comp = c[i]
    if comp.pos < 1 or comp.neg < 1:
        raise InvalidInput(f"component {i} is not stabilized both ways")
    rest = ["+"] * (comp.pos - 1) + ["-"] * (comp.neg - 1)
    if not 0 <= offset <= len(rest):
        raise InvalidInput("window does not fit in the block")
    head, tail = rest[:offset], rest[offset:]
    left = c[:i] + (ChainComponent(offset + 2, head.count("+"), head.count("-")),)
    right = (ChainComponent(len(tail) + 2, tail.count("+"), tail.count("-")),) + c[i + 1 :]
    return left, right


def merge(left: Chain, right: Chain, joiner: ChainComponent = UNKNOT) -> Chain:
    """Connected sum followed by surgery on the unknot joining the two chains."""
    return left + (joiner,) + right


def makenice(c: Chain) -> CobordismPath:
    steps = []
    cur = tuple(c)
    while True:
        i = next((k for k, x in enumerate(cur) if x.doubly), None)
        if i is None:
            break
        left, right = torus_framed_split(cur, i)
        steps.append((CobordismMove(MoveKind.TORUS_FRAMED, (i,)), (left, right)))
        cur = merge(left, right)
        steps.append((CobordismMove(MoveKind.SUBCHAIN, (i + 1,)), cur))
    return CobordismPath(tuple(c), tuple(steps))


def search(src: LensSpace, dst: LensSpace, depth: int, chain: Chain | None = None) -> CobordismPath | None:
    """Look for a cobordism path from ``src`` to ``dst``.

    Tries rolled-up moves first; if a structure on ``src`` is given, also
    tries TORUS_PLUS_ONE moves (breadth-first over chains) followed by
    rolled-up moves.
    """
    direct = rolled_up_reachable(src.cf, dst.cf, depth)
    if direct is not None:
        return direct
    if chain is None:
        return None
    frontier = deque([(tuple(chain), ())])
    seen = {tuple(chain)}
    while frontier:
        cur, steps = frontier.popleft()
        if len(steps) >= depth:
            continue
        for i, t, slope in balanced_windows(cur, 2):
            nxt = torus_plus_one_chain(cur, i, t)
            new_steps = steps + ((CobordismMove(MoveKind.TORUS_PLUS_ONE, (i, t, str(slope))), nxt),)
            tail = rolled_up_reachable(chain_cf(nxt), dst.cf, depth - len(new_steps))
            if tail is not None:
                return CobordismPath(tuple(chain), new_steps + tail.steps)
            if nxt not in seen:
                seen.add(nxt)
                frontier.append((nxt, new_steps))
    return None
