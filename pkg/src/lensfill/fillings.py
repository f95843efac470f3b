"""Minimal symplectic fillings of tight lens spaces as null sequences.

For the universally tight structure the fillings are indexed by the admissible
set Z_{p,q}.  For any other chain the fillings are the images of gluing maps:
cut the chain at the components of D union M (M a maximal collection), fill the
consistently stabilized pieces, and fuse the pieces back together.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Callable, Iterable, Sequence

from .arith import InvalidInput, LensSpace, NegCF, Rational, length, lens_equivalent, neg_cf, reversal_symmetric, riemenschneider_dual
from .chains import Chain, chain_cf, chain_lens, classify, is_universally_tight
from .homology import cokernel_order
from .nullseq import EMPTY, NullSequence, admissible_sequences, canonical, fuse, is_null, reverse


@dataclass(frozen=True, order=True)
class Filling:
    seq: NullSequence
    lens: LensSpace
    b2: int
    euler: int
    h1_order: int
    is_plumbing: bool
    is_rational_ball: bool

    def to_json(self) -> dict:
        return {
            "seq": list(self.seq),
            "b2": self.b2,
            "euler": self.euler,
            "h1": self.h1_order,
            "plumbing": self.is_plumbing,
            "rational_ball": self.is_rational_ball,
        }


@dataclass(frozen=True)
class FillingSet:
    lens: LensSpace
    members: tuple[Filling, ...]

    def __len__(self) -> int:
        return len(self.members)

    @property
    def sequences(self) -> frozenset[NullSequence]:
        return frozenset(f.seq for f in self.members)


def plumbing_sequence(m: int) -> NullSequence:
    return (0,) if m == 1 else (1,) + (2,) * (m - 2) + (1,)


def linking_presentation(seq: Sequence[int], dual: Sequence[int]) -> list[list[int]]:
    """Rows of Z^m, columns: the chain linking matrix, then e_i for each deficit slot."""
    m = len(seq)
    cols = []
    for j in range(m):
        col = [0] * m
        col[j] = seq[j]
        if j > 0:
            col[j - 1] = 1
        if j + 1 < m:
            col[j + 1] = 1
        cols.append(col)
    for i in range(m):
        if dual[i] > seq[i]:
            cols.append([int(k == i) for k in range(m)])
    return [list(r) for r in zip(*cols)]


def invariants(seq: Sequence[int], lens: LensSpace) -> Filling:
    seq = tuple(seq)
    dual = riemenschneider_dual(neg_cf(lens.p, lens.q))
    if len(seq) != len(dual) or any(n > b for n, b in zip(seq, dual)) or not is_null(seq):
        raise InvalidInput(f"{seq} is not admissible for {lens}")
    b2 = sum(dual) - sum(seq) - 1
    h1 = cokernel_order(linking_presentation(seq, dual))
    if h1 == 0:
        raise ArithmeticError(f"infinite first homology for {seq} on {lens}")
    return Filling(seq, lens, b2, b2 + 1, h1, seq == plumbing_sequence(len(dual)), b2 == 0)


def _filling_set(lens: LensSpace, seqs: Iterable[NullSequence]) -> FillingSet:
    sym = reversal_symmetric(lens.p, lens.q)
    reps = sorted({canonical(s, sym) for s in seqs})
    return FillingSet(lens, tuple(invariants(s, lens) for s in reps))


def ut_fillings(p: int, q: int, max_b2: int | None = None) -> FillingSet:
    lens = LensSpace(p, q)
    return _filling_set(lens, admissible_sequences(neg_cf(p, q), max_b2))


def max_filling(p: int, q: int) -> Filling:
    m = len(riemenschneider_dual(neg_cf(p, q)))
    return invariants(plumbing_sequence(m), LensSpace(p, q))


Pivot = Callable[[Sequence[int]], int]


def _first(idx: Sequence[int]) -> int:
    return idx[0]


@lru_cache(maxsize=None)
def _image(cf: NegCF, cuts: frozenset[int]) -> frozenset:
    return image(cf, cuts, _first)


def image(cf: Sequence[int], cuts: Iterable[int], pivot: Pivot = _first) -> frozenset:
    """Raw sequences in the image of the gluing map that cuts ``cf`` at ``cuts``.

    The pieces left after removing every cut must be filled as universally
    tight lens spaces; that is the caller's responsibility (see
    ``fillings_of_chain``).  ``pivot`` picks which cut to undo first.
    """
    cf = tuple(cf)
    cuts = sorted(cuts)
    if not cf:
        return frozenset([EMPTY])
    if not cuts:
        return admissible_sequences(cf)
    r = pivot(cuts)
    left = image(cf[:r], [i for i in cuts if i < r], pivot)
    right = image(cf[r + 1 :], [i - r - 1 for i in cuts if i > r], pivot)
    return frozenset(fuse(n, cf[r], m) for n in left for m in right)


def _check_leaves(c: Chain, cuts: frozenset[int]) -> None:
    start = 0
    for stop in sorted(cuts) + [len(c)]:
        piece = c[start:stop]
        if piece and not is_universally_tight(piece):
            raise RuntimeError(f"piece {start}..{stop - 1} of the chain is not consistently stabilized")
        start = stop + 1


def cut_sets(c: Chain) -> list[frozenset[int]]:
    cl = classify(c)
    return [cl.doubly_stabilized | m for m in cl.maximal_collections]


def raw_fillings_of_chain(c: Chain) -> frozenset[NullSequence]:
    cf = chain_cf(c)
    out: set[NullSequence] = set()
    for cuts in cut_sets(c):
        _check_leaves(c, cuts)
        out |= _image(cf, cuts)
    return frozenset(out)


def fillings_of_chain(c: Chain) -> FillingSet:
    return _filling_set(chain_lens(c), raw_fillings_of_chain(c))


def torus_knot_slopes(seq: Sequence[int], lens: LensSpace) -> list[Rational]:
    """Slopes h/m of the knots carrying the deficit 2-handles of a filling.

    The knot at slot i has order m = |P_{i-1}| in H_1(S^1 x S^2), where P_k
    is the numerator of [n_1, ..., n_k]; h is the matching denominator.  One
    slope is listed per 2-handle.
    """
    seq = tuple(seq)
    dual = riemenschneider_dual(neg_cf(lens.p, lens.q))
    slopes = []
    num, den, pnum, pden = 1, 0, 0, -1  # continuants for the empty prefix and its predecessor
    for i, n in enumerate(seq):
        slopes.extend([Rational(den, num)] * (dual[i] - n))
        num, den, pnum, pden = n * num - pnum, n * den - pden, num, den
    return slopes


def b2_one_pi1(sl1: Rational, sl2: Rational) -> int:
    return gcd(sl1.den, sl2.den)


def surgery_knot_family(p: int, q: int) -> str | None:
    """UNKNOT, TORUS(n,m) or SPORADIC(n) when L(p,q) is surgery on that knot."""
    lens = LensSpace(p, q)
    if lens_equivalent(lens, LensSpace(p, 1)):
        return "UNKNOT"
    for m in range(2, p):
        if (p - 1) % m:
            continue
        n = (p - 1) // m
        if n > m and gcd(n, m) == 1 and lens_equivalent(lens, LensSpace(p, m * m)):
            return f"TORUS({n},{m})"
    n = 1
    while 3 * n * n + 3 * n + 1 <= p:
        if 3 * n * n + 3 * n + 1 == p and lens_equivalent(lens, LensSpace(p, 3 * n + 1)):
            return f"SPORADIC({n})"
        n += 1
    return None
