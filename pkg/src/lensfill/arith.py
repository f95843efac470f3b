"""Exact slopes, negative continued fractions and lens-space normalization.

A negative continued fraction ``[a1, ..., an]`` with every ``ai >= 2`` stands
for ``a1 - 1/(a2 - 1/(... - 1/an))``.  Coefficients are stored positive: the
chain framing ``-ai`` is represented by ``ai``.  The empty expansion is the
empty chain, whose lens space is S^3.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from fractions import Fraction
from math import gcd
from typing import Sequence

NegCF = tuple[int, ...]


class InvalidInput(ValueError):
    """Raised when arguments violate an operation's preconditions."""


@total_ordering
@dataclass(frozen=True)
class Rational:
    """A reduced fraction ``num/den`` with ``den >= 0``; ``1/0`` is infinity."""

    num: int
    den: int

    def __post_init__(self) -> None:
        n, d = self.num, self.den
        if n == 0 and d == 0:
            raise InvalidInput("0/0 is not a slope")
        if d == 0:
            n = 1
        else:
            g = gcd(n, d)
            n, d = n // g, d // g
            if d < 0:
                n, d = -n, -d
        object.__setattr__(self, "num", n)
        object.__setattr__(self, "den", d)

    @classmethod
    def of(cls, x: "Rational | Fraction | int") -> "Rational":
        if isinstance(x, Rational):
            return x
        f = Fraction(x)
        return cls(f.numerator, f.denominator)

    @property
    def is_infinite(self) -> bool:
        return self.den == 0

    def __lt__(self, other: "Rational") -> bool:
        # by value, infinity above every finite slope
        if not isinstance(other, Rational):
            return NotImplemented
        if self.is_infinite or other.is_infinite:
            return other.is_infinite and not self.is_infinite
        return self.num * other.den < other.num * self.den

    def fraction(self) -> Fraction:
        if self.is_infinite:
            raise InvalidInput("infinite slope has no finite value")
        return Fraction(self.num, self.den)

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"


INFINITY = Rational(1, 0)


@dataclass(frozen=True)
class LensSpace:
    """L(p, q) with ``0 < q < p`` and ``gcd(p, q) = 1``; ``p = 1`` is S^3."""

    p: int
    q: int

    def __post_init__(self) -> None:
        p, q = self.p, self.q
        if p < 1:
            raise InvalidInput(f"p must be positive, got {p}")
        if p == 1:
            object.__setattr__(self, "q", 0)
            return
        q %= p
        if q == 0 or gcd(p, q) != 1:
            raise InvalidInput(f"L({p},{self.q}) needs gcd(p, q) = 1")
        object.__setattr__(self, "q", q)

    @classmethod
    def from_cf(cls, cf: Sequence[int]) -> "LensSpace":
        if not cf:
            return cls(1, 0)
        v = cf_value(cf)
        return cls(v.num, v.den)

    @property
    def cf(self) -> NegCF:
        return () if self.p == 1 else neg_cf(self.p, self.q)

    def __str__(self) -> str:
        return "S^3" if self.p == 1 else f"L({self.p},{self.q})"


def _check_pq(p: int, q: int) -> None:
    if q <= 0 or p <= q:
        raise InvalidInput(f"p must exceed q >= 1, got p={p}, q={q}")
    if gcd(p, q) != 1:
        raise InvalidInput(f"need gcd(p, q) = 1, got p={p}, q={q}")


def neg_cf(p: int, q: int) -> NegCF:
    """Expansion of ``p/q > 1`` by ceiling-division Euclidean steps."""
    _check_pq(p, q)
    out = []
    while q:
        a = -(-p // q)
        out.append(a)
        p, q = q, a * q - p
    return tuple(out)


def cf_value(cf: Sequence[int]) -> Rational:
    """Evaluate ``[a1, ..., an]``; the empty expansion evaluates to ``1/0``."""
    num, den = 1, 0
    for a in reversed(cf):
        num, den = a * num - den, num
    return Rational(num, den)


def validate_cf(cf: Sequence[int]) -> NegCF:
    cf = tuple(int(a) for a in cf)
    if any(a < 2 for a in cf):
        raise InvalidInput(f"coefficients must be >= 2, got {list(cf)}")
    return cf


def riemenschneider_dual(cf: Sequence[int]) -> NegCF:
    """Expansion of ``p/(p-q)`` read off the point diagram of ``cf``.

    Row j holds ``a_j - 1`` dots and starts below the last dot of row j-1;
    column i then holds ``b_i - 1`` dots.
    """
    cf = validate_cf(cf)
    if not cf:
        raise InvalidInput("the empty expansion has no dual")
    columns = [0]
    for a in cf:
        # the first dot of this row shares a column with the previous row's last
        columns[-1] += 1
        columns.extend([1] * (a - 2))
    return tuple(c + 1 for c in columns)


def length(p: int, q: int) -> int:
    return len(neg_cf(p, q))


def lens_equivalent(a: LensSpace, b: LensSpace) -> bool:
    if a.p != b.p:
        return False
    if a.p == 1:
        return True
    return (a.q - b.q) % a.p == 0 or (a.q * b.q - 1) % a.p == 0


def reversal_symmetric(p: int, q: int) -> bool:
    return (q * q - 1) % p == 0


def parse_fraction(text: str) -> tuple[int, int]:
    """Parse ``"p/q"`` (or a bare integer) into a pair of ints."""
    s = text.strip()
    head, sep, tail = s.partition("/")
    try:
        p = int(head)
        q = int(tail) if sep else 1
    except ValueError:
        bad = next((i for i, ch in enumerate(s) if ch not in "-+0123456789/ "), len(s))
        raise InvalidInput(f"cannot parse {text!r} as p/q (position {bad})") from None
    return p, q


def parse_cf(text: str) -> NegCF:
    """Parse a bracket list such as ``"[5,2,4,3]"``."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise InvalidInput(f"expected a bracket list, got {text!r}")
    body = s[1:-1].strip()
    if not body:
        return ()
    try:
        return validate_cf(int(x) for x in body.split(","))
    except ValueError:
        raise InvalidInput(f"cannot parse {text!r} as a list of integers") from None
