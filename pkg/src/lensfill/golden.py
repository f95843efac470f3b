"""Golden filling-count tables and the harness that checks the engine against them.

Line format (``#`` starts a comment; blank lines ignored)::

    p/q | descriptor | count | seqs

``p/q`` names the lens space; rotation numbers refer to the chain of ``p/q``.
``descriptor`` is ``ut`` or a comma-separated rotation pattern whose
coordinates are an integer, ``*`` (anything) or ``!0`` (nonzero).  A lone
``*`` matches every structure.  Patterns match up to global sign and only
virtually overtwisted structures; within one lens space the first matching
line owns a structure.

``count`` is the expected number of fillings.  ``3 (stated 2)`` records an
entry where the tabulated source value disagrees with the gluing-map
classification; the first number is checked and the disagreement is
reported.  ``seqs`` (optional) lists the expected sequences, e.g.
``(1,2,1) (2,1,2)``, compared after reversal canonicalisation.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources

from .arith import InvalidInput, neg_cf, parse_fraction, reversal_symmetric
from .chains import Chain, enumerate_structures, is_universally_tight, rotation_vector
from .fillings import fillings_of_chain, ut_fillings
from .nullseq import canonical

TABLES = ("cor5", "3component")

Pattern = tuple  # of int | "*" | "!0"

_COUNT = re.compile(r"^(\d+)(?:\s*\(stated\s+(\d+)\))?$")
_SEQ = re.compile(r"\(([\d,\s]*)\)")


@dataclass(frozen=True)
class Entry:
    table: str
    line: int
    p: int
    q: int
    ut: bool
    pattern: Pattern | None
    count: int
    stated: int | None = None
    seqs: frozenset | None = None
    comment: str = ""

    @property
    def descriptor(self) -> str:
        if self.ut:
            return "ut"
        return ",".join(str(x) for x in self.pattern)


@dataclass
class EntryResult:
    entry: Entry
    ok: bool
    observed: dict = field(default_factory=dict)  # rotation vector or "ut" -> count
    detail: str = ""

    def line(self) -> str:
        e = self.entry
        tag = "PASS" if self.ok else "FAIL"
        note = f" (source states {e.stated})" if e.stated is not None else ""
        text = f"{tag} {e.table}:{e.line} L({e.p},{e.q}) {e.descriptor} -> {e.count}{note}"
        if self.detail:
            text += f"  [{self.detail}]"
        return text


def _parse_pattern(text: str) -> Pattern:
    if text == "*":
        return ("*",)
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if tok in ("*", "!0"):
            out.append(tok)
        else:
            out.append(int(tok))
    return tuple(out)


def parse_table(text: str, name: str = "<table>") -> list[Entry]:
    entries = []
    comment = ""
    for lineno, raw in enumerate(text.splitlines(), 1):
        body, _, note = raw.partition("#")
        if not body.strip():
            if note.strip():
                comment = note.strip()
            continue
        fields = [f.strip() for f in body.split("|")]
        if len(fields) < 3:
            raise InvalidInput(f"{name}:{lineno}: expected 'p/q | descriptor | count'")
        p, q = parse_fraction(fields[0])
        try:
            neg_cf(p, q)
        except InvalidInput as exc:
            raise InvalidInput(f"{name}:{lineno}: {exc}") from None
        m = _COUNT.match(fields[2])
        if not m:
            raise InvalidInput(f"{name}:{lineno}: bad count {fields[2]!r}")
        seqs = None
        if len(fields) > 3 and fields[3]:
            seqs = frozenset(
                tuple(int(x) for x in s.split(",")) for s in _SEQ.findall(fields[3])
            )
        ut = fields[1] == "ut"
        entries.append(
            Entry(
                table=name,
                line=lineno,
                p=p,
                q=q,
                ut=ut,
                pattern=None if ut else _parse_pattern(fields[1]),
                count=int(m.group(1)),
                stated=int(m.group(2)) if m.group(2) else None,
                seqs=seqs,
                comment=note.strip() or comment,
            )
        )
    return entries


def load_table(name: str) -> list[Entry]:
    if name not in TABLES:
        raise InvalidInput(f"unknown table {name!r}; choose from {', '.join(TABLES)}")
    text = resources.files("lensfill").joinpath("data", f"{name}.txt").read_text()
    return parse_table(text, name)


def _coord_matches(pat, r: int) -> bool:
    if pat == "*":
        return True
    if pat == "!0":
        return r != 0
    return pat == r


def matches(pattern: Pattern, rot: tuple[int, ...]) -> bool:
    if pattern == ("*",):
        return True
    if len(pattern) != len(rot):
        return False
    return any(
        all(_coord_matches(a, s * r) for a, r in zip(pattern, rot)) for s in (1, -1)
    )


def _canon_set(seqs, p: int, q: int) -> frozenset:
    sym = reversal_symmetric(p, q)
    return frozenset(canonical(tuple(s), sym) for s in seqs)


def _assign(entries: list[Entry]) -> dict[Entry, list[Chain]]:
    """Hand every virtually overtwisted structure to its first matching line."""
    owned: dict[Entry, list[Chain]] = {e: [] for e in entries if not e.ut}
    by_lens: dict[tuple[int, int], list[Entry]] = {}
    for e in entries:
        if not e.ut:
            by_lens.setdefault((e.p, e.q), []).append(e)
    for (p, q), rules in by_lens.items():
        for c in enumerate_structures(p, q):
            if is_universally_tight(c):
                continue
            rot = rotation_vector(c)
            for e in rules:
                if matches(e.pattern, rot):
                    owned[e].append(c)
                    break
    return owned


def check(entries: list[Entry]) -> list[EntryResult]:
    owned = _assign(entries)
    results = []
    for e in entries:
        if e.ut:
            fs = ut_fillings(e.p, e.q)
            n = len(fs.members)
            ok = n == e.count
            detail = "" if ok else f"observed {n}"
            if e.seqs is not None:
                got = _canon_set(fs.sequences, e.p, e.q)
                want = _canon_set(e.seqs, e.p, e.q)
                if got != want:
                    ok = False
                    detail = f"sequences {sorted(got)} != {sorted(want)}"
            results.append(EntryResult(e, ok, {"ut": n}, detail))
            continue
        chains = owned[e]
        observed = {rotation_vector(c): len(fillings_of_chain(c).members) for c in chains}
        bad = {r: n for r, n in observed.items() if n != e.count}
        if not chains:
            results.append(EntryResult(e, False, {}, "matches no structure"))
        elif bad:
            shown = ", ".join(f"{r}:{n}" for r, n in sorted(bad.items()))
            results.append(EntryResult(e, False, observed, f"mismatch {shown}"))
        else:
            results.append(EntryResult(e, True, observed, f"{len(chains)} structures"))
    return results


def verify(tables: list[str]) -> list[EntryResult]:
    if not tables:
        raise InvalidInput("no tables selected")
    results: list[EntryResult] = []
    for name in tables:
        results.extend(check(load_table(name)))
    return results

