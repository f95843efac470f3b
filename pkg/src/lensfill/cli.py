"""Command-line front end: ``lensfill <command> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .arith import InvalidInput, LensSpace, length, neg_cf, parse_cf, parse_fraction, riemenschneider_dual
from .chains import Chain, chain_from_rotations, format_chain, is_universally_tight, rotation_vector, ut_chain
from .cobordism import CobordismPath, Verdict, length_obstruction, search
from .farey import chain_to_decorated_path, minimal_path
from .fillings import FillingSet, fillings_of_chain, ut_fillings
from .golden import TABLES, verify


def parse_lens(text: str) -> LensSpace:
    """Accept ``p/q`` or a bracket expansion ``[a1,...,an]``."""
    if text.strip().startswith("["):
        cf = parse_cf(text)
        if not cf:
            raise InvalidInput("empty expansion")
        return LensSpace.from_cf(cf)
    p, q = parse_fraction(text)
    neg_cf(p, q)  # validates p > q >= 1 and coprimality
    return LensSpace(p, q)


def parse_rot(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise InvalidInput(f"cannot parse rotation vector {text!r}") from None


def _bracket(xs: Sequence[int]) -> str:
    return "[" + ",".join(str(x) for x in xs) + "]"


def _emit(obj, as_json: bool, text: str) -> None:
    if as_json:
        print(json.dumps(obj, sort_keys=True))
    else:
        print(text)


# --- commands -----------------------------------------------------------------


def cmd_cf(args) -> int:
    cf = parse_lens(args.lens).cf
    _emit({"cf": list(cf)}, args.json, _bracket(cf))
    return 0


def cmd_dual(args) -> int:
    dual = riemenschneider_dual(parse_lens(args.lens).cf)
    _emit({"dual": list(dual)}, args.json, _bracket(dual))
    return 0


def cmd_path(args) -> int:
    lens = parse_lens(args.lens)
    if args.rot is not None:
        dp = chain_to_decorated_path(chain_from_rotations(lens.cf, parse_rot(args.rot)))
        verts = [str(v) for v in dp.path.vertices]
        signs = list(dp.signs)
        text = verts[0] + "".join(f" -{s or '.'}- {v}" for s, v in zip(signs, verts[1:]))
        _emit({"vertices": verts, "signs": signs}, args.json, text)
    else:
        verts = [str(v) for v in minimal_path(lens.p, lens.q).vertices]
        _emit({"vertices": verts}, args.json, " -> ".join(verts))
    return 0


def _structure(lens: LensSpace, rot: str | None) -> Chain:
    if rot is None:
        return ut_chain(lens.cf)
    return chain_from_rotations(lens.cf, parse_rot(rot))


def fillings_document(lens: LensSpace, chain: Chain, fs: FillingSet) -> dict:
    members = sorted(fs.members, key=lambda f: f.seq)
    return {
        "lens": {"p": lens.p, "q": lens.q},
        "structure": {"rot": list(rotation_vector(chain)), "universally_tight": is_universally_tight(chain)},
        "fillings": [f.to_json() for f in members],
        "count": len(members),
    }


def cmd_fillings(args) -> int:
    lens = parse_lens(args.lens)
    chain = _structure(lens, None if args.ut else args.rot)
    fs = ut_fillings(lens.p, lens.q) if is_universally_tight(chain) else fillings_of_chain(chain)
    doc = fillings_document(lens, chain, fs)
    lines = [f"{lens} chain {format_chain(chain)}: {doc['count']} filling(s)"]
    for f in doc["fillings"]:
        tags = [t for t in ("plumbing", "rational_ball") if f[t]]
        lines.append(f"  {_bracket(f['seq'])} b2={f['b2']} euler={f['euler']} h1={f['h1']} {' '.join(tags)}".rstrip())
    _emit(doc, args.json, "\n".join(lines))
    return 0


def _tables(text: str) -> list[str]:
    names = [t for t in (s.strip() for s in text.split(",")) if t]
    if not names:
        raise InvalidInput("no tables selected")
    out: list[str] = []
    for n in names:
        for t in TABLES if n == "all" else (n,):
            if t not in TABLES:
                raise InvalidInput(f"unknown table {t!r}; choose from {', '.join(TABLES)}, all")
            if t not in out:
                out.append(t)
    return out


def cmd_verify(args) -> int:
    results = verify(_tables(args.tables))
    failed = [r for r in results if not r.ok]
    noted = [r for r in results if r.entry.stated is not None]
    if args.json:
        doc = {
            "entries": [
                {
                    "table": r.entry.table,
                    "line": r.entry.line,
                    "lens": f"{r.entry.p}/{r.entry.q}",
                    "descriptor": r.entry.descriptor,
                    "expected": r.entry.count,
                    "stated": r.entry.stated,
                    "ok": r.ok,
                    "detail": r.detail,
                }
                for r in results
            ],
            "passed": len(results) - len(failed),
            "failed": len(failed),
        }
        print(json.dumps(doc, sort_keys=True))
    else:
        for r in results:
            if args.verbose or not r.ok or r.entry.stated is not None:
                print(r.line())
        print(f"{len(results) - len(failed)}/{len(results)} entries pass; "
              f"{len(noted)} differ from the tabulated source value")
    return 1 if failed else 0


def _step_target(obj) -> str:
    if isinstance(obj, LensSpace):
        return str(obj)
    if isinstance(obj, tuple) and obj and isinstance(obj[0], tuple):
        return " # ".join(format_chain(c) for c in obj)
    if isinstance(obj, tuple):
        return format_chain(obj)
    return str(obj)


def path_document(path: CobordismPath) -> list[dict]:
    return [
        {"move": move.kind.value, "data": [str(x) if not isinstance(x, int) else x for x in move.data], "to": _step_target(to)}
        for move, to in path.steps
    ]


def cmd_cobordism(args) -> int:
    src, dst = parse_lens(args.src), parse_lens(args.dst)
    verdict = length_obstruction(src, dst)
    path = None
    if verdict is Verdict.OPEN:
        chain = None if args.rot is None else chain_from_rotations(src.cf, parse_rot(args.rot))
        path = search(src, dst, args.depth, chain)
    doc = {
        "src": {"p": src.p, "q": src.q},
        "dst": {"p": dst.p, "q": dst.q},
        "verdict": verdict.value,
        "path": None if path is None else path_document(path),
    }
    if path is None:
        text = f"{src} -> {dst}: {verdict.value}" + ("" if verdict is not Verdict.OPEN else ", no path found")
    else:
        text = "\n".join([f"{src} -> {dst}: {verdict.value}, {len(path.steps)} move(s)"] +
                         [f"  {s['move']} {s['data']} -> {s['to']}" for s in doc["path"]])
    _emit(doc, args.json, text)
    return 0


def cmd_sweep(args) -> int:
    rows = []
    for p in range(2, args.max_p + 1):
        for q in range(1, p):
            try:
                fs = ut_fillings(p, q)
            except InvalidInput:
                continue
            if len(fs) >= args.min_count:
                rows.append({"p": p, "q": q, "length": length(p, q), "ut_count": len(fs),
                             "b2": sorted(f.b2 for f in fs.members)})
    if args.json:
        print(json.dumps(rows, sort_keys=True))
    else:
        for r in rows:
            print(f"L({r['p']},{r['q']}) length={r['length']} ut_fillings={r['ut_count']} b2={r['b2']}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="lensfill", description="Stein fillings of tight lens spaces.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.set_defaults(func=func)
        return sp

    for name, func, help_ in (("cf", cmd_cf, "negative continued fraction of p/q"),
                              ("dual", cmd_dual, "expansion of p/(p-q)")):
        add(name, func, help_).add_argument("lens", help="p/q or [a1,...,an]")

    sp = add("path", cmd_path, "minimal Farey path from 0 to -p/q")
    sp.add_argument("lens")
    sp.add_argument("--rot", help="rotation numbers r1,...,rn to decorate the path")

    sp = add("fillings", cmd_fillings, "fillings of a tight structure")
    sp.add_argument("lens")
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--ut", action="store_true", help="universally tight structure (default)")
    g.add_argument("--rot", help="rotation numbers r1,...,rn")

    sp = add("verify", cmd_verify, "check the engine against the golden tables")
    sp.add_argument("--tables", default="all", help="cor5, 3component, all (comma separated)")
    sp.add_argument("-v", "--verbose", action="store_true", help="print every entry")

    sp = add("cobordism", cmd_cobordism, "look for a Stein cobordism between lens spaces")
    sp.add_argument("src")
    sp.add_argument("dst")
    sp.add_argument("--depth", type=int, default=3)
    sp.add_argument("--rot", help="structure on src, enabling torus-knot surgeries")

    sp = add("sweep", cmd_sweep, "universally tight filling counts over a range of p")
    sp.add_argument("--max-p", type=int, required=True)
    sp.add_argument("--min-count", type=int, default=1)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except InvalidInput as exc:
        print(f"lensfill: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
