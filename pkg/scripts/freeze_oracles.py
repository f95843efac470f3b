"""Freeze oracle outputs used by the test suite.

Universally tight filling sets come from the breadth-first enumeration of
all null sequences of the right length (up to ``--max-length``), filtered
by the dual bound, with no use of the pruned search in ``bounded_null``.  Homology orders come from
sympy's Smith normal form.

    python scripts/freeze_oracles.py [--max-p 40]
"""

import argparse
import json
from pathlib import Path

from sympy import Matrix
from sympy.matrices.normalforms import smith_normal_form

from lensfill.arith import neg_cf, riemenschneider_dual
from lensfill.fillings import linking_presentation
from lensfill.nullseq import canonical, enumerate_null

OUT = Path(__file__).resolve().parents[1] / "tests" / "data" / "oracle.json"


def sympy_order(rows) -> int:
    d = smith_normal_form(Matrix(rows))
    diag = [abs(d[i, i]) for i in range(min(d.shape))]
    if len(rows) > len(diag) or 0 in diag:
        return 0
    out = 1
    for x in diag:
        out *= int(x)
    return out


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-p", type=int, default=40)
    ap.add_argument("--max-length", type=int, default=12)
    args = ap.parse_args()
    table = {}
    by_length = {}
    for p in range(2, args.max_p + 1):
        for q in range(1, p):
            try:
                cf = neg_cf(p, q)
            except ValueError:
                continue
            dual = riemenschneider_dual(cf)
            m = len(dual)
            if m > args.max_length:
                continue
            if m not in by_length:
                by_length[m] = enumerate_null(m)
            seqs = [s for s in by_length[m] if all(x <= y for x, y in zip(s, dual))]
            sym = (q * q - 1) % p == 0
            reps = sorted({canonical(s, sym) for s in seqs})
            table[f"{p}/{q}"] = [
                {"seq": list(s), "h1": sympy_order(linking_presentation(s, dual))} for s in reps
            ]
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps(table, sort_keys=True, indent=0) + "\n")
    print(f"wrote {len(table)} lens spaces to {OUT}")


if __name__ == "__main__":
    main()
