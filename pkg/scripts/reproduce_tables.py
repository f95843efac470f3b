"""Print per-structure filling counts for every lens space in the golden tables.

    python3 scripts/reproduce_tables.py [--tables cor5,3component] [--max-p 60]
"""

import argparse

from lensfill.chains import enumerate_structures, is_universally_tight, rotation_vector
from lensfill.fillings import fillings_of_chain, ut_fillings
from lensfill.golden import TABLES, load_table


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--tables", default=",".join(TABLES))
    ap.add_argument("--max-p", type=int, default=None)
    args = ap.parse_args()
    lenses = []
    for name in args.tables.split(","):
        for e in load_table(name):
            if (e.p, e.q) not in lenses and (args.max_p is None or e.p <= args.max_p):
                lenses.append((e.p, e.q))
    for p, q in lenses:
        counts: dict[int, list] = {}
        for c in enumerate_structures(p, q):
            if is_universally_tight(c):
                continue
            counts.setdefault(len(fillings_of_chain(c)), []).append(rotation_vector(c))
        vo = "  ".join(f"{n}:{len(rs)}" for n, rs in sorted(counts.items()))
        print(f"L({p},{q}) ut={len(ut_fillings(p, q))}  vo count:structures {vo or '-'}")


if __name__ == "__main__":
    main()
