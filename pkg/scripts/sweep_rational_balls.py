"""List lens spaces with a rational-ball filling of the universally tight structure.

    python3 scripts/sweep_rational_balls.py --max-p 400
"""

import argparse
from math import gcd

from lensfill.fillings import ut_fillings


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-p", type=int, default=400)
    args = ap.parse_args()
    total = 0
    for p in range(2, args.max_p + 1):
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            for f in ut_fillings(p, q, max_b2=0).members:
                total += 1
                print(f"L({p},{q}) {list(f.seq)} h1={f.h1_order}")
    print(f"{total} lens spaces")


if __name__ == "__main__":
    main()
