"""Write the golden table for one- and two-component chains.

The rules are encoded directly from the classification statement and do not
touch the filling engine, so the table can serve as an independent check.

    python scripts/make_cor5_table.py [--max-p 60] [--out PATH]
"""

import argparse
from pathlib import Path

DEFAULT_OUT = Path(__file__).resolve().parents[1] / "src" / "lensfill" / "data" / "cor5.txt"


def one_component(a: int) -> list[str]:
    # [a] = L(a,1)
    if a == 4:
        return [
            "# L(4,1): the rational ball with pi_1 = Z/2",
            "4/1 | ut | 2 | (1,2,1) (2,1,2)",
            "4/1 | * | 1",
        ]
    lines = [f"{a}/1 | ut | 1"]
    if a > 3:
        lines.append(f"{a}/1 | * | 1")
    return lines


def two_component(a: int, b: int) -> list[str]:
    # [a,b] = (ab-1)/b
    p, q = a * b - 1, b
    lens = f"{p}/{q}"
    if (a, b) == (3, 3):
        return [
            "# L(8,3): extra filling with b2 = 1 and pi_1 = Z/2",
            f"{lens} | ut | 2 | (1,2,1) (2,1,2)",
            f"{lens} | * | 1",
        ]
    if (a, b) == (5, 2):
        return [
            "# L(9,2): rational ball with pi_1 = Z/3",
            f"{lens} | ut | 2 | (1,2,2,1) (2,2,1,3)",
            f"{lens} | * | 1",
        ]
    if (a, b) == (2, 5):
        return [
            "# L(9,5) = L(9,2) read from the other end",
            f"{lens} | ut | 2 | (1,2,2,1) (3,1,2,2)",
            f"{lens} | * | 1",
        ]
    if 4 in (a, b):
        # Hopf link with a -4 component: torus-knot trace whenever a -4
        # component is stabilized in one direction only.
        lines = [f"# L({p},{q}) = [{a},{b}]: torus-knot filling when a -4 unknot has |r| = 2",
                 f"{lens} | ut | 2"]
        if a == 4 and b > 2:
            lines.append(f"{lens} | 2,* | 2")
        if b == 4 and a > 2:
            lines.append(f"{lens} | *,2 | 2")
        if (a - 1) * (b - 1) > 2:
            lines.append(f"{lens} | * | 1")
        return lines
    lines = [f"{lens} | ut | 1"]
    if (a - 1) * (b - 1) > 2:
        lines.append(f"{lens} | * | 1")
    return lines


def build(max_p: int) -> str:
    out = [
        "# Filling counts for lens spaces from one- and two-component chains.",
        "# Generated by scripts/make_cor5_table.py; rotations refer to the chain of p/q.",
        "# Format: p/q | ut or rotation pattern | count | optional sequences",
        "",
        "# one component",
    ]
    for a in range(2, max_p + 1):
        out += one_component(a)
    out += ["", "# two components"]
    for a in range(2, max_p + 1):
        for b in range(2, max_p + 1):
            if a * b - 1 <= max_p:
                out += two_component(a, b)
    return "\n".join(out) + "\n"


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-p", type=int, default=60)
    ap.add_argument("--out", type=Path, default=DEFAULT_OUT)
    args = ap.parse_args()
    args.out.write_text(build(args.max_p))
    print(f"wrote {args.out}")


if __name__ == "__main__":
    main()
