"""Count the O1/O2/O3 classes of O for each n > s and compare O3 with the 3s/2 threshold.

    python3 scripts/o3_census.py --max-n 12
"""

import argparse
from collections import Counter

from typeb_contraction.adapted_pair import build_certificate, classify_O
from typeb_contraction.rootspace import build_context, fmt_root


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=12)
    args = ap.parse_args()

    print(f"{'n':>3} {'s':>3} {'3s/2>n':>7} {'|O1|':>5} {'|O2|':>5} {'|O3|':>5}  O3 roots")
    for n in range(3, args.max_n + 1):
        for s in range(2, n, 2):
            data = build_certificate(build_context(n, s))
            classes = {a: classify_O(a, data) for a in data.O}
            counts = Counter(c.order for c in classes.values())
            o3 = ", ".join(f"{fmt_root(a)}~{fmt_root(c.tilde_alpha)}" for a, c in classes.items() if c.order == 3)
            print(f"{n:3d} {s:3d} {str(3 * s > 2 * n):>7} {counts[1]:5d} {counts[2]:5d} {counts[3]:5d}  {o3}")


if __name__ == "__main__":
    main()
