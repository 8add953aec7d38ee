"""Print the generators attached to T with their weights and degrees, next to the closed forms.

    python3 scripts/degree_table.py --max-n 8
"""

import argparse

from typeb_contraction.adapted_pair import build_certificate
from typeb_contraction.invariants import compute_per_gamma, degree_template, index_and_c
from typeb_contraction.rootspace import build_context, fmt_root


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=8)
    args = ap.parse_args()

    for n in range(2, args.max_n + 1):
        for s in range(2, n + 1, 2):
            ctx = build_context(n, s)
            data = build_certificate(ctx)
            pg = compute_per_gamma(data)
            counts = index_and_c(ctx, [d.degree for d in pg.values()])
            print(f"(n, s) = ({n}, {s})  {ctx.regime}  c = {counts.c}  sum of degrees = {counts.sum_degrees}")
            for g in data.T:
                d = pg[g]
                tmpl = degree_template(g, ctx)
                mark = "" if tmpl is None else ("  closed form agrees" if tmpl == d.degree else f"  closed form {tmpl}")
                print(f"    {fmt_root(g):>10}  degree {d.degree:3d}  weight {fmt_root(d.weight)}{mark}")


if __name__ == "__main__":
    main()
