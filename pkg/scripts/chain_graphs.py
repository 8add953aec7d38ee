"""Write DOT files for the chain graphs of one case and print their matching counts.

    python3 scripts/chain_graphs.py --n 9 --s 8 --out chains/
    dot -Tpng chains/chain_n9_s8_000.dot -o chain.png
"""

import argparse

from typeb_contraction.adapted_pair import (
    build_certificate, chain_graph, classify_O, exceptional_roots, perfect_matchings,
)
from typeb_contraction.cli import write_chain_dots
from typeb_contraction.rootspace import build_context, fmt_root


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, required=True)
    ap.add_argument("--s", type=int, required=True)
    ap.add_argument("--out", default="chains")
    args = ap.parse_args()

    data = build_certificate(build_context(args.n, args.s))
    exc = exceptional_roots(data)
    seen = set()
    for a in data.O:
        if a in exc:
            continue
        verts, edges = chain_graph(a, data)
        key = frozenset(verts)
        if key in seen:
            continue
        seen.add(key)
        labels = " ".join(f"{fmt_root(v)}[{classify_O(v, data).label}]" for v in verts)
        print(f"{len(verts):3d} vertices, {len(perfect_matchings(verts, edges))} perfect matching(s): {labels}")
    for path in write_chain_dots(data, args.out):
        print("wrote", path)
    if exc:
        print("excluded (tilde roots of O3 and their partners):", ", ".join(fmt_root(r) for r in sorted(exc)))


if __name__ == "__main__":
    main()
