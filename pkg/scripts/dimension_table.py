"""Print handlebody dimensions g = 0..G for every bundled dataset."""

import argparse

from ansular.blocks import HandlebodySignature, handlebody_dim
from ansular.corpus import corpus
from ansular.gv_data import as_fusion, is_r_category


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-genus", type=int, default=4)
    args = ap.parse_args()
    head = ["dataset", "rank", "r-cat"] + [f"g={g}" for g in range(args.max_genus + 1)]
    rows = []
    for name, d in corpus().items():
        f = as_fusion(d)
        dims = [handlebody_dim(f, HandlebodySignature(g)).dimension for g in range(args.max_genus + 1)]
        rows.append([name, f.rank, "yes" if is_r_category(d) else "no"] + dims)
    widths = [max(len(str(r[i])) for r in [head] + rows) for i in range(len(head))]
    for r in [head] + rows:
        print("  ".join(str(x).rjust(w) for x, w in zip(r, widths)))


if __name__ == "__main__":
    main()
