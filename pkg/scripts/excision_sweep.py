"""Glue block dimensions along every reduced graph of given genus and legs and
report how many graphs reproduce the handlebody dimension."""

import argparse
import itertools
import time
from dataclasses import dataclass, fields

from ansular.blocks import HandlebodySignature, graph_glue_dim, handlebody_dim
from ansular.corpus import corpus
from ansular.graph_core import Corolla, enumerate_reduced
from ansular.gv_data import as_fusion


@dataclass(frozen=True)
class SweepConfig:
    max_genus: int = 2
    max_legs: int = 2
    max_vertices: int = 5
    max_rank: int = 4


def sweep(cfg: SweepConfig) -> bool:
    data = {k: as_fusion(d) for k, d in corpus().items() if as_fusion(d).rank <= cfg.max_rank}
    all_ok = True
    for legs, genus in itertools.product(range(cfg.max_legs + 1), range(cfg.max_genus + 1)):
        t = time.perf_counter()
        objs = enumerate_reduced(Corolla(tuple(range(legs))), genus, cfg.max_vertices)
        agree = total = 0
        for d in data.values():
            for labels in itertools.product(d.labels, repeat=legs):
                want = handlebody_dim(d, HandlebodySignature(genus, labels)).dimension
                for o in objs:
                    total += 1
                    agree += graph_glue_dim(d, o, dict(enumerate(labels))).dimension == want
        all_ok &= agree == total
        print(f"legs={legs} genus={genus} graphs={len(objs):4d} agree {agree}/{total} "
              f"({time.perf_counter() - t:.2f}s)")
    return all_ok


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    for f in fields(SweepConfig):
        ap.add_argument("--" + f.name.replace("_", "-"), type=int, default=f.default)
    cfg = SweepConfig(**vars(ap.parse_args()))
    raise SystemExit(0 if sweep(cfg) else 1)


if __name__ == "__main__":
    main()
