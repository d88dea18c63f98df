"""``ansular`` command-line interface.

Exit codes: 0 every check passed, 1 a mathematical check failed, 2 bad input,
3 the n^g budget was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Sequence

from . import blocks, cyclic_dihedral as cd, graph_core, torus_rep
from .corpus import GROUP_DATASETS, corpus, load
from .gv_data import DatasetError, PointedDatum, as_fusion, canonical_json, is_r_category, load_dataset, validate
from .groups import GroupTableError, named_group

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3
DEFAULT_BUDGET = 10**7


class InputError(Exception):
    pass


@dataclass
class Report:
    columns: tuple[str, ...]
    rows: list[tuple] = field(default_factory=list)
    ok: bool = True
    extra: dict = field(default_factory=dict)

    def add(self, *row: Any, ok: bool = True) -> None:
        self.rows.append(row)
        self.ok &= ok

    def to_json(self) -> dict:
        return {"status": "pass" if self.ok else "fail",
                "records": [dict(zip(self.columns, r)) for r in self.rows], **self.extra}

    def render(self) -> str:
        cells = [tuple(map(str, self.columns))] + [tuple(_text(x) for x in r) for r in self.rows]
        widths = [max(len(r[i]) for r in cells) for i in range(len(self.columns))]
        lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
        lines.insert(1, "  ".join("-" * w for w in widths))
        lines.append(f"status: {'pass' if self.ok else 'fail'}")
        return "\n".join(lines) + "\n"


def _text(x: Any) -> str:
    if x is None:
        return "-"
    if isinstance(x, bool):
        return "pass" if x else "FAIL"
    if isinstance(x, (list, tuple, dict)):
        return json.dumps(x, separators=(",", ":"), sort_keys=True)
    return str(x)


# -- input helpers ------------------------------------------------------------------

def _read_json(path: str) -> Any:
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not JSON: {exc}") from None


def _dataset(path: str | None):
    if path is None:
        raise InputError("--dataset is required")
    obj = _read_json(path)
    if not isinstance(obj, dict):
        raise InputError(f"{path}: a dataset is a JSON object")
    return load_dataset(obj)


def _labels(text: str | None) -> tuple[int, ...]:
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise InputError(f"--labels expects comma-separated integers, got {text!r}") from None


# -- subcommands ----------------------------------------------------------------------

def cmd_validate(args) -> Report:
    rep = Report(("dataset", "constraint", "witness", "expected", "got"))
    items = {args.dataset: _dataset(args.dataset)} if args.dataset else corpus()
    for name, d in items.items():
        res = validate(d)
        for f in res.failures:
            rep.add(name, f.constraint, f.witness, f.expected, f.got, ok=False)
        if res.ok:
            rep.add(name, "all", None, None, "r-category" if is_r_category(d) else "not r-category")
    return rep


def cmd_dims(args) -> Report:
    d = _dataset(args.dataset)
    if not validate(d).ok:
        raise InputError("dataset fails validation; run `ansular validate`")
    fusion = as_fusion(d)
    labels = _labels(args.labels)
    graph = None
    if args.graph:
        graph = graph_core.from_json(_read_json(args.graph))
        if not graph.is_connected:
            raise InputError("--graph must be connected")
        if args.genus is not None and args.genus != graph.betti:
            raise InputError(f"-g {args.genus} does not match the graph's first Betti number {graph.betti}")
        if len(labels) != len(graph.leg_map):
            raise InputError(f"the graph has {len(graph.leg_map)} legs but {len(labels)} labels were given")
    genus = graph.betti if graph is not None else (args.genus or 0)
    if fusion.rank ** genus > args.budget:
        raise blocks.BudgetExceeded(f"{fusion.rank}^{genus} exceeds the budget {args.budget}")
    sig = blocks.HandlebodySignature(genus, labels)
    results = [blocks.handlebody_dim(fusion, sig), blocks.handlebody_dim_bruteforce(fusion, sig, args.budget)]
    if isinstance(d, PointedDatum):
        results.append(blocks.pointed_dim(d, sig))
    if graph is not None:
        results.append(blocks.graph_glue_dim(fusion, graph, dict(zip(sorted(graph.leg_map), labels))))
    agree = len({r.dimension for r in results}) == 1
    rep = Report(("genus", "labels", "method", "dimension"))
    for r in results:
        rep.add(genus, list(labels), r.method, r.dimension, ok=agree)
    rep.extra["dimension"] = results[0].dimension
    return rep


def cmd_torus(args) -> Report:
    d = _dataset(args.dataset)
    if not isinstance(d, PointedDatum):
        raise InputError("torus-rep needs a pointed dataset")
    if not validate(d).ok:
        raise InputError("dataset fails validation; run `ansular validate`")
    tr = torus_rep.torus_rep(d)
    T, R = torus_rep.exponent_table(tr.T), torus_rep.exponent_table(tr.R)
    rep = Report(("basis", "abar", "T", "R column"))
    for i, a in enumerate(tr.basis):
        j = next(k for k, row in enumerate(R) if row[i] is not None)
        rep.add(a, tr.basis[j], _root(T[i][i]), _root(R[j][i]))
    rep.extra.update({"basis": list(tr.basis), "T": T, "R": R})
    if args.check:
        res = torus_rep.check_relations(d)
        for f in res.failures:
            rep.add("check", f.constraint, f.witness, f.got, ok=False)
        rep.extra["checks"] = [f.constraint for f in res.failures]
    return rep


def _root(x) -> str:
    return "0" if x is None else f"{x[0]}/{x[1]}"


def cmd_graphs(args) -> Report:
    if args.genus is None or args.genus < 0 or args.legs < 0 or args.max_n < 1:
        raise InputError("graphs needs -g GENUS >= 0, --legs >= 0 and --max-n >= 1")
    over = graph_core.Corolla(tuple(range(args.legs)))
    objs = graph_core.enumerate_reduced(over, args.genus, args.max_n)
    rep = Report(("index", "vertices", "edges", "graph"))
    dims = None
    if args.dataset:
        fusion = as_fusion(_dataset(args.dataset))
        labels = _labels(args.labels) or (0,) * args.legs
        if len(labels) != args.legs:
            raise InputError(f"{args.legs} legs but {len(labels)} labels")
        ref = blocks.handlebody_dim(fusion, blocks.HandlebodySignature(args.genus, labels)).dimension
        dims = (fusion, dict(zip(range(args.legs), labels)), ref)
        rep.columns += ("dimension",)
        rep.extra["handlebody_dimension"] = ref
    for i, o in enumerate(objs):
        row = (i, len(o.graph.vertices), len(o.graph.edges), graph_core.to_json(o.graph))
        if dims:
            val = blocks.graph_glue_dim(dims[0], o, dims[1]).dimension
            rep.add(*row, val, ok=val == dims[2])
        else:
            rep.add(*row)
    rep.extra["count"] = len(objs)
    return rep


def cmd_dihedral(args) -> Report:
    rep = Report(("check", "result", "detail"))
    for text in args.morphisms:
        try:
            f = cd.parse_morphism(text)
        except (cd.MorphismError, ValueError) as exc:
            raise InputError(str(exc)) from None
        word = cd.dihedral_word(f) if isinstance(f, cd.DihedralMorphism) else cd.to_word(f)
        same = cd.parse_morphism(word) == f and cd.parse_morphism(str(f)) == f
        rep.add(f"morphism {text}", same, f"{f} = {word}", ok=same)
    for name, ok, detail in cd.suite(args.max_n, min(args.max_n, 3)):
        rep.add(name, ok, detail, ok=ok)
    return rep


def cmd_oracle(args) -> Report:
    try:
        group = named_group(args.group)
    except (KeyError, GroupTableError, ValueError):
        raise InputError(f"unknown group {args.group!r}; try one of {sorted(GROUP_DATASETS)}") from None
    if args.dataset:
        d = _dataset(args.dataset)
    elif args.group in GROUP_DATASETS:
        d = load(GROUP_DATASETS[args.group])
    else:
        raise InputError(f"no bundled dataset for {args.group!r}; pass --dataset")
    fusion = as_fusion(d)
    if fusion.rank ** args.max_genus > args.budget:
        raise blocks.BudgetExceeded(f"{fusion.rank}^{args.max_genus} exceeds the budget {args.budget}")
    rep = Report(("g", "fusion", "orbit", "result"))
    for g in range(args.max_genus + 1):
        a = blocks.handlebody_dim(fusion, blocks.HandlebodySignature(g)).dimension
        b = blocks.orbit_oracle(group, g)
        rep.add(g, a, b, a == b, ok=a == b)
    return rep


# -- parser -----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="canonical JSON output")
    common.add_argument("--dataset", metavar="PATH")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, metavar="B", help="max n^g terms (default 1e7)")

    p = argparse.ArgumentParser(prog="ansular", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", parents=[common], help="check fusion or pointed data (whole corpus by default)")
    s.set_defaults(run=cmd_validate)

    s = sub.add_parser("dims", parents=[common], help="handlebody block dimension by every applicable method")
    s.add_argument("-g", dest="genus", type=int, metavar="GENUS")
    s.add_argument("--labels", metavar="i,j,k")
    s.add_argument("--graph", metavar="FILE", help="graph JSON to glue along")
    s.set_defaults(run=cmd_dims)

    s = sub.add_parser("torus-rep", parents=[common], help="T and R on the solid-torus block")
    s.add_argument("--check", action="store_true", help="verify TR=RT, R^2=1 and the Z x Z/2 law")
    s.set_defaults(run=cmd_torus)

    s = sub.add_parser("graphs", parents=[common], help="enumerate reduced connected graphs")
    s.add_argument("-g", dest="genus", type=int, default=1, metavar="GENUS")
    s.add_argument("--legs", type=int, default=0)
    s.add_argument("--max-n", type=int, default=6, help="max vertices (default 6)")
    s.add_argument("--labels", metavar="i,j,k", help="leg labels for the gluing check (needs --dataset)")
    s.set_defaults(run=cmd_graphs)

    s = sub.add_parser("dihedral", help="cyclic and dihedral category checks")
    dsub = s.add_subparsers(dest="action", required=True)
    c = dsub.add_parser("check", parents=[common], help="relations, automorphisms and hom-set comparison")
    c.add_argument("morphisms", nargs="*", help="words like 'd1:2 t1' or values like '[1]->[2]:0,2'")
    c.add_argument("--max-n", type=int, default=5)
    c.set_defaults(run=cmd_dihedral)

    s = sub.add_parser("oracle", help="fusion dimensions against group orbit counts")
    osub = s.add_subparsers(dest="action", required=True)
    c = osub.add_parser("compare", parents=[common])
    c.add_argument("--group", default="s3")
    c.add_argument("--max-genus", type=int, default=3)
    c.set_defaults(run=cmd_oracle)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        rep = args.run(args)
    except blocks.BudgetExceeded as exc:
        print(f"ansular: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (InputError, DatasetError, GroupTableError, graph_core.GraphError, blocks.LabelError,
            cd.MorphismError) as exc:
        print(f"ansular: {exc}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(canonical_json(rep.to_json()) if args.json else rep.render())
    return EXIT_OK if rep.ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
