"""Hom-set sizes of the degeneracy-free dihedral category next to the number of
collapse maps between the corresponding circle graphs."""

import argparse

from ansular.cyclic_dihedral import dihedral_morphisms, psi_object
from ansular.graph_core import collapse_morphisms


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=4)
    args = ap.parse_args()
    print(f"{'[m]->[n]':>10} {'dihedral':>9} {'graph maps':>11}")
    for m in range(args.max_n + 1):
        for n in range(m, args.max_n + 1):
            homs = len(dihedral_morphisms(m, n))
            maps = len(collapse_morphisms(psi_object(n), psi_object(m)))
            flag = "" if homs == maps else "  MISMATCH"
            print(f"{f'[{m}]->[{n}]':>10} {homs:>9} {maps:>11}{flag}")


if __name__ == "__main__":
    main()
