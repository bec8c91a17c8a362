"""HH0 dimensions of O_q((C^x)^{2r}) twisted by g (x) W for small signed permutations W.

    python3 scripts/weyl_twists.py --rank 2 --word "R L"
"""
import argparse
import itertools
from dataclasses import dataclass

from torusskein.skein import hh0_dim_general
from torusskein.sl2 import parse_element
from torusskein.zmatrix import ZMatrix


@dataclass
class TwistConfig:
    rank: int = 2
    word: str = "R L"


def signed_permutations(r):
    for perm in itertools.permutations(range(r)):
        for signs in itertools.product((1, -1), repeat=r):
            rows = [[0] * r for _ in range(r)]
            for i, j in enumerate(perm):
                rows[i][j] = signs[i]
            yield ZMatrix.from_rows(rows)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--rank", type=int, default=2)
    ap.add_argument("--word", default="R L")
    cfg = TwistConfig(**vars(ap.parse_args()))
    g = parse_element(cfg.word)
    print(f"g = {g}")
    for w in signed_permutations(cfg.rank):
        hh = hh0_dim_general(g, w)
        print(f"{str(w.to_rows()):28s} dim={hh.dimension:<6d} factors={list(hh.invariant_factors)}")


if __name__ == "__main__":
    main()
