"""Grid of twisted HH0 dimensions for the length-two words R^a L^b.

Prints the GL1 dimension and the two SL2 summands (the +g and -g twisted
pieces) as three a-by-b grids.  The summands are not added up: the total SL2
skein dimension needs the Weyl-group quotient, which is not computed here.
"""
import argparse
from dataclasses import dataclass

from torusskein.skein import gl1_skein_dim, sl2_summand_dims
from torusskein.sl2 import CyclicRLWord


@dataclass
class GridConfig:
    max_a: int = 6
    max_b: int = 6


def grids(cfg: GridConfig):
    out = {"gl1": {}, "plus": {}, "minus": {}}
    for a in range(1, cfg.max_a + 1):
        for b in range(1, cfg.max_b + 1):
            g = CyclicRLWord.canonical((a, b)).matrix()
            s = sl2_summand_dims(g)
            out["gl1"][a, b] = gl1_skein_dim(g)
            out["plus"][a, b] = s.plus.dimension
            out["minus"][a, b] = s.minus.dimension
    return out


def render(name, grid, cfg):
    lines = [name, "a\\b " + "".join(f"{b:5d}" for b in range(1, cfg.max_b + 1))]
    for a in range(1, cfg.max_a + 1):
        lines.append(f"{a:3d} " + "".join(f"{grid[a, b]:5d}" for b in range(1, cfg.max_b + 1)))
    return "\n".join(lines)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-a", type=int, default=6)
    ap.add_argument("--max-b", type=int, default=6)
    cfg = GridConfig(**vars(ap.parse_args()))
    for name, grid in grids(cfg).items():
        print(render(name, grid, cfg))
        print()


if __name__ == "__main__":
    main()
