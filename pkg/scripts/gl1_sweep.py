"""Sweep enumerated classes and cross-check the three GL1 dimension routes.

    python3 scripts/gl1_sweep.py --trace-bound 10 --word-length-bound 8
"""
import argparse
import collections
import json
from dataclasses import asdict, dataclass

from torusskein.skein import gl1_routes
from torusskein.sl2 import class_to_matrix, enumerate_classes


@dataclass
class SweepConfig:
    trace_bound: int = 10
    word_length_bound: int = 8
    as_json: bool = False


def sweep(cfg: SweepConfig):
    rows, bad = [], []
    for c in enumerate_classes(cfg.trace_bound, cfg.word_length_bound):
        g = class_to_matrix(c)
        r = gl1_routes(g)
        rows.append({"class": c.label, "trace": g.trace, **asdict(r)})
        if not r.agree():
            bad.append(c.label)
    return rows, bad


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trace-bound", type=int, default=10)
    ap.add_argument("--word-length-bound", type=int, default=8)
    ap.add_argument("--json", action="store_true", dest="as_json")
    cfg = SweepConfig(**vars(ap.parse_args()))
    rows, bad = sweep(cfg)
    if cfg.as_json:
        print(json.dumps({"config": asdict(cfg), "rows": rows, "disagreements": bad}, indent=1))
        return 1 if bad else 0
    hist = collections.Counter(r["formula"] for r in rows)
    print(f"{len(rows)} classes, {len(bad)} disagreements")
    print("dimension  count")
    for dim in sorted(hist):
        print(f"{dim:9d}  {hist[dim]}")
    for label in bad:
        print("DISAGREE", label)
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
