"""Command-line front end.

Exit codes: 0 success, 2 parse error, 3 domain error (det != 1, Weyl
matrix not unimodular), 4 internal consistency failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from dataclasses import asdict, dataclass

from . import sampling
from .errors import ConsistencyError, DomainError, ParseError
from .mapping_torus import geometry_type, h1, seifert_lookup
from .sl2 import (class_to_matrix, classify, enumerate_classes, negate_class,
                  parse_element, parse_label)
from .skein import gl1_routes, gl1_skein_dim, hh0_dim, hh0_dim_general, sl2_summand_dims
from .torus_quantum import (difference_preimage, kernel_K, omega, renorm_exponent,
                            verify_renorm_constraint)
from .zmatrix import parse_zmatrix

TABLE_FIELDS = ["class", "trace", "h1", "geometry", "seifert", "gl1_dim", "sl2_plus", "sl2_minus"]


@dataclass(frozen=True)
class TableRow:
    class_label: str
    trace: int
    h1: str
    geometry: str
    seifert: str
    gl1_dim: int
    sl2_plus: int
    sl2_minus: int

    def values(self) -> list:
        return [self.class_label, self.trace, self.h1, self.geometry, self.seifert,
                self.gl1_dim, self.sl2_plus, self.sl2_minus]


def table_row(c) -> TableRow:
    g = class_to_matrix(c)
    summands = sl2_summand_dims(g)
    return TableRow(
        class_label=c.label,
        trace=g.trace,
        h1=str(h1(g)),
        geometry=str(geometry_type(c)),
        seifert=str(seifert_lookup(c)),
        gl1_dim=gl1_skein_dim(g),
        sl2_plus=summands.plus.dimension,
        sl2_minus=summands.minus.dimension,
    )


def build_table(trace_bound: int, word_length_bound: int) -> list[TableRow]:
    rows = [table_row(c) for c in enumerate_classes(trace_bound, word_length_bound)]
    return sorted(rows, key=lambda r: (abs(r.trace), r.class_label))


def render_table(rows: list[TableRow], fmt: str) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf)  # RFC 4180 quoting, CRLF line ends
        w.writerow(TABLE_FIELDS)
        for r in rows:
            w.writerow(r.values())
        return buf.getvalue()
    if fmt == "json":
        out = []
        for r in rows:
            d = dict(zip(TABLE_FIELDS, r.values()))
            d["matrix"] = class_to_matrix(parse_label(r.class_label)).to_json()
            out.append(d)
        return json.dumps(out, indent=1) + "\n"
    cells = [TABLE_FIELDS] + [[str(v) for v in r.values()] for r in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(TABLE_FIELDS))]
    return "".join("  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() + "\n"
                   for row in cells)


# ---------------------------------------------------------------------------
# commands

def _emit(args, text_lines: list[str], payload: dict):
    if args.format == "json":
        sys.stdout.write(json.dumps(payload, indent=1) + "\n")
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(payload.keys())
        w.writerow([json.dumps(v) if isinstance(v, (list, dict)) else v for v in payload.values()])
        sys.stdout.write(buf.getvalue())
    else:
        sys.stdout.write("\n".join(text_lines) + "\n")


def cmd_classify(args) -> int:
    g = parse_element(args.input)
    c = classify(g)
    rep = class_to_matrix(c)
    _emit(args, [c.label, str(rep)],
          {"input": args.input, "class": c.label, "representative": rep.to_json()})
    return 0


def cmd_invariants(args) -> int:
    g = parse_element(args.input)
    c = classify(g)
    hom = h1(g)
    geo = geometry_type(c)
    sf = seifert_lookup(c)
    sf_text = str(sf) if sf.known else "not listed"
    _emit(args,
          [f"class: {c.label}", f"trace: {g.trace}", f"H1: {hom}",
           f"geometry: {geo}", f"seifert: {sf_text}"],
          {"class": c.label, "trace": g.trace, "h1": str(hom),
           "h1_free_rank": hom.group.free_rank, "h1_torsion": list(hom.group.torsion),
           "geometry": str(geo), "seifert": sf.to_json()})
    return 0


def _factors(fs) -> str:
    return " ".join(str(f) for f in fs) if fs else "(none)"


def cmd_dim(args) -> int:
    g = parse_element(args.input)
    if args.group == "gl1":
        routes = gl1_routes(g)
        if not routes.agree():
            sys.stderr.write(f"route disagreement for {g}: {routes}\n")
            raise ConsistencyError(str(routes))
        hh = hh0_dim(g.to_zmatrix())
        _emit(args,
              [f"gl1 dimension: {routes.formula}",
               f"invariant factors of I - g: {_factors(hh.invariant_factors)}",
               f"routes: formula {routes.formula}, hochschild {routes.hochschild}, "
               f"homology {routes.homology}"],
              {"group": "gl1", "dimension": routes.formula,
               "invariant_factors": list(hh.invariant_factors), "routes": asdict(routes)})
    elif args.group == "sl2-summands":
        s = sl2_summand_dims(g)
        _emit(args,
              [f"plus: {s.plus.dimension} (invariant factors of I - g: {_factors(s.plus.invariant_factors)})",
               f"minus: {s.minus.dimension} (invariant factors of I + g: {_factors(s.minus.invariant_factors)})"],
              {"group": "sl2-summands", "plus": s.plus.to_json(), "minus": s.minus.to_json()})
    else:
        if args.weyl is None:
            raise ParseError("--group general requires --weyl")
        hh = hh0_dim_general(g, parse_zmatrix(args.weyl))
        _emit(args,
              [f"dimension: {hh.dimension}",
               f"invariant factors: {_factors(hh.invariant_factors)}"],
              {"group": "general", "weyl": args.weyl, **hh.to_json()})
    return 0


def cmd_table(args) -> int:
    if args.trace_bound < 0 or args.word_length_bound < 0:
        raise DomainError("bounds must be nonnegative")
    sys.stdout.write(render_table(build_table(args.trace_bound, args.word_length_bound), args.format))
    return 0


def run_checks(seed: int, trials: int) -> list[tuple[str, int, int]]:
    """Seeded self-checks; returns (name, passed, total) per family."""
    rng = random.Random(seed)
    results = []

    ok = 0
    for _ in range(trials):
        c = sampling.random_class(rng)
        ok += classify(class_to_matrix(c).conj(sampling.random_sl2(rng))) == c
    results.append(("conjugation invariance of classify", ok, trials))

    ok = 0
    for _ in range(trials):
        ok += gl1_routes(sampling.random_sl2(rng, 16)).agree()
    results.append(("gl1 three-route agreement", ok, trials))

    ok = 0
    for _ in range(trials):
        p = sampling.random_twisting(rng).to_zmatrix()
        x, y = sampling.random_admissible_pair(rng, p)
        ok += verify_renorm_constraint(x, y, p)
    results.append(("renormalization constraint", ok, trials))

    ok = 0
    for _ in range(trials):
        p = sampling.random_twisting(rng).to_zmatrix()
        x, _ = sampling.random_admissible_pair(rng, p)
        v = difference_preimage(x, p)
        k = sampling.random_in_sublattice(rng, kernel_K(p).basis, 2)
        shifted = tuple(a + b for a, b in zip(v, k))
        ok += -omega(shifted, x) / 2 == renorm_exponent(x, p)
    results.append(("preimage independence", ok, trials))

    ok = 0
    for _ in range(trials):
        g = sampling.random_sl2(rng, 16)
        a, b = sl2_summand_dims(g), sl2_summand_dims(-g)
        ok += ({a.plus.dimension, a.minus.dimension} == {b.plus.dimension, b.minus.dimension}
               and classify(-g) == negate_class(classify(g)))
    results.append(("sign symmetry", ok, trials))
    return results


def cmd_verify(args) -> int:
    failed = False
    for name, ok, total in run_checks(args.seed, args.trials):
        status = "PASS" if ok == total else "FAIL"
        failed |= ok != total
        print(f"{status} {name}: {ok}/{total}")
    return 4 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=["text", "json", "csv"], default="text")

    parser = argparse.ArgumentParser(
        prog="torusskein",
        description="SL2(Z) classes, mapping torus invariants and skein dimensions")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[fmt], help="canonical conjugacy class label")
    p.add_argument("input", help="matrix [[a,b],[c,d]] or word such as 'R^2 L^3'")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("invariants", parents=[fmt], help="H1, geometry and Seifert data")
    p.add_argument("input")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("dim", parents=[fmt], help="skein and twisted HH0 dimensions")
    p.add_argument("input")
    p.add_argument("--group", choices=["gl1", "sl2-summands", "general"], default="gl1")
    p.add_argument("--weyl", help="square unimodular matrix literal, e.g. [[0,1],[1,0]]")
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("table", parents=[fmt], help="sweep over enumerated classes")
    p.add_argument("trace_bound", type=int)
    p.add_argument("word_length_bound", type=int)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="seeded self-checks of the identities")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=200)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        sys.stderr.write(f"parse error: {exc}\n")
        return 2
    except DomainError as exc:
        sys.stderr.write(f"domain error: {exc}\n")
        return 3
    except ConsistencyError as exc:
        sys.stderr.write(f"internal consistency failure: {exc}\n")
        return 4


if __name__ == "__main__":
    sys.exit(main())
