"""Scan the corollary certificate over windows, cases, c values and closure modes.

Writes one JSON record per run to stdout (or --out) and a short table to stderr.
"""

import argparse
import json
import sys
from dataclasses import dataclass

from gl3hecke.action import WeightConfig
from gl3hecke.explorer import corollary_certificate
from gl3hecke.hecke import CharacterCase
from gl3hecke.lattice import WindowSpec


@dataclass(frozen=True)
class ScanConfig:
    generator: tuple = (-3, -2)
    bounds: tuple = (6, 8, 10, 12)
    p: int = 5
    modes: tuple = ("composite", "raw")


def scan(cfg: ScanConfig):
    for case in CharacterCase:
        for c in (0, -1) if case is not CharacterCase.REGULAR else (0,):
            for mode in cfg.modes:
                for b in cfg.bounds:
                    yield corollary_certificate(cfg.generator, WeightConfig.make(case, cfg.p, c), WindowSpec(b), mode)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--a", default="-3,-2", help="generator, e.g. --a=-4,-2")
    ap.add_argument("--bounds", default="6,8,10,12")
    ap.add_argument("--p", type=int, default=5)
    ap.add_argument("--out")
    args = ap.parse_args(argv)
    cfg = ScanConfig(
        tuple(int(x) for x in args.a.split(",")), tuple(int(x) for x in args.bounds.split(",")), args.p
    )
    records = []
    for rep in scan(cfg):
        records.append(rep.to_json())
        print(
            f"{rep.case:12s} c={rep.c:2d} {rep.mode:9s} B={rep.bound:2d}  dim M={rep.dim_M:4d}"
            f"  dim M''={rep.dim_M2:3d}  cap={rep.dim_cap}  {rep.verdict}",
            file=sys.stderr,
        )
    text = "\n".join(json.dumps(r, sort_keys=True) for r in records) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if all(r["verdict"] == "pass" for r in records) else 1


if __name__ == "__main__":
    sys.exit(main())
