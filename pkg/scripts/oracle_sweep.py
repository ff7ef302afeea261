"""Compare the closed formulas with brute force in GL_3(F_q((t))).

For each residue order q and precision d: region membership by conjugation,
properness by subgroup containment, the trivial-weight Hecke sums (q = p),
and the bundled claim corpus. Verdicts at d and d + 2 are compared.
"""

import argparse
import itertools
import sys
import time
from dataclasses import dataclass

from gl3hecke.action import BasisFunction, ModuleVector, WeightConfig, act_word
from gl3hecke.hecke import CharacterCase, parse_word
from gl3hecke.lattice import WindowSpec, classify, is_proper, s_omega_contains, weyl_group
from gl3hecke.oracle import (
    bundled_claims,
    hecke_action_bruteforce_trivial,
    parse_claims,
    proper_bruteforce,
    s_omega_bruteforce,
    verify_claims,
)


@dataclass(frozen=True)
class SweepConfig:
    qs: tuple = (2, 3)
    bound: int = 2
    precision: int = 8
    hecke: bool = True


def sweep(cfg: SweepConfig):
    box = WindowSpec(cfg.bound)
    d = cfg.precision
    for q in cfg.qs:
        start = time.perf_counter()
        bad = [
            (w.name(), a)
            for w in weyl_group(3)
            for a in box.points()
            if s_omega_bruteforce(w, a, d, q) != s_omega_contains(w, a)
            or s_omega_bruteforce(w, a, d + 2, q) != s_omega_contains(w, a)
        ]
        yield q, "regions", 6 * len(box), bad, time.perf_counter() - start

        start = time.perf_counter()
        bad, n = [], 0
        for w in weyl_group(3):
            pts = [a for a in box.points() if s_omega_contains(w, a)]
            for a, b in itertools.product(pts, repeat=2):
                n += 1
                if proper_bruteforce(w, b, a, d + 2, q) != is_proper(w, b, a):
                    bad.append((w.name(), b, a))
        yield q, "properness", n, bad, time.perf_counter() - start

        if cfg.hecke:
            start = time.perf_counter()
            wc = WeightConfig.make(CharacterCase.IWAHORI, q, 0)
            bad = []
            for a in box.points():
                f = BasisFunction(classify(a), a)
                v = ModuleVector.of(f, q)
                for op, word in (("w1", "Tw1"), ("gamma", "Tg")):
                    if hecke_action_bruteforce_trivial(op, f, q, d=d) != act_word(parse_word(word, wc.case), v, wc):
                        bad.append((op, str(f)))
            yield q, "hecke sums", 2 * len(box), bad, time.perf_counter() - start

    start = time.perf_counter()
    claims = parse_claims(bundled_claims())
    lo, hi = verify_claims(claims, d), verify_claims(claims, d + 2)
    bad = [str(r.claim) for r, s in zip(lo, hi) if not (r.ok and s.ok and r.got == s.got)]
    yield "-", "claims", len(claims), bad, time.perf_counter() - start


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--q", default="2,3")
    ap.add_argument("--window", type=int, default=2)
    ap.add_argument("--precision", type=int, default=8)
    ap.add_argument("--no-hecke", action="store_true")
    args = ap.parse_args(argv)
    cfg = SweepConfig(tuple(int(x) for x in args.q.split(",")), args.window, args.precision, not args.no_hecke)
    ok = True
    for q, name, n, bad, secs in sweep(cfg):
        ok &= not bad
        print(f"q={q}  {name:11s} {n:5d} checked  {len(bad)} disagreements  {secs:6.1f}s")
        for item in bad[:5]:
            print(f"    {item}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
