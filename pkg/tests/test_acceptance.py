"""One test per acceptance criterion, each under its stated time budget."""

import itertools
import os
import subprocess
import sys

from gl3hecke.action import BasisFunction, ModuleVector, WeightConfig, act_word
from gl3hecke.checks import verify_composites, verify_reachability, verify_relations, verify_theorem
from gl3hecke.explorer import corollary_certificate
from gl3hecke.hecke import CharacterCase, parse_word
from gl3hecke.lattice import (
    ID3,
    W1,
    W1W2,
    W2,
    W2SQ,
    W2W1,
    WindowSpec,
    classify,
    exponent_matrix,
    partition_window,
    s_omega_contains,
    weyl_group,
)
from gl3hecke.oracle import bundled_claims, hecke_action_bruteforce_trivial, parse_claims, s_omega_bruteforce, verify_claims

IW, SR, RG = CharacterCase.IWAHORI, CharacterCase.SEMIREGULAR, CharacterCase.REGULAR

# the six N = 3 inequality systems
PRINTED_REGIONS = {
    ID3: lambda a1, a2: a1 <= a2 <= 0,
    W1: lambda a1, a2: a2 + 1 <= a1 <= 0,
    W1W2: lambda a1, a2: a1 >= a2 + 1 >= 2,
    W2W1: lambda a1, a2: a1 <= 0 and a2 >= 1,
    W2: lambda a1, a2: a1 >= 1 and a2 <= 0,
    W2SQ: lambda a1, a2: a2 >= a1 >= 1,
}


def test_c1_partition_law(criterion):
    with criterion(1, "partition law, N=3 B=10 and N=4 B=4", 1.0):
        p3 = partition_window(WindowSpec(10, 3), 3)
        assert p3.ok and len(p3.assignment) == 441
        for a, w in p3.assignment.items():
            assert [x for x, ok in PRINTED_REGIONS.items() if ok(*a)] == [w]
        p4 = partition_window(WindowSpec(4, 4), 4)
        assert p4.ok and len(p4.assignment) == 9**3


def test_c2_exponent_antisymmetry(criterion):
    with criterion(2, "l_ij + l_ji = 1, N=3,4, |a_i| <= 6", 1.0):
        for n in (3, 4):
            pairs = list(itertools.combinations(range(n), 2))
            for w in weyl_group(n):
                for a in itertools.product(range(-6, 7), repeat=n - 1):
                    m = exponent_matrix(w, a)
                    assert all(m[i][j] + m[j][i] == 1 for i, j in pairs)


def test_c3_relations(criterion):
    with criterion(3, "relations on the B=8 window basis, p in {2,3,5}", 5.0):
        box = WindowSpec(8)
        counts = {}
        for case in CharacterCase:
            for p in (2, 3, 5):
                for c in ((0, -1) if case is not RG else (0,)):
                    res = verify_relations(WeightConfig.make(case, p, c), box)
                    assert all(r.ok for r in res), [r.to_json() for r in res if not r.ok]
                    counts[case] = len(res)
        assert counts == {IW: 2, SR: 3, RG: 9}


def test_c4_composites(criterion):
    with criterion(4, "12 composite identities on B=8", 5.0):
        for c in (0, -1):
            res = verify_composites(WeightConfig.make(IW, 5, c), WindowSpec(8))
            assert len(res) == 12
            assert all(r.ok and r.checked for r in res), [r.to_json() for r in res if not r.ok]


def test_c5_theorem(criterion):
    with criterion(5, "transporters for all proper pairs, B=6, three cases", 10.0):
        box = WindowSpec(6)
        for case in CharacterCase:
            cfg = WeightConfig.make(case, 5, 0)
            t = verify_theorem(cfg, box)
            assert t.ok and t.checked > 0, t.to_json()
            r = verify_reachability(cfg, box)
            assert r.ok, r.to_json()


def test_c6_corollary(criterion):
    with criterion(6, "corollary certificate for (-3,-2), B in {6,8,10}", 30.0):
        for case in CharacterCase:
            for c in ((0, -1) if case is not RG else (0,)):
                for mode in ("composite", "raw"):
                    dims = []
                    for b in (6, 8, 10):
                        rep = corollary_certificate((-3, -2), WeightConfig.make(case, 5, c), WindowSpec(b), mode)
                        assert rep.dim_cap == 0, rep.to_json()
                        dims.append(rep.dim_M2)
                    assert dims[0] < dims[1] < dims[2]


def test_c7_oracle(criterion):
    with criterion(7, "oracle agreement at q=2, d=8, |a_i| <= 2", 300.0):
        box = WindowSpec(2)
        for w in weyl_group(3):
            for a in box.points():
                assert s_omega_bruteforce(w, a, d=8, q=2) == s_omega_contains(w, a), (w, a)
        cfg = WeightConfig.make(IW, 2, 0)
        for a in box.points():
            f = BasisFunction(classify(a), a)
            v = ModuleVector.of(f, 2)
            for op, word in (("w1", "Tw1"), ("gamma", "Tg")):
                got = hecke_action_bruteforce_trivial(op, f, q=2, d=8)
                assert got == act_word(parse_word(word, IW), v, cfg), (op, str(f))
        claims = parse_claims(bundled_claims())
        assert len(claims) >= 20
        results = verify_claims(claims, d=8)
        assert all(r.ok for r in results), [r.to_json() for r in results if not r.ok]


REPORT_COMMANDS = [
    ["partition", "--window", "10"],
    ["relations", "--case", "iwahori", "--window", "8", "--c", "-1"],
    ["relations", "--case", "regular", "--window", "8", "--format", "csv"],
    ["theorem", "--case", "semiregular", "--window", "6", "--format", "text"],
    ["corollary", "--window", "10", "--case", "iwahori"],
    ["oracle"],
]


def _reports(hash_seed: str) -> list:
    env = dict(os.environ, PYTHONHASHSEED=hash_seed)
    return [
        subprocess.run([sys.executable, "-m", "gl3hecke", *cmd], capture_output=True, env=env, check=True).stdout
        for cmd in REPORT_COMMANDS
    ]


def test_c8_determinism(criterion):
    with criterion(8, "byte-identical reports across runs", 120.0):
        first, second = _reports("1"), _reports("2")
        assert all(first)
        assert first == second
