"""Window-wide verification sweeps shared by the CLI and the test-suite."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .action import BasisFunction, ModuleVector, WeightConfig, act_word, composite_table, window_basis
from .explorer import _translators, find_transporter
from .hecke import OperatorWord, relations
from .lattice import ID3, WindowSpec, classify, is_proper, s_omega_contains, weyl_group


@dataclass
class CheckResult:
    name: str
    checked: int
    failures: list

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"name": self.name, "checked": self.checked, "ok": self.ok, "failures": self.failures[:10]}


def _rhs_action(rhs, v: ModuleVector, cfg: WeightConfig) -> ModuleVector:
    out = ModuleVector(cfg.p)
    for c, letters in rhs:
        out = out + act_word(OperatorWord(cfg.case, letters), v, cfg) * c
    return out


def _rule_name(rule) -> str:
    lhs = " ".join(rule.lhs)
    rhs = " + ".join(f"{c}*[{' '.join(w) or '1'}]" for c, w in rule.rhs) or "0"
    return f"{lhs} = {rhs}"


def verify_relations(cfg: WeightConfig, window: WindowSpec) -> list:
    """Each defining relation of the case, tested on every window basis vector."""
    basis = [ModuleVector.of(f, cfg.p) for f in window_basis(cfg, window)]
    out = []
    for rule in relations(cfg.case):
        lhs = OperatorWord(cfg.case, rule.lhs)
        bad = []
        for v in basis:
            if act_word(lhs, v, cfg) != _rhs_action(rule.rhs, v, cfg):
                bad.append(str(v))
        out.append(CheckResult(_rule_name(rule), len(basis), bad))
    return out


def verify_composites(cfg: WeightConfig, window: WindowSpec) -> list:
    """The two translation words of every region, on each of its window points."""
    out = []
    for region in sorted(weyl_group(3)):
        points = [a for a in window.points() if classify(a) == region]
        for word, (d1, d2) in composite_table(region):
            bad = []
            for a in points:
                v = ModuleVector.of(BasisFunction(region, a), cfg.p)
                want = ModuleVector.of(BasisFunction(region, (a[0] + d1, a[1] + d2)), cfg.p)
                if act_word(word, v, cfg) != want:
                    bad.append(list(a))
            out.append(CheckResult(f"{region.name()}: {word} -> t({d1},{d2})", len(points), bad))
    return out


def proper_pairs(window: WindowSpec) -> list:
    pts = [a for a in window.points() if s_omega_contains(ID3, a)]
    return [(a, b) for a in pts for b in pts if is_proper(ID3, b, a)]


def verify_theorem(cfg: WeightConfig, window: WindowSpec) -> CheckResult:
    """Every proper pair in ``S_Id`` is joined by its transporter word."""
    bad = []
    pairs = proper_pairs(window)
    for a, b in pairs:
        word = find_transporter(a, b, cfg.case)
        got = act_word(word, ModuleVector.of(BasisFunction(ID3, a), cfg.p), cfg)
        if got != ModuleVector.of(BasisFunction(ID3, b), cfg.p):
            bad.append([list(a), list(b)])
    return CheckResult(f"transporters ({cfg.case.value})", len(pairs), bad)


def reachable(a, cfg: WeightConfig, window: WindowSpec) -> set:
    """Points of ``S_Id`` in the window reached from ``f_{Id,a}`` by the two translators."""
    words = _translators(cfg.case)
    start = BasisFunction(ID3, tuple(a))
    seen = {start.a}
    queue = deque([start])
    while queue:
        f = queue.popleft()
        for w in words:
            v = act_word(w, ModuleVector.of(f, cfg.p), cfg)
            if len(v.terms) != 1:
                continue
            (g, c), = v.terms.items()
            if c == 1 and g.omega == ID3 and g.a in window and g.a not in seen:
                seen.add(g.a)
                queue.append(g)
    return seen


def verify_reachability(cfg: WeightConfig, window: WindowSpec) -> CheckResult:
    """Reachability by translators coincides with properness on ``S_Id``."""
    pts = [a for a in window.points() if s_omega_contains(ID3, a)]
    bad = []
    for a in pts:
        reach = reachable(a, cfg, window)
        for b in pts:
            if (b in reach) != is_proper(ID3, b, a):
                bad.append([list(a), list(b)])
    return CheckResult(f"reachability = properness ({cfg.case.value})", len(pts) ** 2, bad)
