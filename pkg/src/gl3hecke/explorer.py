"""Windowed linear algebra over F_p on Hecke-generated submodules."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

from .action import BasisFunction, ModuleVector, WeightConfig, act_word, composite_table
from .hecke import ALPHABET, TTM10, TTM1M1, TW1, TW1T01M, CharacterCase, OperatorWord
from .lattice import ID3, WindowSpec, is_proper, s_omega_contains

SCHEMA = "gl3hecke.corollary/1"


class DomainError(ValueError):
    pass


def _in_window(v: ModuleVector, window: WindowSpec) -> bool:
    return all(k.a in window for k in v.terms)


def _reduce(terms: dict, pivots: dict, p: int) -> dict:
    """Eliminate pivot keys from ``terms`` (rows in ``pivots`` are monic)."""
    terms = dict(terms)
    for key in sorted(k for k in terms if k in pivots):
        c = terms.get(key, 0)
        if not c:
            continue
        for k2, c2 in pivots[key].items():
            terms[k2] = (terms.get(k2, 0) - c * c2) % p
        terms = {k: v for k, v in terms.items() if v}
    return terms


class Echelon:
    """Incremental row echelon form keyed by the canonical basis order."""

    def __init__(self, p: int):
        self.p = p
        self.pivots: dict = {}

    def add(self, v: ModuleVector) -> bool:
        rest = _reduce(v.terms, self.pivots, self.p)
        if not rest:
            return False
        lead = min(rest)
        inv = pow(rest[lead], -1, self.p)
        self.pivots[lead] = {k: c * inv % self.p for k, c in rest.items()}
        return True

    def contains(self, v: ModuleVector) -> bool:
        return not _reduce(v.terms, self.pivots, self.p)

    def __len__(self) -> int:
        return len(self.pivots)

    def rows(self) -> list:
        """Fully reduced rows, sorted by pivot."""
        keys = sorted(self.pivots)
        out = []
        for k in keys:
            others = {k2: r for k2, r in self.pivots.items() if k2 != k}
            out.append(ModuleVector(self.p, _reduce(self.pivots[k], others, self.p) | {k: 1}))
        return out


@dataclass
class SpanBasis:
    rows: list
    window: WindowSpec
    p: int
    out_of_window: list = field(default_factory=list)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def echelon(self) -> Echelon:
        e = Echelon(self.p)
        for r in self.rows:
            e.add(r)
        return e


def _projective_key(v: ModuleVector):
    lead = min(v.terms)
    inv = pow(v.terms[lead], -1, v.p)
    return tuple((k, c * inv % v.p) for k, c in sorted(v.terms.items()))


def closure_alphabet(cfg: WeightConfig, mode: str = "composite") -> list:
    """Words used to grow a span: the two translators in the Iwahori composite mode,
    otherwise the case's generators."""
    if mode not in ("composite", "raw"):
        raise ValueError(f"unknown closure mode {mode!r}")
    if cfg.case is CharacterCase.IWAHORI and mode == "composite":
        return [w for w, _ in composite_table(ID3)]
    return [OperatorWord(cfg.case, (g,)) for g in ALPHABET[cfg.case]]


def span_closure(
    gens: list,
    cfg: WeightConfig,
    window: WindowSpec,
    max_len: int | None = None,
    mode: str = "composite",
) -> SpanBasis:
    """Span of all images of ``gens`` under words of length <= ``max_len``.

    Images leaving the window keep being acted on, so in-window vectors
    reached through a detour are not lost; they are kept in
    ``out_of_window`` rather than in the span.
    """
    if max_len is None:
        # raw generator words need about twice as many letters to saturate
        max_len = (4 if mode == "composite" else 8) * max(window.bound, 1)
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    alphabet = closure_alphabet(cfg, mode)
    ech = Echelon(cfg.p)
    outside = []
    seen = set()
    frontier = []
    for g in gens:
        if g:
            key = _projective_key(g)
            if key not in seen:
                seen.add(key)
                frontier.append(g)
    visited = list(frontier)
    for _ in range(max_len):
        nxt = []
        for v in frontier:
            for w in alphabet:
                u = act_word(w, v, cfg)
                if not u:
                    continue
                key = _projective_key(u)
                if key in seen:
                    continue
                seen.add(key)
                nxt.append(u)
        if not nxt:
            break
        visited.extend(nxt)
        frontier = nxt
    for v in visited:
        if _in_window(v, window):
            ech.add(v)
        else:
            outside.append(v)
    return SpanBasis(ech.rows(), window, cfg.p, outside)


def membership(v: ModuleVector, s: SpanBasis) -> bool:
    if not _in_window(v, s.window):
        raise ValueError("vector support leaves the span's window")
    return s.echelon().contains(v)


def intersection_dim(a: SpanBasis, b_rows: list, p: int) -> int:
    e = a.echelon()
    extra = sum(1 for r in b_rows if e.add(r))
    b = Echelon(p)
    dim_b = sum(1 for r in b_rows if b.add(r))
    return dim_b - extra


def _translators(case: CharacterCase):
    """Words for the translations (-1, 0) and (-1, -1) on S_Id."""
    if case is CharacterCase.IWAHORI:
        (left, _), (diag, _) = composite_table(ID3)
        return left, diag
    if case is CharacterCase.SEMIREGULAR:
        return OperatorWord(case, (TW1T01M, TW1)), OperatorWord(case, (TW1T01M, TW1T01M))
    return OperatorWord(case, (TTM10,)), OperatorWord(case, (TTM1M1,))


def translation_counts(a, a_star) -> tuple:
    """``(m, n)`` with ``a_star - a = m (-1, 0) + n (-1, -1)``."""
    n = a[1] - a_star[1]
    m = (a_star[1] - a_star[0]) - (a[1] - a[0])
    return m, n


def find_transporter(a, a_star, case: CharacterCase) -> OperatorWord:
    """A word carrying ``f_{Id,a}`` to ``f_{Id,a_star}`` when ``a_star`` is proper to ``a``."""
    a, a_star = tuple(a), tuple(a_star)
    if not (s_omega_contains(ID3, a) and s_omega_contains(ID3, a_star)):
        raise DomainError(f"{a} and {a_star} must lie in S_Id")
    if not is_proper(ID3, a_star, a):
        raise DomainError(f"{a_star} is not proper to {a}")
    m, n = translation_counts(a, a_star)
    left, diag = _translators(case)
    return left**m * diag**n


@dataclass
class CorollaryReport:
    generator: tuple
    case: str
    c: int
    p: int
    bound: int
    dim_M: int
    dim_M2: int
    dim_cap: int
    expected_dim_M2: int
    mode: str = "composite"
    out_of_window: int = 0
    schema: str = SCHEMA

    @property
    def verdict(self) -> str:
        ok = self.dim_cap == 0 and self.dim_M2 == self.expected_dim_M2
        return "pass" if ok else "fail"

    def to_json(self) -> dict:
        d = asdict(self)
        d["generator"] = list(self.generator)
        d["verdict"] = self.verdict
        return d


def corollary_certificate(
    a, cfg: WeightConfig, window: WindowSpec, mode: str = "composite", max_len: int | None = None
) -> CorollaryReport:
    """Compare the submodule generated by ``f_{Id,a}`` with the line of
    ``f_{Id,(x, a2+1)}``, ``x <= a2+1``, inside the window."""
    a = tuple(a)
    if not s_omega_contains(ID3, a) or not (a[0] < a[1] < -1):
        raise DomainError(f"need a in S_Id with a1 < a2 < -1, got {a}")
    p = cfg.p
    M = span_closure([ModuleVector.of(BasisFunction(ID3, a), p)], cfg, window, max_len, mode)
    row = a[1] + 1
    M2 = [
        ModuleVector.of(BasisFunction(ID3, (x, row)), p)
        for x in range(-window.bound, row + 1)
        if (x, row) in window
    ]
    return CorollaryReport(
        generator=a,
        case=cfg.case.value,
        c=cfg.c_value,
        p=p,
        bound=window.bound,
        dim_M=M.dim,
        dim_M2=len(M2),
        dim_cap=intersection_dim(M, M2, p),
        expected_dim_M2=window.bound + a[1] + 2,
        mode=mode,
        out_of_window=len(M.out_of_window),
    )
