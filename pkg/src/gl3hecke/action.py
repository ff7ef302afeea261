"""Right action of the Hecke generators on the basis f_{w,a}, N = 3.

A basis function is the pair ``(w, a)`` with ``a`` in ``S_w``; vectors are
sparse maps from basis functions to F_p. Operators act on the right, so in a
word the leftmost letter acts first.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .hecke import (
    ALPHABET,
    REGULAR_TRANSLATION,
    TG,
    TTM10,
    TTM1M1,
    TW1,
    TW1T01M,
    TW1T10,
    CharacterCase,
    OperatorWord,
    parse_word,
)
from .lattice import ID3, W1, W1W2, W2, W2SQ, W2W1, WeylElem, classify, parse_weyl, s_omega_contains


class OperationUndefined(ValueError):
    """The operator does not belong to the Hecke algebra of the configured case."""


class BasisFunction(NamedTuple):
    omega: WeylElem
    a: tuple

    def check(self) -> "BasisFunction":
        if self.omega.N != 3 or len(self.a) != 2:
            raise ValueError("module actions are implemented for N = 3 only")
        if not s_omega_contains(self.omega, self.a):
            raise ValueError(f"{self.a} is not in S_{self.omega.name()}")
        return self

    def __str__(self) -> str:
        return f"f[{self.omega.one_line()};{self.a[0]},{self.a[1]}]"


def basis(a, omega: WeylElem | None = None) -> BasisFunction:
    a = tuple(a)
    return BasisFunction(classify(a) if omega is None else omega, a).check()


def parse_basis(text: str) -> BasisFunction:
    """``"Id:-2,-1"`` or ``"123:-2,-1"``; the Weyl part may be omitted."""
    if ":" in text:
        w, a = text.split(":", 1)
        return basis(tuple(int(x) for x in a.split(",")), parse_weyl(w))
    return basis(tuple(int(x) for x in text.split(",")))


@dataclass
class ModuleVector:
    p: int
    terms: dict = field(default_factory=dict)

    @classmethod
    def of(cls, f: BasisFunction, p: int, coeff: int = 1) -> "ModuleVector":
        f.check()
        return cls(p, {f: coeff % p} if coeff % p else {})

    def __post_init__(self):
        self.terms = {k: c % self.p for k, c in self.terms.items() if c % self.p}

    def __add__(self, other: "ModuleVector") -> "ModuleVector":
        if other.p != self.p:
            raise ValueError("characteristic mismatch")
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, 0) + c
        return ModuleVector(self.p, terms)

    def __mul__(self, c: int) -> "ModuleVector":
        return ModuleVector(self.p, {k: v * c for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __neg__(self) -> "ModuleVector":
        return self * -1

    def __sub__(self, other: "ModuleVector") -> "ModuleVector":
        return self + (-other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ModuleVector):
            return NotImplemented
        return self.p == other.p and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def support(self) -> list:
        return sorted(self.terms)

    def __str__(self) -> str:
        return format_vector(self)


def format_vector(v: ModuleVector) -> str:
    """Canonical text: terms sorted by (Weyl one-line, a1, a2), coefficients in 1..p-1."""
    if not v.terms:
        return "0"
    return " + ".join(f"{v.terms[k]}*{k}" for k in v.support())


def vector_to_json(v: ModuleVector) -> list:
    return [{"omega": k.omega.one_line(), "a": list(k.a), "coeff": v.terms[k]} for k in v.support()]


@dataclass(frozen=True)
class WeightConfig:
    """Character case, coefficient field and the constants c_{sigma,w}.

    ``c_map`` holds the scalar by which ``T_w1`` acts on ``f_{w,a}`` with
    ``a1 == a2``; the relevant ``w`` are Id and w2^2 (Iwahori) or Id
    (semi-regular). Each value is 0 or -1.
    """

    case: CharacterCase
    p: int = 5
    c_map: tuple = ()

    @classmethod
    def make(cls, case: CharacterCase, p: int = 5, c: int = 0) -> "WeightConfig":
        if case is CharacterCase.IWAHORI:
            cmap = ((ID3, c), (W2SQ, c))
        elif case is CharacterCase.SEMIREGULAR:
            cmap = ((ID3, c),)
        else:
            cmap = ()
        return cls(case, p, cmap)

    def __post_init__(self):
        for _, c in self.c_map:
            if c % self.p not in (0, self.p - 1):
                raise ValueError(f"c must be 0 or -1, got {c}")

    def c(self, w: WeylElem) -> int:
        return dict(self.c_map).get(w, 0)

    @property
    def c_value(self) -> int:
        """The shared constant, as -1 or 0."""
        vals = {c % self.p for _, c in self.c_map}
        return -1 if vals == {self.p - 1} else 0


def _linear(v: ModuleVector, image) -> ModuleVector:
    out: dict = {}
    for key, c in v.terms.items():
        for coeff, new in image(key):
            new.check()
            out[new] = out.get(new, 0) + c * coeff
    return ModuleVector(v.p, out)


def _require(cfg: WeightConfig, allowed, name):
    if cfg.case not in allowed:
        raise OperationUndefined(f"{name} is not defined in the {cfg.case.value} case")


def _require_rank3(v: ModuleVector):
    for k in v.terms:
        if k.omega.N != 3:
            raise ValueError("module actions are implemented for N = 3 only")


def gamma_translate(a) -> tuple:
    """``a -> gamma . a`` for the T_gamma action."""
    a1, a2 = a
    return (1 - a2, a1 - a2)


def act_gamma_left(f: BasisFunction) -> BasisFunction:
    """Left translation by gamma: ``(w, a) -> (w w2^-1, a^gamma)``."""
    a1, a2 = f.a
    return BasisFunction(f.omega * W2.inverse(), (1 + a2 - a1, 1 - a1)).check()


def act_T_gamma(v: ModuleVector, cfg: WeightConfig) -> ModuleVector:
    _require(cfg, (CharacterCase.IWAHORI,), "T_gamma")
    _require_rank3(v)
    return _linear(v, lambda k: [(1, BasisFunction(k.omega * W2, gamma_translate(k.a)))])


def act_T_omega1(v: ModuleVector, cfg: WeightConfig) -> ModuleVector:
    _require(cfg, (CharacterCase.IWAHORI, CharacterCase.SEMIREGULAR), "T_w1")
    _require_rank3(v)

    def image(k):
        a1, a2 = k.a
        if a1 > a2:
            return [(1, BasisFunction(k.omega * W1, (a2, a1)))]
        if a1 == a2:
            return [(cfg.c(k.omega), k)]
        return [(-1, k)]

    return _linear(v, image)


def act_T_omega1_t01m(v: ModuleVector, cfg: WeightConfig) -> ModuleVector:
    """``T_{w1 t(0,-1)}``: ``(w, (a1, a2)) -> (w', (a2, a1 - 1))`` with w' in {Id, w1}."""
    _require(cfg, (CharacterCase.SEMIREGULAR,), "T_{w1 t(0,-1)}")
    _require_rank3(v)

    def image(k):
        b = (k.a[1], k.a[0] - 1)
        hits = [w for w in (ID3, W1) if s_omega_contains(w, b)]
        if len(hits) != 1:
            raise AssertionError(f"{b} lies in {len(hits)} of S_Id, S_w1")
        return [(1, BasisFunction(hits[0], b))]

    return _linear(v, image)


def act_T_omega1_t10(v: ModuleVector, cfg: WeightConfig) -> ModuleVector:
    _require(cfg, (CharacterCase.SEMIREGULAR,), "T_{w1 t(1,0)}")
    return ModuleVector(v.p)


def act_regular_generator(g: str, v: ModuleVector, cfg: WeightConfig) -> ModuleVector:
    _require(cfg, (CharacterCase.REGULAR,), g)
    _require_rank3(v)
    if g not in REGULAR_TRANSLATION:
        raise OperationUndefined(f"{g} is not a regular-case generator")
    if any(k.omega != ID3 for k in v.terms):
        raise ValueError("regular-case vectors are supported on f_{Id,a}")
    if g not in (TTM10, TTM1M1):
        return ModuleVector(v.p)
    d1, d2 = REGULAR_TRANSLATION[g]
    return _linear(v, lambda k: [(1, BasisFunction(ID3, (k.a[0] + d1, k.a[1] + d2)))])


def act_generator(g: str, v: ModuleVector, cfg: WeightConfig) -> ModuleVector:
    if g not in ALPHABET[cfg.case]:
        raise OperationUndefined(f"{g} is not a generator of the {cfg.case.value} case")
    if g == TG:
        return act_T_gamma(v, cfg)
    if g == TW1:
        return act_T_omega1(v, cfg)
    if g == TW1T01M:
        return act_T_omega1_t01m(v, cfg)
    if g == TW1T10:
        return act_T_omega1_t10(v, cfg)
    return act_regular_generator(g, v, cfg)


def act_word(word: OperatorWord, v: ModuleVector, cfg: WeightConfig) -> ModuleVector:
    if word.case is not cfg.case:
        raise OperationUndefined(f"{word.case.value} word acting in the {cfg.case.value} case")
    for g in word.letters:
        if not v:
            break
        v = act_generator(g, v, cfg)
    return v


_IW = CharacterCase.IWAHORI

# (word, translation) pairs realising T_{t(d)} on each region, two per region
_COMPOSITES = {
    ID3: (("(Tg Tw1)^2", (-1, 0)), ("(Tg Tw1 Tg)^2", (-1, -1))),
    W1: (("(Tw1 Tg)^2", (0, -1)), ("(Tg Tw1 Tg)^2", (-1, -1))),
    W1W2: (("(Tw1 Tg^2)^2", (1, 0)), ("(Tg^2 Tw1 Tg^2)^2", (1, 1))),
    W2W1: (("(Tg Tw1)^2", (-1, 0)), ("(Tg^2 Tw1)^2", (0, 1))),
    W2: (("(Tw1 Tg^2)^2", (1, 0)), ("(Tw1 Tg)^2", (0, -1))),
    W2SQ: (("(Tg^2 Tw1)^2", (0, 1)), ("(Tg^2 Tw1 Tg^2)^2", (1, 1))),
}


def composite_table(region: WeylElem) -> list:
    """The two Iwahori-case words acting as translations on ``S_region``."""
    if region not in _COMPOSITES:
        raise KeyError(f"no composites recorded for {region!r}")
    return [(parse_word(w, _IW), d) for w, d in _COMPOSITES[region]]


def window_basis(cfg: WeightConfig, window) -> list:
    """Basis functions of the case's isotypic space with ``a`` in the window."""
    allowed = cfg.case.w_chi
    out = []
    for a in window.points():
        w = classify(a)
        if w in allowed:
            out.append(BasisFunction(w, a))
    return sorted(out)
