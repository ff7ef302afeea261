"""Presentations of the Iwahori-Hecke algebras H(IZ, chi) for GL_3.

Elements are sparse F_p-combinations of operator words, reduced by the
relations of each character case. Equality here is only up to those rules;
the module action is the semantic check.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field

from .lattice import ID3, W1, weyl_group, WeylElem


class CharacterCase(enum.Enum):
    IWAHORI = "iwahori"
    SEMIREGULAR = "semiregular"
    REGULAR = "regular"

    @property
    def w_chi(self) -> frozenset:
        if self is CharacterCase.IWAHORI:
            return frozenset(weyl_group(3))
        if self is CharacterCase.SEMIREGULAR:
            return frozenset({ID3, W1})
        return frozenset({ID3})

    @classmethod
    def parse(cls, text: str) -> "CharacterCase":
        key = text.strip().lower().replace("-", "").replace("_", "")
        for c in cls:
            if c.value == key:
                return c
        raise ValueError(f"unknown character case {text!r}")


# Iwahori
TG, TW1 = "Tg", "Tw1"
# semi-regular: T_{w1 t(1,0)}, T_{w1 t(0,-1)}
TW1T10, TW1T01M = "Tw1t10", "Tw1t0-1"
# regular: T_{t(a)}
TT10, TTM10, TT01, TT0M1, TT11, TTM1M1 = "Tt10", "Tt-10", "Tt01", "Tt0-1", "Tt11", "Tt-1-1"

ALPHABET = {
    CharacterCase.IWAHORI: (TG, TW1),
    CharacterCase.SEMIREGULAR: (TW1, TW1T10, TW1T01M),
    CharacterCase.REGULAR: (TT10, TTM10, TT01, TT0M1, TT11, TTM1M1),
}

ALIASES = {
    "Tγ": TG,
    "Tgamma": TG,
    "Tω₁": TW1,
    "Tomega1": TW1,
    "Tω₁t(1,0)": TW1T10,
    "Tω₁t(0,−1)": TW1T01M,
    "Tt(1,0)": TT10,
    "Tt(−1,0)": TTM10,
    "Tt(0,1)": TT01,
    "Tt(0,−1)": TT0M1,
    "Tt(1,1)": TT11,
    "Tt(−1,−1)": TTM1M1,
}

REGULAR_TRANSLATION = {
    TT10: (1, 0),
    TTM10: (-1, 0),
    TT01: (0, 1),
    TT0M1: (0, -1),
    TT11: (1, 1),
    TTM1M1: (-1, -1),
}

# the nine vanishing products of the regular presentation
REGULAR_ZERO_PAIRS = (
    (TT10, TTM10),
    (TT10, TT01),
    (TT10, TTM1M1),
    (TT01, TT0M1),
    (TT01, TTM1M1),
    (TT11, TTM1M1),
    (TT11, TT0M1),
    (TT11, TTM10),
    (TTM10, TT0M1),
)


@dataclass(frozen=True)
class Rule:
    lhs: tuple
    rhs: tuple  # of (coefficient, word)


def relations(case: CharacterCase) -> list[Rule]:
    """Oriented rewrite rules; the regular case is also commutative."""
    if case is CharacterCase.IWAHORI:
        return [Rule((TG, TG, TG), ((1, ()),)), Rule((TW1, TW1), ((-1, (TW1,)),))]
    if case is CharacterCase.SEMIREGULAR:
        return [
            Rule((TW1, TW1), ((-1, (TW1,)),)),
            Rule((TW1T10, TW1T01M), ()),
            Rule((TW1T01M, TW1T10), ()),
        ]
    return [Rule(pair, ()) for pair in REGULAR_ZERO_PAIRS]


def generator_defined(case: CharacterCase, w: WeylElem) -> bool:
    """Whether some nonzero Hecke function lives on the double coset of ``w t_a``."""
    return w in case.w_chi


@dataclass(frozen=True)
class OperatorWord:
    case: CharacterCase
    letters: tuple = ()

    def __post_init__(self):
        bad = [g for g in self.letters if g not in ALPHABET[self.case]]
        if bad:
            raise ValueError(f"{bad} not generators of the {self.case.value} case")

    def __mul__(self, other: "OperatorWord") -> "OperatorWord":
        if other.case is not self.case:
            raise ValueError("words from different cases")
        return OperatorWord(self.case, self.letters + other.letters)

    def __pow__(self, k: int) -> "OperatorWord":
        return OperatorWord(self.case, self.letters * k)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return " ".join(self.letters) if self.letters else "1"


_TOKEN = re.compile(r"\s*(\(|\)|\^\s*\d+|[,*·]|T[^\s,()*^·]+)")


def parse_word(text: str, case: CharacterCase) -> OperatorWord:
    """Parse ``"(Tg Tw1)^2 Tg"``-style input; ``""`` or ``"1"`` is the empty word."""
    tokens = []
    pos = 0
    text = text.strip()
    for alias in sorted(ALIASES, key=len, reverse=True):
        text = text.replace(alias, f" {ALIASES[alias]} ")
    text = text.strip()
    if text in ("", "1"):
        return OperatorWord(case)
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"cannot parse word at {text[pos:]!r}")
        tok = m.group(1).replace(" ", "")
        pos = m.end()
        if tok not in (",", "*", "·"):
            tokens.append(tok)
        while pos < len(text) and text[pos].isspace():
            pos += 1

    def parse_seq(i):
        out = []
        while i < len(tokens) and tokens[i] != ")":
            if tokens[i] == "(":
                inner, i = parse_seq(i + 1)
                if i >= len(tokens) or tokens[i] != ")":
                    raise ValueError("unbalanced parentheses")
                i += 1
            elif tokens[i].startswith("^"):
                raise ValueError("dangling exponent")
            else:
                inner = [tokens[i]]
                i += 1
            if i < len(tokens) and tokens[i].startswith("^"):
                inner = inner * int(tokens[i][1:])
                i += 1
            out.extend(inner)
        return out, i

    letters, i = parse_seq(0)
    if i != len(tokens):
        raise ValueError("unbalanced parentheses")
    return OperatorWord(case, tuple(letters))


@dataclass
class HeckeElement:
    """Sparse F_p-combination of operator words, kept in normal form."""

    case: CharacterCase
    p: int
    terms: dict = field(default_factory=dict)

    @classmethod
    def word(cls, w: OperatorWord, p: int, coeff: int = 1) -> "HeckeElement":
        return normalize(cls(w.case, p, {w.letters: coeff % p}))

    @classmethod
    def one(cls, case: CharacterCase, p: int) -> "HeckeElement":
        return cls(case, p, {(): 1})

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        self._check(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = (terms.get(w, 0) + c) % self.p
        return normalize(HeckeElement(self.case, self.p, terms))

    def __neg__(self) -> "HeckeElement":
        return HeckeElement(self.case, self.p, {w: -c % self.p for w, c in self.terms.items()})

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return normalize(
                HeckeElement(self.case, self.p, {w: c * other % self.p for w, c in self.terms.items()})
            )
        self._check(other)
        terms: dict = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                terms[w1 + w2] = (terms.get(w1 + w2, 0) + c1 * c2) % self.p
        return normalize(HeckeElement(self.case, self.p, terms))

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return (self.case, self.p, self.terms) == (other.case, other.p, other.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other):
        if other.case is not self.case or other.p != self.p:
            raise ValueError("incompatible Hecke elements")

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=lambda w: (len(w), w)):
            word = " ".join(w) if w else "1"
            parts.append(f"{self.terms[w]}*[{word}]")
        return " + ".join(parts)


def _regular_key(letters):
    order = ALPHABET[CharacterCase.REGULAR]
    return tuple(sorted(letters, key=order.index))


def _regular_vanishes(letters) -> bool:
    present = set(letters)
    return any(x in present and y in present for x, y in REGULAR_ZERO_PAIRS)


def _rewrite_once(letters, rules):
    for k in range(len(letters)):
        for rule in rules:
            n = len(rule.lhs)
            if letters[k : k + n] == rule.lhs:
                return [(c, letters[:k] + w + letters[k + n :]) for c, w in rule.rhs]
    return None


def normalize(e: HeckeElement) -> HeckeElement:
    """Rewrite every word to a fixpoint of the case's relations."""
    p = e.p
    out: dict = {}
    if e.case is CharacterCase.REGULAR:
        for w, c in e.terms.items():
            w = _regular_key(w)
            if c % p and not _regular_vanishes(w):
                out[w] = (out.get(w, 0) + c) % p
    else:
        rules = relations(e.case)
        work = [(c, w) for w, c in e.terms.items()]
        while work:
            c, w = work.pop()
            if c % p == 0:
                continue
            step = _rewrite_once(w, rules)
            if step is None:
                out[w] = (out.get(w, 0) + c) % p
            else:
                work.extend((c * c2, w2) for c2, w2 in step)
    return HeckeElement(e.case, p, {w: c for w, c in out.items() if c % p})
