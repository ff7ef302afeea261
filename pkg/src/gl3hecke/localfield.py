"""Truncated Laurent series over F_q (q prime) and square matrices over them.

``F_q((t))`` stands in for the local field with ``t`` as uniformizer. Every
value carries an absolute precision; anything that would depend on digits
beyond it raises :class:`PrecisionError` instead of guessing.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import reduce


class PrecisionError(ArithmeticError):
    pass


# absolute precision of an exact zero
EXACT = 10**9


@dataclass(frozen=True)
class TruncSeries:
    """``sum digits[k] t^(val+k) + O(t^prec)`` with ``digits[0] != 0``.

    A value indistinguishable from zero has no digits and ``val == prec``.
    """

    q: int
    val: int
    digits: tuple
    prec: int

    @classmethod
    def make(cls, q: int, val: int, digits, prec: int) -> "TruncSeries":
        digits = [c % q for c in digits][: max(prec - val, 0)]
        k = 0
        while k < len(digits) and digits[k] == 0:
            k += 1
        digits = digits[k:]
        if not digits:
            return cls(q, prec, (), prec)
        val += k
        digits += [0] * (prec - val - len(digits))
        return cls(q, val, tuple(digits), prec)

    @classmethod
    def monomial(cls, q: int, c: int, v: int, d: int) -> "TruncSeries":
        """Exact ``c t^v`` carried with relative precision ``d``."""
        return cls.make(q, v, [c], v + d)

    @classmethod
    def zero(cls, q: int, prec: int) -> "TruncSeries":
        return cls(q, prec, (), prec)

    def is_zero(self) -> bool:
        return not self.digits

    def valuation(self) -> int:
        if not self.digits:
            raise PrecisionError("valuation of a series that vanishes to working precision")
        return self.val

    def at_least(self, m: int) -> bool:
        """Decide ``valuation >= m``."""
        if self.digits:
            return self.val >= m
        if self.prec >= m:
            return True
        raise PrecisionError(f"cannot decide valuation >= {m} at precision {self.prec}")

    def coeff(self, k: int) -> int:
        if k >= self.prec:
            raise PrecisionError(f"digit t^{k} beyond precision {self.prec}")
        if k < self.val:
            return 0
        return self.digits[k - self.val]

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        prec = min(self.prec, other.prec)
        lo = min(self.val, other.val)
        if lo >= prec:
            return TruncSeries.zero(self.q, prec)
        out = [0] * (prec - lo)
        for s in (self, other):
            for k, c in enumerate(s.digits):
                if s.val + k < prec:
                    out[s.val + k - lo] += c
        return TruncSeries.make(self.q, lo, out, prec)

    def __neg__(self) -> "TruncSeries":
        return TruncSeries(self.q, self.val, tuple(-c % self.q for c in self.digits), self.prec)

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncSeries.make(self.q, self.val, [c * other for c in self.digits], self.prec)
        prec = min(self.val + other.prec, other.val + self.prec)
        v = self.val + other.val
        if not self.digits or not other.digits:
            return TruncSeries.zero(self.q, prec)
        n = prec - v
        out = [0] * n
        for i, a in enumerate(self.digits[:n]):
            if a:
                for j, b in enumerate(other.digits[: n - i]):
                    out[i + j] += a * b
        return TruncSeries.make(self.q, v, out, prec)

    __rmul__ = __mul__

    def inverse(self) -> "TruncSeries":
        if not self.digits:
            raise PrecisionError("inverting a series that vanishes to working precision")
        q, n = self.q, len(self.digits)
        inv0 = pow(self.digits[0], -1, q)
        out = [inv0] + [0] * (n - 1)
        for k in range(1, n):
            s = sum(self.digits[j] * out[k - j] for j in range(1, k + 1))
            out[k] = -s * inv0 % q
        return TruncSeries.make(q, -self.val, out, -self.val + n)

    def shift(self, k: int) -> "TruncSeries":
        """Multiply by ``t^k`` exactly."""
        return TruncSeries(self.q, self.val + k, self.digits, self.prec + k)

    def __str__(self) -> str:
        terms = [f"{c}*t^{self.val + k}" for k, c in enumerate(self.digits) if c]
        return (" + ".join(terms) or "0") + f" + O(t^{self.prec})"


def min_valuation(xs) -> int:
    """Exact minimum valuation of a collection, or PrecisionError."""
    xs = list(xs)
    known = [x.val for x in xs if x.digits]
    floor = min((x.prec for x in xs if not x.digits), default=None)
    if not known:
        raise PrecisionError("all entries vanish to working precision")
    m = min(known)
    if floor is not None and floor < m:
        raise PrecisionError("minimum valuation not determined at working precision")
    return m


class GMat:
    """Square matrix over truncated series."""

    def __init__(self, rows):
        self.rows = tuple(tuple(r) for r in rows)
        self.n = len(self.rows)
        self.q = self.rows[0][0].q

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def entries(self):
        return [x for r in self.rows for x in r]

    def __matmul__(self, other: "GMat") -> "GMat":
        n = self.n
        cols = list(zip(*other.rows))
        return GMat(
            [[reduce(lambda s, t: s + t, (a * b for a, b in zip(self.rows[i], cols[j]))) for j in range(n)] for i in range(n)]
        )

    def __sub__(self, other: "GMat") -> "GMat":
        return GMat([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def scale(self, k: int) -> "GMat":
        """Multiply by the central element ``t^k``."""
        return GMat([[x.shift(k) for x in r] for r in self.rows])

    def minor(self, rows, cols) -> TruncSeries:
        if len(rows) == 1:
            return self.rows[rows[0]][cols[0]]
        total = None
        for k, c in enumerate(cols):
            sub = self.minor(rows[1:], cols[:k] + cols[k + 1 :])
            term = self.rows[rows[0]][c] * sub
            if k % 2:
                term = -term
            total = term if total is None else total + term
        return total

    def det(self) -> TruncSeries:
        idx = tuple(range(self.n))
        return self.minor(idx, idx)

    def adjugate(self) -> "GMat":
        n = self.n
        out = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                rows = tuple(r for r in range(n) if r != j)
                cols = tuple(c for c in range(n) if c != i)
                m = self.minor(rows, cols)
                out[i][j] = -m if (i + j) % 2 else m
        return GMat(out)

    def inverse(self) -> "GMat":
        dinv = self.det().inverse()
        return GMat([[x * dinv for x in r] for r in self.adjugate().rows])

    def elementary_divisors(self) -> list:
        """Valuations of the Smith form over ``F_q[[t]]``, ascending, via gcds of minors."""
        prev, out = 0, []
        for k in range(1, self.n + 1):
            subsets = list(itertools.combinations(range(self.n), k))
            dk = min_valuation(self.minor(r, c) for r in subsets for c in subsets)
            out.append(dk - prev)
            prev = dk
        return out

    def equals(self, other: "GMat") -> bool:
        """Equality up to the joint precision of every entry."""
        return all((a - b).is_zero() for a, b in zip(self.entries(), other.entries()))

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.rows)


@dataclass(frozen=True)
class Field:
    """Ambient data for building matrices: residue order and relative precision."""

    q: int = 2
    d: int = 8

    def c(self, c: int, v: int = 0) -> TruncSeries:
        return TruncSeries.monomial(self.q, c, v, self.d)

    def zero(self) -> TruncSeries:
        return TruncSeries.zero(self.q, EXACT)

    def series(self, val: int, digits) -> TruncSeries:
        return TruncSeries.make(self.q, val, digits, val + self.d)

    def identity(self, n: int = 3) -> GMat:
        return GMat([[self.c(1) if i == j else self.zero() for j in range(n)] for i in range(n)])

    def diag(self, exps) -> GMat:
        n = len(exps)
        return GMat([[self.c(1, exps[i]) if i == j else self.zero() for j in range(n)] for i in range(n)])

    def t(self, a) -> GMat:
        """``t_a = diag(t^a_1, ..., t^a_{N-1}, 1)``."""
        return self.diag(tuple(a) + (0,))

    def perm(self, w) -> GMat:
        m = w.matrix()
        return GMat([[self.c(1) if x else self.zero() for x in r] for r in m])

    def from_entries(self, entries: dict, n: int = 3) -> GMat:
        """Identity plus the given off-diagonal (or diagonal) entries, keyed by 1-based (i, j)."""
        rows = [[self.c(1) if i == j else self.zero() for j in range(n)] for i in range(n)]
        for (i, j), x in entries.items():
            rows[i - 1][j - 1] = x
        return GMat(rows)
