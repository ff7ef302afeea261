"""Weyl group of GL_N and the partition of Z^(N-1) into the regions S_w.

A lattice vector ``a`` is a plain tuple ``(a_1, ..., a_{N-1})`` standing for
``t_a = diag(pi^a_1, ..., pi^a_{N-1}, 1)``; the trailing zero is implied and
never stored.

Permutation matrices follow the convention ``M[perm(j), j] = 1`` so that
matrix product is composition of permutations.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

LatticeVec = tuple


@dataclass(frozen=True, order=True)
class WeylElem:
    """Permutation of ``{1..N}`` given by its image array (1-based)."""

    perm: tuple[int, ...]

    def __post_init__(self):
        n = len(self.perm)
        if sorted(self.perm) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.perm}")

    @property
    def N(self) -> int:
        return len(self.perm)

    def __call__(self, j: int) -> int:
        return self.perm[j - 1]

    def __mul__(self, other: "WeylElem") -> "WeylElem":
        if other.N != self.N:
            raise ValueError("rank mismatch")
        return WeylElem(tuple(self.perm[k - 1] for k in other.perm))

    def __pow__(self, k: int) -> "WeylElem":
        if k < 0:
            return self.inverse() ** (-k)
        out = identity(self.N)
        for _ in range(k):
            out = out * self
        return out

    def inverse(self) -> "WeylElem":
        return WeylElem(_inverse_perm(self.perm))

    def matrix(self) -> list[list[int]]:
        m = [[0] * self.N for _ in range(self.N)]
        for j, pj in enumerate(self.perm):
            m[pj - 1][j] = 1
        return m

    def one_line(self) -> str:
        if self.N < 10:
            return "".join(map(str, self.perm))
        return ",".join(map(str, self.perm))

    def name(self) -> str:
        return NAMES_N3.get(self, self.one_line()) if self.N == 3 else self.one_line()

    def __repr__(self) -> str:
        return f"WeylElem({self.name()})"


def identity(N: int) -> WeylElem:
    return WeylElem(tuple(range(1, N + 1)))


def omega1(N: int) -> WeylElem:
    """The transposition 1 <-> 2."""
    return WeylElem((2, 1) + tuple(range(3, N + 1)))


def omega2(N: int) -> WeylElem:
    """The N-cycle with matrix [[0, I_{N-1}], [1, 0]]."""
    return WeylElem((N,) + tuple(range(1, N)))


def transposition(N: int, i: int, j: int) -> WeylElem:
    perm = list(range(1, N + 1))
    perm[i - 1], perm[j - 1] = perm[j - 1], perm[i - 1]
    return WeylElem(tuple(perm))


@lru_cache(maxsize=None)
def weyl_group(N: int) -> tuple[WeylElem, ...]:
    return tuple(WeylElem(p) for p in itertools.permutations(range(1, N + 1)))


ID3 = identity(3)
W1 = omega1(3)
W2 = omega2(3)
W1W2 = W1 * W2
W2W1 = W2 * W1
W2SQ = W2 * W2

NAMES_N3 = {ID3: "Id", W1: "w1", W2: "w2", W1W2: "w1w2", W2W1: "w2w1", W2SQ: "w2^2"}
BY_NAME_N3 = {v: k for k, v in NAMES_N3.items()}


def parse_weyl(text: str, N: int = 3) -> WeylElem:
    """Accept a name (``Id``, ``w1``, ``w2^2``, ...) or a one-line permutation."""
    text = text.strip()
    if N == 3 and text in BY_NAME_N3:
        return BY_NAME_N3[text]
    if "," in text:
        return WeylElem(tuple(int(x) for x in text.split(",")))
    return WeylElem(tuple(int(x) for x in text))


@dataclass(frozen=True)
class WindowSpec:
    """Closed box ``|a_i| <= bound`` in Z^(N-1)."""

    bound: int = 8
    rank: int = field(default=3)

    def __post_init__(self):
        if self.bound < 0:
            raise ValueError("window bound must be nonnegative")
        if self.rank < 2:
            raise ValueError("rank must be at least 2")

    def points(self):
        r = range(-self.bound, self.bound + 1)
        return itertools.product(r, repeat=self.rank - 1)

    def __contains__(self, a) -> bool:
        return len(a) == self.rank - 1 and all(abs(x) <= self.bound for x in a)

    def __len__(self) -> int:
        return (2 * self.bound + 1) ** (self.rank - 1)


def _eps(r: int, s: int) -> int:
    return 1 if r > s else 0


@lru_cache(maxsize=None)
def _inverse_perm(perm: tuple) -> tuple:
    inv = [0] * len(perm)
    for j, pj in enumerate(perm, start=1):
        inv[pj - 1] = j
    return tuple(inv)


def exponent_matrix(w: WeylElem, a) -> list:
    """All ``l^w_ij(a)`` at once, 0-based, with ``None`` on the diagonal."""
    N = w.N
    if len(a) != N - 1:
        raise ValueError(f"lattice vector of length {len(a)} for rank {N}")
    winv = _inverse_perm(w.perm)
    full = tuple(a) + (0,)
    out = [[None] * N for _ in range(N)]
    for i in range(N):
        r = winv[i]
        for j in range(N):
            if i != j:
                s = winv[j]
                out[i][j] = full[r - 1] - full[s - 1] + (1 if r > s else 0)
    return out


def entry_exponent(w: WeylElem, a, i: int, j: int) -> int:
    """Exponent ``l`` with ``(i, j)``-entries of ``w t_a I (w t_a)^-1`` equal to ``p^l``."""
    N = w.N
    if len(a) != N - 1:
        raise ValueError(f"lattice vector of length {len(a)} for rank {N}")
    if i == j or not (1 <= i <= N and 1 <= j <= N):
        raise ValueError(f"bad entry index ({i}, {j})")
    winv = _inverse_perm(w.perm)
    r, s = winv[i - 1], winv[j - 1]
    full = tuple(a) + (0,)
    return full[r - 1] - full[s - 1] + _eps(r, s)


def s_omega_contains(w: WeylElem, a) -> bool:
    m = exponent_matrix(w, a)
    return all(m[i][j] >= 1 for i in range(1, w.N) for j in range(i))


def classify(a) -> WeylElem:
    """Return the unique ``w`` with ``a`` in ``S_w``.

    Sorts the diagonal of ``t_a`` (with ``a_N = 0`` appended): at each step the
    largest exponent among the unsorted slots, taking the largest index on
    ties, is moved to the last unsorted slot. The move shifts the slots after
    it down by one rather than transposing, so equal exponents keep their
    relative order; a plain transposition breaks ties wrongly, e.g. it sends
    ``(1, 0)`` to ``w1w2`` although ``(1, 0)`` lies in ``S_w2``.
    """
    diag = list(a) + [0]
    order = list(range(1, len(diag) + 1))
    for last in range(len(diag), 1, -1):
        top = max(diag[:last])
        j = max(m for m in range(last) if diag[m] == top)
        diag.insert(last - 1, diag.pop(j))
        order.insert(last - 1, order.pop(j))
    # the sorted slot i holds the original index order[i], i.e. w^-1(i) = order[i]
    return WeylElem(tuple(order)).inverse()


@dataclass
class Partition:
    assignment: dict
    violations: list = field(default_factory=list)

    def class_sizes(self) -> dict:
        return dict(Counter(self.assignment.values()))

    @property
    def ok(self) -> bool:
        return not self.violations


def partition_window(window: WindowSpec, N: int | None = None) -> Partition:
    """Assign every window point to its region, checking coverage is exactly one."""
    if N is not None and N != window.rank:
        window = WindowSpec(window.bound, N)
    group = weyl_group(window.rank)
    out = Partition(assignment={})
    for a in window.points():
        hits = [w for w in group if s_omega_contains(w, a)]
        c = classify(a)
        if len(hits) != 1:
            out.violations.append((a, tuple(hits)))
        elif hits[0] != c:
            out.violations.append((a, (hits[0], c)))
        out.assignment[a] = c
    return out


def is_proper(w: WeylElem, b, a) -> bool:
    """Whether ``b`` is proper to ``a`` inside ``S_w``.

    Containment of the intersected conjugates, read entrywise on their ideals.
    """
    if not s_omega_contains(w, a) or not s_omega_contains(w, b):
        raise ValueError(f"{a} and {b} must both lie in S_{w.name()}")
    N = w.N
    return all(
        max(entry_exponent(w, b, i, j), 0) >= max(entry_exponent(w, a, i, j), 0)
        for i in range(1, N + 1)
        for j in range(1, N + 1)
        if i != j
    )
