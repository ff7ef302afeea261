"""Brute-force checks inside GL_3(F_q((t))).

Nothing here uses the closed formulas of ``lattice`` or ``action``: regions,
double cosets and Hecke sums are recomputed from matrices.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter
from dataclasses import dataclass

from .action import BasisFunction, ModuleVector
from .lattice import W1, W2, WeylElem, classify, weyl_group
from .localfield import Field, GMat, PrecisionError, min_valuation


class ClassificationError(RuntimeError):
    """Two candidate double cosets matched, or the invariants are inconsistent."""


class BoundExceeded(LookupError):
    pass


def _eps(r: int, s: int) -> int:
    return 1 if r > s else 0


# -- subgroups ---------------------------------------------------------------

def _det_val(g: GMat, det_val: int | None) -> int:
    return g.det().valuation() if det_val is None else det_val


def in_K(g: GMat, det_val: int | None = None) -> bool:
    """``det_val`` may be supplied when known exactly, e.g. for a product."""
    return all(x.at_least(0) for x in g.entries()) and _det_val(g, det_val) == 0


def in_KZ(g: GMat, det_val: int | None = None) -> bool:
    lo = min_valuation(g.entries())
    return _det_val(g, det_val) == g.n * lo


def in_I(g: GMat, det_val: int | None = None) -> bool:
    if not in_K(g, det_val):
        return False
    return all(g[i, j].at_least(1) for i in range(g.n) for j in range(i))


def in_I1(g: GMat) -> bool:
    if not in_I(g):
        return False
    one = Field(g.q).c(1)
    return all((g[i, i] - one).at_least(1) for i in range(g.n))


def in_K1(g: GMat) -> bool:
    one = Field(g.q).c(1)
    return all(
        (g[i, j] - one if i == j else g[i, j]).at_least(1) for i in range(g.n) for j in range(g.n)
    )


def in_IZ(g: GMat, det_val: int | None = None) -> bool:
    lo = min_valuation(g.entries())
    return in_I(g.scale(-lo), _det_val(g, det_val) - g.n * lo)


@dataclass(frozen=True)
class SubgroupSpec:
    """One of K, K1, I, I1, B∩K, tested at the precision carried by the matrix."""

    tag: str
    depth: int = 8

    def contains(self, g: GMat) -> bool:
        if self.tag == "K":
            return in_K(g)
        if self.tag == "K1":
            return in_K1(g)
        if self.tag == "I":
            return in_I(g)
        if self.tag == "I1":
            return in_I1(g)
        if self.tag == "B∩K":
            # lower entries must vanish to the stated depth
            return in_K(g) and all(g[i, j].at_least(self.depth) for i in range(g.n) for j in range(i))
        raise ValueError(f"unknown subgroup {self.tag!r}")


# -- random elements ---------------------------------------------------------

def random_unit(F: Field, rng: random.Random, length: int = 3):
    return F.series(0, [rng.randrange(1, F.q)] + [rng.randrange(F.q) for _ in range(length - 1)])


def random_integral(F: Field, rng: random.Random, start: int = 0, length: int = 3):
    return F.series(start, [rng.randrange(F.q) for _ in range(length)])


def random_I1(F: Field, rng: random.Random, n: int = 3) -> GMat:
    entries = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                entries[i, j] = F.c(1) + random_integral(F, rng, 1)
            else:
                entries[i, j] = random_integral(F, rng, _eps(i, j))
    return F.from_entries(entries, n)


def random_I(F: Field, rng: random.Random, n: int = 3) -> GMat:
    diag = F.from_entries({(i, i): random_unit(F, rng) for i in range(1, n + 1)}, n)
    return diag @ random_I1(F, rng, n)


def random_K(F: Field, rng: random.Random, n: int = 3) -> GMat:
    w = rng.choice(weyl_group(n))
    return random_I(F, rng, n) @ F.perm(w) @ random_I(F, rng, n)


# -- double cosets -----------------------------------------------------------

def _chain(F: Field, n: int, k: int) -> GMat:
    """``diag(1^k, t^(n-k))``: its columns span the k-th lattice of the standard chain."""
    return F.diag((0,) * k + (1,) * (n - k))


def _chain_exponents(g: GMat) -> tuple:
    """``lambda`` in Z^n with ``g`` in ``K t_lambda I``.

    Right multiplication by I fixes the lattice chain spanned by
    ``diag(1^k, t^(n-k))``; the elementary divisors of ``g diag(1^k, t^(n-k))``
    form the multiset ``{lambda_r + [r > k]}``, and consecutive multisets differ
    exactly at ``r = k``.
    """
    F = Field(g.q)
    n = g.n
    divs = [Counter((g @ _chain(F, n, k)).elementary_divisors()) for k in range(n + 1)]
    lam = []
    for k in range(1, n + 1):
        lost = divs[k - 1] - divs[k]
        gained = divs[k] - divs[k - 1]
        if sum(lost.values()) != 1 or sum(gained.values()) != 1:
            raise ClassificationError("lattice chain invariants are inconsistent")
        (up,), (down,) = lost.elements(), gained.elements()
        if up != down + 1:
            raise ClassificationError("lattice chain invariants are inconsistent")
        lam.append(down)
    return tuple(lam)


def _coset_reps(F: Field, lower: dict, upper: dict, n: int = 3):
    """Unipotent-diagonal matrices whose (r, s) entry runs over ``p^lower / p^upper``."""
    slots = []
    for (r, s), lo in lower.items():
        hi = upper[r, s]
        slots.extend(((r, s), k) for k in range(lo, hi))
    for digits in itertools.product(range(F.q), repeat=len(slots)):
        entries: dict = {}
        for ((r, s), k), c in zip(slots, digits):
            entries.setdefault((r, s), []).append((k, c))
        m = {}
        for (r, s), terms in entries.items():
            lo = lower[r, s]
            coeffs = [0] * (upper[r, s] - lo)
            for k, c in terms:
                coeffs[k - lo] = c
            m[r, s] = F.series(lo, coeffs)
        yield F.from_entries(m, n)


def _candidate_box(n: int, bound: int):
    return itertools.product(range(-bound, bound + 1), repeat=n - 1)


def classify_KZtI1(g: GMat, bound: int | None = None, method: str = "lattice") -> tuple:
    """The unique ``a`` with ``g`` in ``KZ t_a I_1``.

    ``method="lattice"`` reads ``a`` off elementary divisors along the lattice
    chain; ``method="enumerate"`` tries every candidate in the box ``|a_i| <=
    bound`` against coset representatives of ``(t_a^-1 K t_a ∩ I_1) \\ I_1``.
    """
    n = g.n
    if method == "lattice":
        lam = _chain_exponents(g)
        a = tuple(x - lam[-1] for x in lam[:-1])
        if bound is not None and any(abs(x) > bound for x in a):
            raise BoundExceeded(f"{a} outside |a_i| <= {bound}")
        return a
    if method != "enumerate":
        raise ValueError(f"unknown method {method!r}")
    if bound is None:
        raise ValueError("enumeration needs a bound")
    F = Field(g.q, _relative_precision(g))
    vdet = g.det().valuation()
    ginv = g.inverse()
    found = []
    for a in _candidate_box(n, bound):
        if (vdet - sum(a)) % n:
            continue
        full = a + (0,)
        lower = {(r, s): _eps(r, s) for r in range(1, n + 1) for s in range(1, n + 1) if r != s}
        upper = {rs: max(full[rs[1] - 1] - full[rs[0] - 1], e) for rs, e in lower.items()}
        ta = F.t(a)
        for i in _coset_reps(F, lower, upper, n):
            if in_KZ(ta @ i @ ginv, sum(a) - vdet):
                found.append(a)
                break
    if not found:
        raise BoundExceeded(f"no a with |a_i| <= {bound}")
    if len(found) > 1:
        raise ClassificationError(f"several cosets matched: {found}")
    return found[0]


def _relative_precision(g: GMat) -> int:
    return max(x.prec - x.val for x in g.entries() if x.digits)


def _two_sided_invariants(g: GMat) -> tuple:
    F = Field(g.q)
    n = g.n
    out = []
    for j in range(n):
        left = F.diag((0,) * j + (-1,) * (n - j))
        for k in range(n):
            out.append(tuple((left @ g @ _chain(F, n, k)).elementary_divisors()))
    return tuple(out)


def _monomial_invariants(w: WeylElem, lam) -> tuple:
    n = w.N
    out = []
    for j in range(n):
        for k in range(n):
            vals = [lam[c - 1] + (c > k) - (w(c) > j) for c in range(1, n + 1)]
            out.append(tuple(sorted(vals)))
    return tuple(out)


def classify_IZtI(g: GMat, bound: int, method: str = "invariants") -> tuple:
    """The unique ``(w, a)`` with ``g`` in ``IZ w t_a I``.

    Candidates in the box are compared through the elementary divisors of
    ``D_j^-1 g D_k`` over both lattice chains (``method="invariants"``), or by
    coset representatives as in :func:`classify_KZtI1` (``"enumerate"``).
    """
    n = g.n
    vdet = g.det().valuation()
    if method == "invariants":
        target = _two_sided_invariants(g)
    elif method == "enumerate":
        F = Field(g.q, _relative_precision(g))
        ginv = g.inverse()
    else:
        raise ValueError(f"unknown method {method!r}")
    found = []
    for a in _candidate_box(n, bound):
        shift, rem = divmod(vdet - sum(a), n)
        if rem:
            continue
        lam = tuple(x + shift for x in a + (0,))
        for w in weyl_group(n):
            if method == "invariants":
                if _monomial_invariants(w, lam) == target:
                    found.append((w, a))
                continue
            wt = F.perm(w) @ F.t(a)
            # stabiliser (w t)^-1 I (w t) ∩ I, entrywise
            lower = {(r, s): _eps(r, s) for r in range(1, n + 1) for s in range(1, n + 1) if r != s}
            full = a + (0,)
            upper = {
                (r, s): max(_eps(w(r), w(s)) + full[s - 1] - full[r - 1], lower[r, s]) for (r, s) in lower
            }
            for i in _coset_reps(F, lower, upper, n):
                if in_IZ(wt @ i @ ginv, sum(a) - vdet):
                    found.append((w, a))
                    break
    if not found:
        raise BoundExceeded(f"no (w, a) with |a_i| <= {bound}")
    if len(found) > 1:
        raise ClassificationError(f"several double cosets matched: {found}")
    return found[0]


# -- regions and Hecke sums --------------------------------------------------

def s_omega_bruteforce(w: WeylElem, a, d: int = 8, q: int = 2, samples: int = 0, seed: int = 0) -> bool:
    """Test ``(w t_a) I (w t_a)^-1 ∩ K ⊆ I`` by conjugating generators of ``I``.

    Root elements ``1 + c t^v E_rs`` of ``I`` are conjugated for every unit
    digit ``c`` and every ``v`` from the lowest allowed exponent up to one past
    the spread of ``a``; each image landing in ``K`` must lie in ``I``.
    ``samples`` adds seeded random products of such elements.
    """
    a = tuple(a)
    spread = max((abs(x) for x in a), default=0)
    if d <= 2 * spread + 2:
        raise PrecisionError(f"precision {d} too small for {a}")
    F = Field(q, d)
    n = w.N
    wt = F.perm(w) @ F.t(a)
    wt_inv = wt.inverse()
    gens = []
    for r in range(1, n + 1):
        for s in range(1, n + 1):
            if r == s:
                continue
            for v in range(_eps(r, s), _eps(r, s) + 2 * spread + 2):
                for c in range(1, q):
                    gens.append(F.from_entries({(r, s): F.c(c, v)}, n))
    for r in range(1, n + 1):
        for c in range(1, q):
            gens.append(F.from_entries({(r, r): F.c(c)}, n))
    rng = random.Random(seed)
    for _ in range(samples):
        x = gens[rng.randrange(len(gens))]
        for _ in range(rng.randrange(1, 4)):
            x = x @ gens[rng.randrange(len(gens))]
        gens.append(x)
    for x in gens:
        y = wt @ x @ wt_inv
        if in_K(y) and not in_I(y):
            return False
    return True


def _root_elements(F: Field, n: int, spread: int) -> list:
    q = F.q
    gens = []
    for r in range(1, n + 1):
        for s in range(1, n + 1):
            if r == s:
                continue
            for v in range(_eps(r, s), _eps(r, s) + 2 * spread + 2):
                for c in range(1, q):
                    gens.append(F.from_entries({(r, s): F.c(c, v)}, n))
    return gens


def proper_bruteforce(w: WeylElem, b, a, d: int = 8, q: int = 2) -> bool:
    """Test ``(w t_b) I (w t_b)^-1 ∩ K ⊆ (w t_a) I (w t_a)^-1`` on root elements of ``I``."""
    spread = max(abs(x) for x in tuple(a) + tuple(b))
    if d <= 2 * spread + 2:
        raise PrecisionError(f"precision {d} too small for {a}, {b}")
    F = Field(q, d)
    n = w.N
    wb = F.perm(w) @ F.t(b)
    wa = F.perm(w) @ F.t(a)
    wb_inv, wa_inv = wb.inverse(), wa.inverse()
    for x in _root_elements(F, n, spread):
        y = wb @ x @ wb_inv
        if in_K(y, 0) and not in_I(wa_inv @ y @ wa, 0):
            return False
    return True


def gamma_matrix(F: Field) -> GMat:
    """``gamma = w2 diag(t, 1, 1)``."""
    return F.perm(W2) @ F.diag((1, 0, 0))


def hecke_action_bruteforce_trivial(
    g_op: str, f: BasisFunction, q: int = 2, bound: int | None = None, d: int = 8
) -> ModuleVector:
    """``f | T_g = sum_i i g^-1 . f`` for the trivial weight, evaluated at every ``t_b``.

    For the trivial weight ``f_{w,a}`` is the indicator of ``KZ t_a I_1``, so
    the coefficient of ``f_{classify(b), b}`` is the number of coset
    representatives ``i`` with ``t_b i g^-1`` in ``KZ t_a I_1``, mod p.
    """
    F = Field(q, d)
    a = tuple(f.a)
    if bound is None:
        bound = 2 * max(abs(x) for x in a) + 2
    if g_op == "w1":
        g_inv = F.perm(W1)
        reps = [F.from_entries({(1, 2): F.c(c)}) for c in range(q)]
    elif g_op == "gamma":
        g_inv = gamma_matrix(F).inverse()
        reps = [F.identity()]
    else:
        raise ValueError(f"unsupported operator {g_op!r}")
    tails = [i @ g_inv for i in reps]
    out = {}
    for b in _candidate_box(3, bound):
        tb = F.t(b)
        hits = sum(1 for tail in tails if classify_KZtI1(tb @ tail) == a)
        if hits % q:
            out[BasisFunction(classify(b), b)] = hits
    # the image must vanish outside the box: the sum is supported near a
    for b, c in out.items():
        if max(abs(x) for x in b.a) == bound:
            raise BoundExceeded(f"support reaches the search bound at {b.a}")
    return ModuleVector(q, out)


# -- coset-membership claims -------------------------------------------------

def _unipotent(F: Field, entries: dict) -> GMat:
    return F.from_entries({rs: F.c(c, v) for rs, (c, v) in entries.items() if c % F.q})


def _claim_matrix(kind: str, a, s: int, s2: int, F: Field) -> GMat:
    """The group element whose double coset a claim of ``kind`` asserts."""
    a1, a2 = a
    w1 = F.perm(W1)
    if kind == "omega1_case1":
        return F.t((a2, a1)) @ _unipotent(F, {(1, 2): (s, 0)}) @ w1
    if kind in ("omega1_case2_unit", "omega1_case3"):
        return F.t(a) @ _unipotent(F, {(1, 2): (s, 0)}) @ w1
    if kind == "omega1_case2_p":
        return F.t(a) @ _unipotent(F, {(1, 2): (s, 1)}) @ w1
    if kind == "semireg_t01m":
        return F.t((a2, a1 - 1)) @ _unipotent(F, {(2, 3): (s, 0)}) @ F.t((0, 1)) @ w1
    if kind in ("regular_t1", "regular_t2", "regular_t1t2"):
        i = _unipotent(F, {(1, 2): (s, 0), (1, 3): (s2, 0)})
        return F.t((a1 - 1, a2)) @ i @ F.t((1, 0))
    if kind == "regular_reduced":
        return F.t((a2 + 1, a1 - 1)) @ _unipotent(F, {(1, 3): (s2, -1)})
    raise ValueError(f"unknown claim kind {kind!r}")


# preconditions on (a1, a2) and on the unit digits s (t1) and s2 (t2)
_CLAIM_SHAPE = {
    "omega1_case1": (lambda a: a[0] > a[1], True, False),
    "omega1_case2_unit": (lambda a: a[0] < a[1], True, False),
    "omega1_case2_p": (lambda a: a[0] < a[1], True, False),
    "omega1_case3": (lambda a: a[0] == a[1], True, False),
    "semireg_t01m": (lambda a: a[0] <= 0, True, False),
    "regular_t1": (lambda a: a[0] <= a[1] <= 0, True, False),
    "regular_t2": (lambda a: a[0] <= a[1] <= 0, False, True),
    "regular_t1t2": (lambda a: a[0] <= a[1] <= 0, True, True),
    "regular_reduced": (lambda a: a[0] <= a[1] <= 0, False, True),
}

CLAIM_KINDS = ("gl2_identity",) + tuple(_CLAIM_SHAPE)


@dataclass(frozen=True)
class Claim:
    """``kind; omega; a1,a2; key=val,...; expected`` as one record.

    ``expected`` is the target ``a`` of ``KZ t_a I_1`` or, for the matrix
    identity, the word ``holds``. Keys: ``q`` (residue order), ``s`` and
    ``s2`` (nonzero digits for the entries ``t1``, ``t2``).
    """

    kind: str
    omega: WeylElem | None
    a: tuple
    params: tuple
    expected: object
    line: int = 0

    def param(self, key: str, default: int) -> int:
        return dict(self.params).get(key, default)

    def __str__(self) -> str:
        w = self.omega.name() if self.omega else "-"
        a = ",".join(map(str, self.a)) if self.a else "-"
        ps = ",".join(f"{k}={v}" for k, v in self.params) or "-"
        exp = self.expected if isinstance(self.expected, str) else ",".join(map(str, self.expected))
        return f"{self.kind}; {w}; {a}; {ps}; {exp}"


@dataclass
class ClaimResult:
    claim: Claim
    ok: bool
    got: object = None
    error: str = ""

    def to_json(self) -> dict:
        got = self.got if self.got is None or isinstance(self.got, str) else list(self.got)
        return {"line": self.claim.line, "claim": str(self.claim), "ok": self.ok, "got": got, "error": self.error}


def parse_claim(text: str, line: int = 0) -> Claim:
    from .lattice import parse_weyl

    parts = [p.strip() for p in text.split(";")]
    if len(parts) != 5:
        raise ValueError(f"line {line}: expected 5 fields, got {len(parts)}")
    kind, w, a, params, expected = parts
    if kind not in CLAIM_KINDS:
        raise ValueError(f"line {line}: unknown claim kind {kind!r}")
    omega = None if w in ("", "-") else parse_weyl(w)
    vec = () if a in ("", "-") else tuple(int(x) for x in a.split(","))
    kv = []
    if params not in ("", "-"):
        for item in params.split(","):
            k, v = item.split("=")
            kv.append((k.strip(), int(v)))
    if expected.lower() in ("holds", "true"):
        exp: object = "holds"
    else:
        exp = tuple(int(x) for x in expected.split(","))
    return Claim(kind, omega, vec, tuple(sorted(kv)), exp, line)


def parse_claims(text: str) -> list:
    out = []
    for n, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if body:
            out.append(parse_claim(body, n))
    return out


def bundled_claims() -> str:
    from importlib.resources import files

    return files("gl3hecke").joinpath("data/claims.txt").read_text(encoding="utf-8")


def gl2_identity_holds(s: int, q: int, d: int = 8) -> bool:
    """``w u(x) = u(x^-1) diag(-x^-1, x) u^-(x^-1)`` in GL_2 for the unit ``x = s + t``."""
    F = Field(q, d)
    x = F.series(0, [s, 1])
    xi = x.inverse()
    one, zero = F.c(1), F.zero()
    lhs = GMat([[zero, one], [one, zero]]) @ GMat([[one, x], [zero, one]])
    rhs = (
        GMat([[one, xi], [zero, one]])
        @ GMat([[-xi, zero], [zero, x]])
        @ GMat([[one, zero], [xi, one]])
    )
    return lhs.equals(rhs)


def _evaluate(claim: Claim, q: int, d: int):
    s, s2 = claim.param("s", 1), claim.param("s2", 1)
    if claim.kind == "gl2_identity":
        if s % q == 0:
            raise ValueError("the identity needs a unit")
        return "holds" if gl2_identity_holds(s, q, d) else "fails"
    a = claim.a
    if len(a) != 2:
        raise ValueError("claims are stated for N = 3")
    if claim.omega is not None:
        from .lattice import s_omega_contains

        if not s_omega_contains(claim.omega, a):
            raise ValueError(f"{a} is not in S_{claim.omega.name()}")
    cond, uses_s, uses_s2 = _CLAIM_SHAPE[claim.kind]
    if not cond(a):
        raise ValueError(f"{claim.kind} does not apply at {a}")
    if (uses_s and s % q == 0) or (uses_s2 and s2 % q == 0):
        raise ValueError("entry digits must be units")
    g = _claim_matrix(claim.kind, a, s if uses_s else 0, s2 if uses_s2 else 0, Field(q, d))
    return classify_KZtI1(g)


def verify_coset_claim(claim: Claim, d: int = 8, q: int | None = None) -> ClaimResult:
    """Classify the claim's element and compare with the stated target."""
    q = claim.param("q", 2) if q is None else q
    try:
        got = _evaluate(claim, q, d)
    except (ValueError, ArithmeticError, ClassificationError, BoundExceeded) as exc:
        return ClaimResult(claim, False, None, f"{type(exc).__name__}: {exc}")
    return ClaimResult(claim, got == claim.expected, got)


def verify_claims(claims: list, d: int = 8, q: int | None = None) -> list:
    return [verify_coset_claim(c, d, q) for c in claims]
