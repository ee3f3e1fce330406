"""The quotient B~_n: pure-braid combing, Lambda-hat and normal forms.

Pure braids are combed by peeling off the last strand.  Forgetting strand n
turns a pure word p into p' in P_{n-1}.  The quotient q = p p'^-1 lies in
the free group U_n on the squares Z_in^2, i < n.  On U_n the Artin action
sends Gamma_n to v Gamma_n v^-1.  The map q -> v (with Gamma_n deleted) is
an isomorphism onto F_{n-1}.  It sends Z_in^2 to
y_i = P_i^-1 Gamma_i P_i, where P_i = Gamma_{i+1} ... Gamma_{n-1}.
Inverting that triangular change of basis,

    Gamma_i = (y_{n-1} ... y_{i+1}) y_i (y_{n-1} ... y_{i+1})^-1,

rewrites v as a word in the y's, which lists the factors Z_in^{+-2}.

Lambda-hat multiplies the G(n) images s_ij of the combed factors.  Together
with the permutation it gives an exact normal form for B~_n, n >= 4.  For
n <= 3 there are no transversal pairs and B~_n = B_n, so equality there is
decided in B_n directly.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass, field
from typing import Protocol, Sequence

from . import _kernel
from .extension import (
    G0GraphElement, GnElement, g0g_act_braid, g0g_identity,
    g0g_inv, g0g_mul, g0g_tau, gn_act_word, gn_identity, gn_inv, gn_mul,
    gn_nu, gn_s_ij, parse_gn,
)
from .words import (
    BraidWord, HalfTwist, Permutation, braid_eq, catalog_word, psi,
)

__all__ = [
    "PureFactorList", "BTildeNF", "XiEntry", "z_word", "comb", "recompose",
    "lambda_hat", "canonical_lift", "btilde_nf", "btilde_eq", "c_word",
    "xi", "xi_alternates", "XI_TRANSPORTS", "GnModule", "G0Module",
    "CheckResult", "prime_axioms_check", "prime_criterion_check", "lemma_u",
    "lambda_of_factors", "gn_preimage", "nf_word", "parse_btilde_nf",
    "parse_pure_factors",
]


# ---------------------------------------------------------------------------
# Combing


def z_word(i: int, j: int, n: int) -> BraidWord:
    """The half-twist Z_ij = (X_1) conjugated by X_2..X_{j-1} X_1..X_{i-1}."""
    if not 1 <= i < j <= n:
        raise ValueError(f"need 1 <= i < j <= n, got ({i}, {j}, {n})")
    conj = tuple(range(2, j)) + tuple(range(1, i))
    return BraidWord(n, _kernel.inverse(conj) + (1,) + conj)


def _z_square_short(i: int, j: int) -> tuple[int, ...]:
    # Same braid as z_word(i, j)^2, written as (X_i^2) conjugated by
    # X_{i+1}..X_{j-1}; used for recomposition because it is shorter.
    conj = tuple(range(i + 1, j))
    return _kernel.inverse(conj) + (i, i) + conj


@dataclass(frozen=True)
class PureFactorList:
    """Factors (i, j, sign) meaning Z_ij^{2 sign}, multiplied left to right."""

    n: int
    factors: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        for i, j, s in self.factors:
            if not (1 <= i < j <= self.n and s in (1, -1)):
                raise ValueError(f"bad factor {(i, j, s)}")

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return " ".join(f"Z{i},{j}^{2 * s}" for i, j, s in self.factors)


def _forget_last(n: int, letters: Sequence[int]) -> tuple[int, ...]:
    """Delete strand n (which must start and end at position n)."""
    pos = n
    out = []
    for k in letters:
        a = abs(k)
        if a == pos:
            pos = a + 1
        elif a + 1 == pos:
            pos = a
        elif a > pos:
            out.append(k - 1 if k > 0 else k + 1)
        else:
            out.append(k)
    if pos != n:
        raise ValueError("word is not pure")
    return tuple(out)


@functools.lru_cache(maxsize=None)
def _gamma_in_y(n: int) -> tuple[tuple[int, ...], ...]:
    # Gamma_i written in the letters y_1..y_{n-1}.
    out = []
    for i in range(1, n):
        head = tuple(range(n - 1, i - 1, -1))
        tail = tuple(range(n - 1, i, -1))
        out.append(_kernel.concat(head, _kernel.inverse(tail)))
    return tuple(out)


def _peel(n: int, letters: tuple[int, ...]) -> tuple[list, tuple[int, ...]]:
    rest = _forget_last(n, letters)
    q = letters + _kernel.inverse(rest)
    image = _kernel.act_word((n,), q)
    half = (len(image) - 1) // 2
    if image[half] != n or _kernel.inverse(image[:half]) != image[half + 1:]:
        raise AssertionError("strand n does not act by conjugation")
    v = tuple(x for x in image[:half] if abs(x) != n)
    v = _kernel.reduce(v)
    u = _kernel.substitute(v, _gamma_in_y(n))
    return [(abs(x), n, 1 if x > 0 else -1) for x in u], rest


def comb(w: BraidWord) -> PureFactorList:
    """Write a pure braid as a product of the generators Z_ij^{+-2}."""
    if not psi(w).is_identity():
        raise ValueError("comb needs a pure braid")
    factors: list = []
    letters = w.letters
    for m in range(w.strands, 1, -1):
        if not letters:
            break
        peeled, letters = _peel(m, letters)
        factors.extend(peeled)
    return PureFactorList(w.strands, tuple(factors))


def recompose(f: PureFactorList) -> BraidWord:
    out: list[int] = []
    for i, j, s in f.factors:
        sq = _z_square_short(i, j)
        out.extend(sq if s > 0 else _kernel.inverse(sq))
    return BraidWord(f.n, tuple(out))


@functools.lru_cache(maxsize=None)
def _s_table(n: int) -> dict[tuple[int, int, int], GnElement]:
    table = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            s = gn_s_ij(i, j, n)
            table[(i, j, 1)] = s
            table[(i, j, -1)] = gn_inv(s)
    return table


def lambda_of_factors(f: PureFactorList) -> GnElement:
    table = _s_table(f.n)
    out = gn_identity(f.n)
    for factor in f.factors:
        out = gn_mul(out, table[factor])
    return out


def lambda_hat(w: BraidWord) -> GnElement:
    """Image of a pure braid in G(n); defined on B~_n's pure subgroup."""
    return lambda_of_factors(comb(w))


# ---------------------------------------------------------------------------
# Normal form


def canonical_lift(perm: Permutation) -> BraidWord:
    """Positive insertion-sort word with the given permutation."""
    n = perm.n
    target = [0] * n
    for strand in range(1, n + 1):
        target[perm(strand) - 1] = strand
    current = list(range(1, n + 1))
    letters = []
    for p in range(n):
        q = current.index(target[p])
        while q > p:
            current[q - 1], current[q] = current[q], current[q - 1]
            letters.append(q)
            q -= 1
    word = BraidWord(n, tuple(letters))
    assert psi(word) == perm
    return word


@dataclass(frozen=True)
class BTildeNF:
    perm: Permutation
    coords: GnElement

    def __str__(self) -> str:
        return f"perm={list(self.perm.images)} coords={self.coords}"


@functools.lru_cache(maxsize=1 << 16)
def _nf_step(n: int, images: tuple[int, ...], k: int) -> tuple[tuple[int, ...], GnElement]:
    # With L the canonical lift, L(p) X_k = q L(p') for a short pure word q.
    lift = canonical_lift(Permutation(images))
    moved = lift * BraidWord(n, (k,))
    nxt = psi(moved)
    q = moved * canonical_lift(nxt).inverse()
    return nxt.images, lambda_hat(q)


def btilde_nf(w: BraidWord) -> BTildeNF:
    """Normal form (psi(w), Lambda-hat of w L(psi(w))^-1).

    Built one letter at a time: if w = p L(perm) then
    w X_k = p (L(perm) X_k L(perm')^-1) L(perm'), so only short pure words
    are ever combed.
    """
    n = w.strands
    images = tuple(range(1, n + 1))
    coords = gn_identity(n)
    for k in w.letters:
        images, step = _nf_step(n, images, k)
        coords = gn_mul(coords, step)
    return BTildeNF(Permutation(images), coords)


def btilde_eq(w1: BraidWord, w2: BraidWord) -> bool:
    if w1.strands != w2.strands:
        raise ValueError("strand mismatch")
    if w1.strands <= 3:
        return braid_eq(w1, w2)
    return btilde_nf(w1) == btilde_nf(w2)


@functools.lru_cache(maxsize=None)
def _coordinate_words(n: int) -> tuple[BraidWord, BraidWord, tuple[BraidWord, ...]]:
    # Pure words mapping to nu, s1 and u_1..u_{n-1} under Lambda-hat.
    if n < 3:
        raise ValueError("coordinate words need n >= 3")
    sq = {(i, j): z_word(i, j, n) ** 2 for i, j in ((1, 2), (2, 3))}
    s1, nu = sq[(1, 2)], c_word(n)
    us = {k: z_word(1, k + 1, n) ** 2 * (z_word(1, k, n) ** 2).inverse()
          for k in range(2, n)}
    us[1] = us[2].inverse() * nu * sq[(2, 3)] * s1.inverse()
    return nu, s1, tuple(us[k] for k in range(1, n))


def gn_preimage(x: GnElement) -> BraidWord:
    """A pure braid word whose Lambda-hat image is ``x`` (n >= 3)."""
    nu, s1, us = _coordinate_words(x.n)
    w = nu ** x.eps * s1 ** x.a
    for u, e in zip(us, x.b):
        w = w * u ** e
    return w


def nf_word(nf: "BTildeNF") -> BraidWord:
    """A braid word with the given normal form."""
    return gn_preimage(nf.coords) * canonical_lift(nf.perm)


_NF_TEXT = re.compile(r"^\s*perm=\[([\d,\s]*)\]\s+coords=(.*)$")


def parse_btilde_nf(text: str) -> "BTildeNF":
    m = _NF_TEXT.match(text)
    if not m:
        raise ValueError(f"bad normal form text {text!r}")
    images = tuple(int(x) for x in m.group(1).split(",") if x.strip())
    perm = Permutation(images)
    return BTildeNF(perm, parse_gn(m.group(2), perm.n))


_Z_TOKEN = re.compile(r"^Z(\d+),(\d+)\^(-?2)$")


def parse_pure_factors(text: str, n: int) -> PureFactorList:
    text = text.strip()
    if text in ("", "1"):
        return PureFactorList(n, ())
    factors = []
    for tok in text.split():
        m = _Z_TOKEN.match(tok)
        if not m:
            raise ValueError(f"bad factor token {tok!r}")
        factors.append((int(m.group(1)), int(m.group(2)), int(m.group(3)) // 2))
    return PureFactorList(n, tuple(factors))


def c_word(n: int) -> BraidWord:
    """The central element c = [X_1^2, X_2^2]."""
    a, b = BraidWord(n, (1, 1)), BraidWord(n, (2, 2))
    return a * b * a.inverse() * b.inverse()


# ---------------------------------------------------------------------------
# The xi elements of B~_9 (words in T-letters)


def _tconj(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(-x for x in reversed(b)) + a + b


def _sq(k: int) -> tuple[int, int]:
    return (k, k)


# Each xi_i is X^2 Y^-2 or X^-2 Y^2 for a triangle of half-twists whose
# third side is T_i.
_XI_MAIN: dict[int, tuple[int, ...]] = {
    1: _tconj(_sq(2), (-1,)) + _sq(-2),
    2: _sq(-1) + _tconj(_sq(1), (-2,)),
    3: _sq(1) + _tconj(_sq(-1), (-3,)),
    4: _tconj(_sq(4), (-6,)) + _sq(-6),
    5: _tconj(_sq(8), (5,)) + _sq(-8),
    6: _sq(-4) + _tconj(_sq(4), (-6,)),
    7: _sq(-8) + _tconj(_sq(8), (-7,)),
    8: _sq(-9) + _tconj(_sq(9), (-8,)),
    9: _sq(5) + _tconj(_sq(-5), (-9,)),
}

# Alternative expressions: (name, T-word, relation) where relation says how
# the word compares with xi_i: "equal", "inverse-times-c" or "c-times".
_XI_ALTERNATES: dict[int, list[tuple[str, tuple[int, ...], str]]] = {
    1: [("T1-conjugate", _tconj(_sq(2), (1,)) + _sq(-2), "c-times")],
    2: [("via-T4", _sq(4) + _tconj(_sq(-4), (-2,)), "equal"),
        ("via-T3", _sq(-3) + _tconj(_sq(3), (-2,)), "equal")],
    6: [("via-T7", _sq(7) + _tconj(_sq(-7), (-6,)), "inverse-times-c")],
}

# (source, conjugating T-word, target): (xi_source)_word = xi_target
XI_TRANSPORTS = (
    (4, (-2, 3, -7, 8), 5),
    (2, (4, 3, -5, -7), 8),
    (3, (-2, 4, -5, 8), 7),
)


@dataclass(frozen=True)
class XiEntry:
    index: int
    tword: tuple[int, ...]
    expression: BraidWord = field(repr=False)
    coords: GnElement

    def __str__(self) -> str:
        t = " ".join(f"t{abs(k)}" + ("^-1" if k < 0 else "") for k in self.tword)
        return f"xi{self.index} = {t} -> {self.coords}"


@functools.lru_cache(maxsize=None)
def xi(i: int) -> XiEntry:
    if i not in _XI_MAIN:
        raise ValueError(f"xi index {i} out of range 1..9")
    tword = _XI_MAIN[i]
    w = catalog_word(tword)
    return XiEntry(i, tword, w, lambda_hat(w))


def xi_alternates(i: int) -> list[tuple[str, XiEntry, str]]:
    out = []
    for name, tword, relation in _XI_ALTERNATES.get(i, []):
        w = catalog_word(tword)
        out.append((name, XiEntry(i, tword, w, lambda_hat(w)), relation))
    return out


# ---------------------------------------------------------------------------
# Prime-element checks


class BTildeModule(Protocol):
    """A group with a decidable equality acted on by B~_n on the right."""

    strands: int

    def identity(self): ...
    def mul(self, x, y): ...
    def inv(self, x): ...
    def act(self, w: BraidWord, x): ...
    def central(self): ...


class GnModule:
    """G(n) acted on by X-letter words."""

    def __init__(self, n: int) -> None:
        self.strands = n

    def identity(self) -> GnElement:
        return gn_identity(self.strands)

    def mul(self, x: GnElement, y: GnElement) -> GnElement:
        return gn_mul(x, y)

    def inv(self, x: GnElement) -> GnElement:
        return gn_inv(x)

    def act(self, w: BraidWord, x: GnElement) -> GnElement:
        return gn_act_word(w, x)

    def central(self) -> GnElement:
        return gn_nu(self.strands)


class G0Module:
    """G0(9) acted on by X-letter words through the frame translation."""

    strands = 9

    def identity(self) -> G0GraphElement:
        return g0g_identity()

    def mul(self, x: G0GraphElement, y: G0GraphElement) -> G0GraphElement:
        return g0g_mul(x, y)

    def inv(self, x: G0GraphElement) -> G0GraphElement:
        return g0g_inv(x)

    def act(self, w: BraidWord, x: G0GraphElement) -> G0GraphElement:
        return g0g_act_braid(w, x)

    def central(self) -> G0GraphElement:
        return g0g_tau()


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str  # "pass", "fail" or "not checked"
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def _result(name: str, ok: bool, lhs, rhs) -> CheckResult:
    return CheckResult(name, "pass" if ok else "fail",
                       "" if ok else f"lhs={lhs} rhs={rhs}")


def _centralizer_words(X: HalfTwist) -> list[tuple[str, BraidWord]]:
    n, b = X.strands, X.base
    conj = X.conjugator
    out = [("X^2", BraidWord(n, (b, b)).conj(conj))]
    nb = b + 1 if b + 1 <= n - 1 else b - 1
    if 1 <= nb <= n - 1:
        out.append(("sigma", BraidWord(n, (nb, b, b, nb)).conj(conj)))
    for j in range(1, n):
        if abs(j - b) >= 2:
            out.append((f"frame-X{j}", BraidWord(n, (j,)).conj(conj)))
    return out


def prime_axioms_check(module: BTildeModule, g, X: HalfTwist,
                       adjacent: Sequence[HalfTwist],
                       disjoint: Sequence[HalfTwist]) -> list[CheckResult]:
    """Check the prime-element axioms for ``g`` with supporting half-twist X.

    Also checks the consequences g_{Y^-2} = g tau and [g, g_{Y^-1}] = tau
    for the adjacent half-twists, and that g is fixed by the centralizer
    generators of X (X^2, sigma and the disjoint frame letters).
    """
    if X.strands != module.strands:
        raise ValueError("half-twist and module disagree on strand count")
    act, mul, inv = module.act, module.mul, module.inv
    tau = module.central()
    xw = X.word()
    out = []
    lhs = act(xw.inverse(), g)
    out.append(_result("(1) g_{X^-1} = g^-1 tau", lhs == mul(inv(g), tau),
                       lhs, mul(inv(g), tau)))
    for idx, Y in enumerate(adjacent, start=1):
        yw = Y.word()
        lhs = act(xw * yw.inverse() * xw.inverse(), g)
        rhs = mul(inv(act(xw, g)), act(xw * yw.inverse(), g))
        out.append(_result(f"(2a) Y{idx}", lhs == rhs, lhs, rhs))
        lhs = act(yw.inverse() * xw.inverse(), g)
        rhs = mul(inv(g), act(yw.inverse(), g))
        out.append(_result(f"(2b) Y{idx}", lhs == rhs, lhs, rhs))
        lhs = act(yw.inverse() * yw.inverse(), g)
        out.append(_result(f"g_(Y^-2) = g tau, Y{idx}", lhs == mul(g, tau),
                           lhs, mul(g, tau)))
        h = act(yw.inverse(), g)
        comm = mul(mul(g, h), mul(inv(g), inv(h)))
        out.append(_result(f"[g, g_(Y^-1)] = tau, Y{idx}", comm == tau, comm, tau))
    for idx, Z in enumerate(disjoint, start=1):
        lhs = act(Z.word(), g)
        out.append(_result(f"(3) Z{idx}", lhs == g, lhs, g))
    for name, w in _centralizer_words(X):
        lhs = act(w, g)
        out.append(_result(f"fixed by {name}", lhs == g, lhs, g))
    return out


def prime_criterion_check(module: BTildeModule, S) -> list[CheckResult]:
    """Conditions (1a)-(4) of the prime criterion for the frame X_1..X_{n-1}.

    Condition (0), that the orbit of S generates the group, is not checked.
    """
    n = module.strands
    act, mul, inv = module.act, module.mul, module.inv

    def X(*letters: int) -> BraidWord:
        return BraidWord(n, letters)

    out = [CheckResult("(0) orbit generates", "not checked")]
    lhs = act(X(-2, -1), S)
    rhs = mul(inv(S), act(X(-2), S))
    out.append(_result("(1a)", lhs == rhs, lhs, rhs))
    lhs = act(X(1, -2, -1), S)
    rhs = mul(inv(act(X(1), S)), act(X(1, -2), S))
    out.append(_result("(1b)", lhs == rhs, lhs, rhs))
    tau = mul(S, act(X(-1), S))
    T = act(X(-2), S)
    lhs = act(X(1, 1), tau)
    out.append(_result("(2a)", lhs == tau, lhs, tau))
    lhs = mul(mul(inv(T), tau), T)
    rhs = inv(act(X(1), tau))
    out.append(_result("(2b)", lhs == rhs, lhs, rhs))
    ok3 = all(act(X(j), S) == S for j in range(3, n))
    out.append(CheckResult("(3)", "pass" if ok3 else "fail"))
    lhs = act(c_word(n), S)
    out.append(_result("(4)", lhs == S, lhs, S))
    return out


def lemma_u(n: int = 9) -> BraidWord:
    """u = (X~_1^2) conjugated by X~_2^-1, times X~_2^-2."""
    return BraidWord(n, (2, 1, 1, -2, -2, -2))
