"""Central extensions G(n) and G0(9) and the braid actions on them.

G(n) has generators s1, u1..u_{n-1} and a central nu of order 2.  All
generator pairs commute except [s1, u2] = [u_i, u_{i+1}] = nu.  Elements are
kept in the normal form ``nu^eps s1^a u1^b1 ... u_{n-1}^b_{n-1}``.  Moving
a letter to the left across a non-commuting letter costs one nu.  The
correction for a product x*y is therefore the bilinear form

    a_y * b_x[2] + sum_i b_y[i] * b_x[i+1]   (mod 2).

G0(9) has generators g_i for i in {1,2,3,5,6,7,8,9} and a central tau.
[g_i, g_j] = tau when the half-twists T_i and T_j share one endpoint and
1 otherwise.  The normal form is ``tau^eps g1^b1 ... g9^b9`` (no g4).
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .words import BraidWord, catalog_T, classify_pair, T4_DEFINING_WORD

__all__ = [
    "GnElement", "gn_identity", "gn_nu", "gn_s1", "gn_u", "gn_mul", "gn_inv",
    "gn_pow", "gn_commutator", "gn_s_ij", "gn_act", "gn_act_word",
    "gn_generators", "parse_gn", "G0_INDICES", "G0GraphElement",
    "adjacency_table", "g0g_identity", "g0g_tau", "g0g_gen", "g0g_mul",
    "g0g_inv", "g0g_pow", "g0g_commutator", "g0g_act_T", "g0g_act_tword",
    "g0g_act_braid", "parse_g0", "FRAME_IN_T",
]


# ---------------------------------------------------------------------------
# G(n)


@dataclass(frozen=True)
class GnElement:
    n: int
    eps: int
    a: int
    b: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError("G(n) needs n >= 2")
        if len(self.b) != self.n - 1:
            raise ValueError(f"expected {self.n - 1} u-exponents, got {len(self.b)}")
        object.__setattr__(self, "eps", self.eps % 2)
        object.__setattr__(self, "b", tuple(int(x) for x in self.b))

    def __mul__(self, other: "GnElement") -> "GnElement":
        return gn_mul(self, other)

    def inverse(self) -> "GnElement":
        return gn_inv(self)

    def is_central(self) -> bool:
        return self.a == 0 and not any(self.b)

    def __str__(self) -> str:
        parts = [f"v^{self.eps}", f"s1^{self.a}"]
        parts += [f"u{i}^{e}" for i, e in enumerate(self.b, start=1)]
        return " ".join(parts)


def gn_identity(n: int) -> GnElement:
    return GnElement(n, 0, 0, (0,) * (n - 1))


def gn_nu(n: int) -> GnElement:
    return GnElement(n, 1, 0, (0,) * (n - 1))


def gn_s1(n: int) -> GnElement:
    return GnElement(n, 0, 1, (0,) * (n - 1))


def gn_u(n: int, i: int) -> GnElement:
    if not 1 <= i <= n - 1:
        raise ValueError(f"u{i} out of range for n={n}")
    b = [0] * (n - 1)
    b[i - 1] = 1
    return GnElement(n, 0, 0, tuple(b))


def gn_generators(n: int) -> list[GnElement]:
    """``[s1, u1, ..., u_{n-1}]``."""
    return [gn_s1(n)] + [gn_u(n, i) for i in range(1, n)]


def _gn_cocycle(x: GnElement, y: GnElement) -> int:
    c = y.a * x.b[1] if x.n > 2 else 0
    for i in range(x.n - 2):
        c += y.b[i] * x.b[i + 1]
    return c % 2


def _same_n(x: GnElement, y: GnElement) -> None:
    if x.n != y.n:
        raise ValueError(f"n mismatch: {x.n} vs {y.n}")


def gn_mul(x: GnElement, y: GnElement) -> GnElement:
    _same_n(x, y)
    return GnElement(
        x.n,
        x.eps + y.eps + _gn_cocycle(x, y),
        x.a + y.a,
        tuple(p + q for p, q in zip(x.b, y.b)),
    )


def gn_pow(x: GnElement, k: int) -> GnElement:
    # x^k = nu^(k eps + C(k,2) c(x,x)) s1^(ka) u^(kb); bilinearity makes the
    # binomial formula valid for negative k as well.
    c = _gn_cocycle(x, x)
    return GnElement(x.n, k * x.eps + c * (k * (k - 1) // 2),
                     k * x.a, tuple(k * t for t in x.b))


def gn_inv(x: GnElement) -> GnElement:
    return gn_pow(x, -1)


def gn_product(xs: Iterable[GnElement], n: int) -> GnElement:
    out = gn_identity(n)
    for x in xs:
        out = gn_mul(out, x)
    return out


def gn_commutator(x: GnElement, y: GnElement) -> GnElement:
    _same_n(x, y)
    return gn_mul(gn_mul(x, y), gn_mul(gn_inv(x), gn_inv(y)))


def gn_s_ij(i: int, j: int, n: int) -> GnElement:
    """The image of the squared half-twist Z_ij^2 in G(n).

    s_12 = s1, s_1j = u_{j-1}...u_2 s1, s_2j = nu u_{j-1}...u_1 s1 and, for
    i >= 3, s_ij = nu u_{j-1}...u_1 u_{i-1}...u_2 s1.
    """
    if not 1 <= i < j <= n:
        raise ValueError(f"need 1 <= i < j <= n, got ({i}, {j}, {n})")
    u = functools.partial(gn_u, n)
    if (i, j) == (1, 2):
        return gn_s1(n)
    if i == 1:
        factors = [u(t) for t in range(j - 1, 1, -1)]
    elif i == 2:
        factors = [gn_nu(n)] + [u(t) for t in range(j - 1, 0, -1)]
    else:
        factors = ([gn_nu(n)] + [u(t) for t in range(j - 1, 0, -1)]
                   + [u(t) for t in range(i - 1, 1, -1)])
    return gn_product(factors + [gn_s1(n)], n)


def _positive_table(n: int, k: int) -> list[GnElement]:
    """Images of [s1, u1, ..., u_{n-1}] under the half-twist X~_k."""
    images = gn_generators(n)
    nu = gn_nu(n)
    u = functools.partial(gn_u, n)
    if k == 2:
        images[0] = gn_mul(u(2), gn_s1(n))
    if k >= 2:
        images[k - 1] = gn_mul(u(k), u(k - 1))
    images[k] = gn_mul(gn_inv(u(k)), nu)
    if k + 1 <= n - 1:
        images[k + 1] = gn_mul(u(k), u(k + 1))
    return images


def _apply_images(images: Sequence[GnElement], x: GnElement) -> GnElement:
    out = gn_pow(gn_nu(x.n), x.eps)
    out = gn_mul(out, gn_pow(images[0], x.a))
    for img, e in zip(images[1:], x.b):
        if e:
            out = gn_mul(out, gn_pow(img, e))
    return out


def _solve_integer(matrix: list[list[int]], rhs: list[int]) -> list[int]:
    """Solve an integer system with unimodular matrix by exact elimination."""
    size = len(matrix)
    aug = [[Fraction(v) for v in row] + [Fraction(r)] for row, r in zip(matrix, rhs)]
    for col in range(size):
        piv = next(r for r in range(col, size) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        for r in range(size):
            if r != col and aug[r][col] != 0:
                f = aug[r][col] / aug[col][col]
                aug[r] = [p - f * q for p, q in zip(aug[r], aug[col])]
    sol = [aug[r][size] / aug[r][r] for r in range(size)]
    if any(s.denominator != 1 for s in sol):
        raise ArithmeticError("action matrix is not unimodular")
    return [int(s) for s in sol]


def _inverse_table(n: int, k: int) -> list[GnElement]:
    """Images under X~_k^-1, forced by requiring X~_k X~_k^-1 to act trivially.

    The abelianized action is an integer matrix; its inverse gives the
    (s1, u) exponents and the nu bit is then fixed by one round trip.
    """
    forward = _positive_table(n, k)
    rows = [[img.a for img in forward]] + [
        [img.b[r] for img in forward] for r in range(n - 1)]
    out = []
    for col, gen in enumerate(gn_generators(n)):
        target = [1 if r == col else 0 for r in range(n)]
        coords = _solve_integer(rows, target)
        z = GnElement(n, 0, coords[0], tuple(coords[1:]))
        if _apply_images(forward, z) != gen:
            z = gn_mul(gn_nu(n), z)
        assert _apply_images(forward, z) == gen
        out.append(z)
    return out


@functools.lru_cache(maxsize=None)
def _table(n: int, k: int) -> tuple[GnElement, ...]:
    if not 1 <= abs(k) <= n - 1:
        raise ValueError(f"generator index {k} out of range for n={n}")
    return tuple(_positive_table(n, k) if k > 0 else _inverse_table(n, -k))


def gn_act(k: int, x: GnElement) -> GnElement:
    """Image of ``x`` under X~_k (k > 0) or its inverse (k < 0)."""
    return _apply_images(_table(x.n, k), x)


def gn_act_word(w: BraidWord, x: GnElement) -> GnElement:
    if w.strands != x.n:
        raise ValueError(f"strand mismatch: {w.strands} vs {x.n}")
    for k in w.letters:
        x = gn_act(k, x)
    return x


_GN_TOKEN = re.compile(r"^(v|s1|u\d+)(?:\^(-?\d+))?$")


def parse_gn(text: str, n: int) -> GnElement:
    """Parse a product of ``v``, ``s1``, ``u<i>`` tokens with optional powers.

    The canonical rendering ``v^e s1^a u1^b1 ...`` is one such product.
    """
    out = gn_identity(n)
    text = text.strip()
    if text in ("", "1"):
        return out
    for tok in text.split():
        m = _GN_TOKEN.match(tok)
        if not m:
            raise ValueError(f"bad G(n) token {tok!r}")
        name, power = m.group(1), int(m.group(2) or 1)
        if name == "v":
            gen = gn_nu(n)
        elif name == "s1":
            gen = gn_s1(n)
        else:
            gen = gn_u(n, int(name[1:]))
        out = gn_mul(out, gn_pow(gen, power))
    return out


# ---------------------------------------------------------------------------
# G0(9)

G0_INDICES = (1, 2, 3, 5, 6, 7, 8, 9)
_SLOT = {i: s for s, i in enumerate(G0_INDICES)}

# X-letters of the standard frame written as words in T-letters.
FRAME_IN_T = {
    1: (1,), 2: (2,), 3: (-2, 3, 2), 4: (5,), 5: (9,), 6: (9, 8, -9),
    7: (7,), 8: (6,),
}


@functools.lru_cache(maxsize=None)
def adjacency_table() -> dict[tuple[int, int], str]:
    """Classification of every ordered pair of catalog half-twists."""
    table = {}
    for i in range(1, 10):
        for j in range(1, 10):
            if i != j:
                table[(i, j)] = classify_pair(catalog_T(i).halftwist,
                                              catalog_T(j).halftwist)
    return table


def _adjacent(i: int, j: int) -> bool:
    return adjacency_table()[(i, j)].endswith("adjacent")


@dataclass(frozen=True)
class G0GraphElement:
    eps: int
    b: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.b) != len(G0_INDICES):
            raise ValueError("G0(9) element needs 8 exponents")
        object.__setattr__(self, "eps", self.eps % 2)
        object.__setattr__(self, "b", tuple(int(x) for x in self.b))

    def exponent(self, i: int) -> int:
        return self.b[_SLOT[i]]

    def __mul__(self, other: "G0GraphElement") -> "G0GraphElement":
        return g0g_mul(self, other)

    def inverse(self) -> "G0GraphElement":
        return g0g_inv(self)

    def is_central(self) -> bool:
        return not any(self.b)

    def __str__(self) -> str:
        return " ".join([f"t^{self.eps}"] +
                        [f"g{i}^{e}" for i, e in zip(G0_INDICES, self.b)])


def g0g_identity() -> G0GraphElement:
    return G0GraphElement(0, (0,) * 8)


def g0g_tau() -> G0GraphElement:
    return G0GraphElement(1, (0,) * 8)


def g0g_gen(i: int) -> G0GraphElement:
    if i not in _SLOT:
        raise ValueError(f"g{i} is not a generator of G0(9)")
    b = [0] * 8
    b[_SLOT[i]] = 1
    return G0GraphElement(0, tuple(b))


@functools.lru_cache(maxsize=None)
def _g0_pairs() -> tuple[tuple[int, int], ...]:
    # (slot of later generator in x, slot of earlier generator in y)
    return tuple((_SLOT[i], _SLOT[j]) for i in G0_INDICES for j in G0_INDICES
                 if i > j and _adjacent(i, j))


def _g0_cocycle(x: G0GraphElement, y: G0GraphElement) -> int:
    return sum(x.b[si] * y.b[sj] for si, sj in _g0_pairs()) % 2


def g0g_mul(x: G0GraphElement, y: G0GraphElement) -> G0GraphElement:
    return G0GraphElement(x.eps + y.eps + _g0_cocycle(x, y),
                          tuple(p + q for p, q in zip(x.b, y.b)))


def g0g_pow(x: G0GraphElement, k: int) -> G0GraphElement:
    c = _g0_cocycle(x, x)
    return G0GraphElement(k * x.eps + c * (k * (k - 1) // 2),
                          tuple(k * t for t in x.b))


def g0g_inv(x: G0GraphElement) -> G0GraphElement:
    return g0g_pow(x, -1)


def g0g_commutator(x: G0GraphElement, y: G0GraphElement) -> G0GraphElement:
    return g0g_mul(g0g_mul(x, y), g0g_mul(g0g_inv(x), g0g_inv(y)))


def g0g_product(xs: Iterable[G0GraphElement]) -> G0GraphElement:
    out = g0g_identity()
    for x in xs:
        out = g0g_mul(out, x)
    return out


def _g0_image(i: int, k: int) -> G0GraphElement:
    """(g_i) acted on by T~_k (k > 0) or T~_|k|^-1 (k < 0), for k != +-4."""
    kk = abs(k)
    gi, gk = g0g_gen(i), g0g_gen(kk)
    if i == kk:
        return g0g_mul(g0g_inv(gi), g0g_tau())
    cls = adjacency_table()[(i, kk)]
    if cls in ("disjoint", "transversal"):
        return gi
    orderly = cls == "orderly-adjacent"
    if k > 0:
        return g0g_mul(gk, gi) if orderly else g0g_mul(gi, g0g_inv(gk))
    return g0g_mul(gi, gk) if orderly else g0g_mul(g0g_inv(gk), gi)


@functools.lru_cache(maxsize=None)
def _g0_table(k: int) -> tuple[G0GraphElement, ...]:
    return tuple(_g0_image(i, k) for i in G0_INDICES)


def _g0_apply(images: Sequence[G0GraphElement], x: G0GraphElement) -> G0GraphElement:
    out = g0g_pow(g0g_tau(), x.eps)
    for img, e in zip(images, x.b):
        if e:
            out = g0g_mul(out, g0g_pow(img, e))
    return out


def g0g_act_T(k: int, x: G0GraphElement) -> G0GraphElement:
    """Action of T~_k^{sign k}.  T4 acts through its defining word."""
    if not 1 <= abs(k) <= 9:
        raise ValueError(f"catalog index {k} out of range")
    if abs(k) == 4:
        word = T4_DEFINING_WORD if k > 0 else tuple(-t for t in reversed(T4_DEFINING_WORD))
        return g0g_act_tword(word, x)
    return _g0_apply(_g0_table(k), x)


def g0g_act_tword(tletters: Iterable[int], x: G0GraphElement) -> G0GraphElement:
    for k in tletters:
        x = g0g_act_T(k, x)
    return x


def g0g_act_braid(w: BraidWord, x: G0GraphElement) -> G0GraphElement:
    """Action of an X-letter word, translated into T-letters via the frame."""
    if w.strands != 9:
        raise ValueError("G0(9) is acted on by 9-strand braids")
    for k in w.letters:
        t = FRAME_IN_T[abs(k)]
        if k < 0:
            t = tuple(-s for s in reversed(t))
        x = g0g_act_tword(t, x)
    return x


_G0_TOKEN = re.compile(r"^(t|g\d+)(?:\^(-?\d+))?$")


def parse_g0(text: str) -> G0GraphElement:
    out = g0g_identity()
    text = text.strip()
    if text in ("", "1"):
        return out
    for tok in text.split():
        m = _G0_TOKEN.match(tok)
        if not m:
            raise ValueError(f"bad G0(9) token {tok!r}")
        name, power = m.group(1), int(m.group(2) or 1)
        gen = g0g_tau() if name == "t" else g0g_gen(int(name[1:]))
        out = g0g_mul(out, g0g_pow(gen, power))
    return out
