"""Free words, braid words and the Artin action.

Conventions used throughout the package:

* Braids act on the right and words are read left to right, so
  ``(x)(w1 w2) = ((x)w1)w2``.
* Conjugation is ``(A)_B = B^-1 A B``.
* A letter is a nonzero int: ``k`` is the generator with index ``k`` and
  ``-k`` its inverse.  Free words use ``k`` for Gamma_k, braid words use
  ``k`` for the Artin generator X_k.

The Artin action on the free group F_n is

    (Gamma_i) X_i     = Gamma_i Gamma_{i+1} Gamma_i^-1
    (Gamma_{i+1}) X_i = Gamma_i

and fixes every other generator.  It is faithful, so two braid words are
equal in B_n exactly when their signatures (images of all Gamma_j) agree.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import _kernel

__all__ = [
    "FreeWord", "BraidWord", "Permutation", "HalfTwist", "CatalogEntry",
    "fw_mul", "artin_act", "signature", "braid_eq", "psi", "degree",
    "halftwist_as_word", "ht_endpoints", "classify_pair", "full_twist",
    "catalog_T", "catalog_word", "parse_braid", "parse_free", "PAIR_CLASSES",
    "signature_key", "is_trivial", "commutator", "triple",
]


# ---------------------------------------------------------------------------
# Free words


@dataclass(frozen=True)
class FreeWord:
    """A freely reduced word in Gamma_1..Gamma_rank."""

    rank: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.rank < 1:
            raise ValueError(f"rank must be positive, got {self.rank}")
        letters = tuple(int(x) for x in self.letters)
        for x in letters:
            if x == 0 or abs(x) > self.rank:
                raise ValueError(f"letter {x} out of range for rank {self.rank}")
        for x, y in zip(letters, letters[1:]):
            if x == -y:
                raise ValueError("free word is not reduced")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def from_letters(cls, rank: int, letters: Iterable[int]) -> "FreeWord":
        """Build a word from any letter sequence, reducing it first."""
        return cls(rank, _kernel.reduce(tuple(letters)))

    @classmethod
    def gen(cls, rank: int, i: int) -> "FreeWord":
        return cls(rank, (i,))

    @classmethod
    def identity(cls, rank: int) -> "FreeWord":
        return cls(rank, ())

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return fw_mul(self, other)

    def inverse(self) -> "FreeWord":
        return FreeWord(self.rank, _kernel.inverse(self.letters))

    def __pow__(self, k: int) -> "FreeWord":
        base = self if k >= 0 else self.inverse()
        out = FreeWord.identity(self.rank)
        for _ in range(abs(k)):
            out = out * base
        return out

    def __len__(self) -> int:
        return len(self.letters)

    def is_identity(self) -> bool:
        return not self.letters

    def __str__(self) -> str:
        return _format_letters(self.letters, "g")


def fw_mul(x: FreeWord, y: FreeWord) -> FreeWord:
    if x.rank != y.rank:
        raise ValueError(f"rank mismatch: {x.rank} vs {y.rank}")
    return FreeWord(x.rank, _kernel.concat(x.letters, y.letters))


# ---------------------------------------------------------------------------
# Braid words


@dataclass(frozen=True)
class BraidWord:
    """A word in the Artin generators X_1..X_{strands-1} (not reduced)."""

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.strands < 2:
            raise ValueError(f"need at least 2 strands, got {self.strands}")
        letters = tuple(int(x) for x in self.letters)
        for x in letters:
            if x == 0 or abs(x) > self.strands - 1:
                raise ValueError(
                    f"letter {x} out of range for {self.strands} strands")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def identity(cls, strands: int) -> "BraidWord":
        return cls(strands, ())

    @classmethod
    def gen(cls, strands: int, k: int) -> "BraidWord":
        return cls(strands, (k,))

    def _check(self, other: "BraidWord") -> None:
        if self.strands != other.strands:
            raise ValueError(
                f"strand mismatch: {self.strands} vs {other.strands}")

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        self._check(other)
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, _kernel.inverse(self.letters))

    def __pow__(self, k: int) -> "BraidWord":
        base = self.letters if k >= 0 else _kernel.inverse(self.letters)
        return BraidWord(self.strands, base * abs(k))

    def conj(self, by: "BraidWord") -> "BraidWord":
        """``(self)_by = by^-1 self by``."""
        self._check(by)
        return by.inverse() * self * by

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return _format_letters(self.letters, "x")


def commutator(a: BraidWord, b: BraidWord) -> BraidWord:
    """``[a, b] = a b a^-1 b^-1``."""
    return a * b * a.inverse() * b.inverse()


def triple(a: BraidWord, b: BraidWord) -> BraidWord:
    """``<a, b> = a b a b^-1 a^-1 b^-1``; trivial iff a and b braid."""
    return a * b * a * b.inverse() * a.inverse() * b.inverse()


# ---------------------------------------------------------------------------
# Artin action


@functools.lru_cache(maxsize=4096)
def _raw_signature(strands: int, letters: tuple[int, ...]) -> tuple:
    return _kernel.signature(strands, letters)


def artin_act(w: BraidWord, x: FreeWord) -> FreeWord:
    """Image of ``x`` under the automorphism induced by ``w``."""
    if x.rank != w.strands:
        raise ValueError(f"rank mismatch: free rank {x.rank}, strands {w.strands}")
    return FreeWord(x.rank, _kernel.act_word(x.letters, w.letters))


def signature(w: BraidWord) -> tuple[FreeWord, ...]:
    """The images of Gamma_1..Gamma_n under ``w``."""
    return tuple(FreeWord(w.strands, img)
                 for img in _raw_signature(w.strands, _kernel.reduce(w.letters)))


# Words longer than this are compared through the capped search below.
_SHORT_WORD = 512


def _signatures_agree(n: int, a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    """Signature equality of two long words, computed economically.

    Two braids are equal exactly when their inverses are, and evaluating one
    direction can be far cheaper than the other because intermediate images
    depend on the order in which letters are applied.  Both directions are
    tried under a length cap that grows until one of them completes.
    """
    pairs = ((a, b), (_kernel.inverse(a), _kernel.inverse(b)))
    cap = 1 << 14
    while True:
        for x, y in pairs:
            sx = _kernel.signature_capped(n, x, cap)
            if sx is None:
                continue
            sy = _kernel.signature_capped(n, y, cap)
            if sy is not None:
                return sx == sy
        cap <<= 2


def braid_eq(w1: BraidWord, w2: BraidWord) -> bool:
    """True iff the Artin signatures of w1 and w2 coincide."""
    w1._check(w2)
    a, b = _kernel.reduce(w1.letters), _kernel.reduce(w2.letters)
    if a == b:
        return True
    if len(a) + len(b) <= _SHORT_WORD:
        return _raw_signature(w1.strands, a) == _raw_signature(w2.strands, b)
    return _signatures_agree(w1.strands, a, b)


def signature_key(w: BraidWord) -> tuple:
    """Hashable canonical key of ``w`` in B_n (its raw signature)."""
    return _raw_signature(w.strands, _kernel.reduce(w.letters))


def is_trivial(w: BraidWord) -> bool:
    return braid_eq(w, BraidWord.identity(w.strands))


# ---------------------------------------------------------------------------
# Permutations


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n}; ``images[j-1]`` is the image of ``j``.

    Products follow the right-action convention: ``(p * q)(j) = q(p(j))``.
    """

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "Permutation":
        images = list(range(1, n + 1))
        images[i - 1], images[j - 1] = j, i
        return cls(tuple(images))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, j: int) -> int:
        return self.images[j - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return Permutation(tuple(other(self(j)) for j in range(1, self.n + 1)))

    def inverse(self) -> "Permutation":
        out = [0] * self.n
        for j, img in enumerate(self.images, start=1):
            out[img - 1] = j
        return Permutation(tuple(out))

    def is_identity(self) -> bool:
        return all(img == j for j, img in enumerate(self.images, start=1))

    def support(self) -> tuple[int, ...]:
        return tuple(j for j, img in enumerate(self.images, start=1) if img != j)

    def cycles(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen or self(start) == start:
                continue
            cyc = [start]
            seen.add(start)
            j = self(start)
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


def psi(w: BraidWord) -> Permutation:
    """Permutation of ``w``: strand starting at j ends at ``psi(w)(j)``."""
    at = list(range(1, w.strands + 1))
    for k in w.letters:
        a = abs(k) - 1
        at[a], at[a + 1] = at[a + 1], at[a]
    images = [0] * w.strands
    for pos, strand in enumerate(at, start=1):
        images[strand - 1] = pos
    return Permutation(tuple(images))


def degree(w: BraidWord) -> int:
    return sum(1 if k > 0 else -1 for k in w.letters)


def full_twist(n: int) -> BraidWord:
    """Delta^2 = (X_1 ... X_{n-1})^n, the generator of the centre of B_n."""
    if n < 2:
        raise ValueError("full twist needs n >= 2")
    return BraidWord(n, tuple(range(1, n)) * n)


# ---------------------------------------------------------------------------
# Half-twists


@dataclass(frozen=True)
class HalfTwist:
    """The half-twist ``(X_base)_conjugator``.

    ``polarization`` is an optional (origin, end) ordering of the endpoints;
    when omitted it runs from the smaller endpoint to the larger one.
    """

    strands: int
    conjugator: BraidWord
    base: int
    polarization: tuple[int, int] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.conjugator.strands != self.strands:
            raise ValueError("conjugator strand count differs")
        if not 1 <= self.base <= self.strands - 1:
            raise ValueError(f"base {self.base} out of range")

    @classmethod
    def simple(cls, strands: int, base: int) -> "HalfTwist":
        return cls(strands, BraidWord.identity(strands), base)

    def word(self) -> BraidWord:
        return halftwist_as_word(self)

    def endpoints(self) -> tuple[int, int]:
        return ht_endpoints(self)

    def polarized(self) -> tuple[int, int]:
        return self.polarization or self.endpoints()

    def conj(self, by: BraidWord) -> "HalfTwist":
        return HalfTwist(self.strands, self.conjugator * by, self.base)


def halftwist_as_word(h: HalfTwist) -> BraidWord:
    return BraidWord.gen(h.strands, h.base).conj(h.conjugator)


def _endpoints_of_word(w: BraidWord) -> tuple[int, int]:
    supp = psi(w).support()
    if len(supp) != 2:
        raise ValueError(f"{w} does not map to a transposition")
    return supp[0], supp[1]


def ht_endpoints(h: HalfTwist) -> tuple[int, int]:
    return _endpoints_of_word(halftwist_as_word(h))


PAIR_CLASSES = (
    "equal", "orderly-adjacent", "anti-orderly-adjacent", "disjoint",
    "transversal", "indeterminate",
)


def classify_pair(h1: HalfTwist, h2: HalfTwist) -> str:
    """Classify a pair of half-twists by endpoints, polarization and commutation.

    Pairs sharing one endpoint are adjacent, orderly when the shared point
    is the end of one and the origin of the other.  Pairs with no common
    endpoint are disjoint when they commute in B_n and transversal when they
    commute only in the quotient B~_n.
    """
    a, b = h1.polarized(), h2.polarized()
    w1, w2 = h1.word(), h2.word()
    shared = set(a) & set(b)
    if len(shared) == 2:
        return "equal" if braid_eq(w1, w2) else "indeterminate"
    if len(shared) == 1:
        return "orderly-adjacent" if (a[1] == b[0] or b[1] == a[0]) \
            else "anti-orderly-adjacent"
    comm = commutator(w1, w2)
    if is_trivial(comm):
        return "disjoint"
    from .btilde import btilde_eq  # local import: btilde depends on this module
    if btilde_eq(comm, BraidWord.identity(h1.strands)):
        return "transversal"
    return "indeterminate"


# ---------------------------------------------------------------------------
# The nine half-twists T_1..T_9 of the 9-point configuration

# Solved from the frame identity
#   X1=T1, X2=T2, X3=T2^-1 T3 T2, X4=T5, X5=T9, X6=T9 T8 T9^-1, X7=T7, X8=T6
# as (conjugator letters, base).
_CATALOG_BASE = {
    1: ((), 1),
    2: ((), 2),
    3: ((-2,), 3),
    5: ((), 4),
    6: ((), 8),
    7: ((), 7),
    8: ((5,), 6),
    9: ((), 5),
}
# T4 = T2^-1 T3 T7^-1 T8 T5 T8^-1 T7 T3^-1 T2, i.e. (T5) conjugated by
# T8^-1 T7 T3^-1 T2.
T4_DEFINING_WORD = (-2, 3, -7, 8, 5, -8, 7, -3, 2)
T4_CONJUGATOR = (-8, 7, -3, 2)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    index: int
    halftwist: HalfTwist
    endpoints: tuple[int, int]

    def word(self) -> BraidWord:
        return self.halftwist.word()


def _t_letters(k: int) -> tuple[int, ...]:
    conj, base = _CATALOG_BASE[abs(k)]
    word = _kernel.inverse(conj) + (base,) + tuple(conj)
    return word if k > 0 else _kernel.inverse(word)


@functools.lru_cache(maxsize=None)
def catalog_T(i: int) -> CatalogEntry:
    if not 1 <= i <= 9:
        raise ValueError(f"catalog index {i} out of range 1..9")
    if i == 4:
        conj = tuple(x for k in T4_CONJUGATOR for x in _t_letters(k))
        h = HalfTwist(9, BraidWord(9, conj), 4)
    else:
        conj, base = _CATALOG_BASE[i]
        h = HalfTwist(9, BraidWord(9, conj), base)
    return CatalogEntry(f"T{i}", i, h, ht_endpoints(h))


def catalog_word(tletters: Iterable[int]) -> BraidWord:
    """Expand a word in T_1..T_9 (signed indices) into X-letters on 9 strands."""
    out: list[int] = []
    for k in tletters:
        w = catalog_T(abs(k)).word().letters
        out.extend(w if k > 0 else _kernel.inverse(w))
    return BraidWord(9, tuple(out))


# ---------------------------------------------------------------------------
# Text forms

_TOKEN = re.compile(r"^([a-zA-Z]+)(\d+)(?:\^(-?\d+))?$")


def _format_letters(letters: Sequence[int], sym: str) -> str:
    if not letters:
        return "1"
    return " ".join(f"{sym}{abs(k)}" + ("^-1" if k < 0 else "") for k in letters)


def _tokens(text: str) -> list[tuple[str, int, int]]:
    text = text.strip()
    if text in ("", "1"):
        return []
    out = []
    for tok in text.split():
        m = _TOKEN.match(tok)
        if not m:
            raise ValueError(f"bad token {tok!r}")
        power = int(m.group(3)) if m.group(3) is not None else 1
        out.append((m.group(1), int(m.group(2)), power))
    return out


def parse_braid(text: str, strands: int) -> BraidWord:
    """Parse ``x<k>``/``t<k>`` tokens with optional integer powers."""
    out: list[int] = []
    for sym, k, power in _tokens(text):
        if sym == "x":
            unit: tuple[int, ...] = (k,)
        elif sym == "t":
            if strands != 9:
                raise ValueError("t-letters need 9 strands")
            unit = catalog_T(k).word().letters
        else:
            raise ValueError(f"unknown braid letter {sym}{k}")
        if power < 0:
            unit = _kernel.inverse(unit)
        out.extend(unit * abs(power))
    return BraidWord(strands, tuple(out))


def parse_free(text: str, rank: int) -> FreeWord:
    out: list[int] = []
    for sym, k, power in _tokens(text):
        if sym != "g":
            raise ValueError(f"unknown free letter {sym}{k}")
        out.extend([k if power > 0 else -k] * abs(power))
    return FreeWord.from_letters(rank, out)
