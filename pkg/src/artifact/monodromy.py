"""Factorized expressions in B_m and Hurwitz moves on them.

A factor is a power V^p of a half-twist V = (X_i)_w.  A Hurwitz move at
position p replaces (g_p, g_{p+1}) by (g_p g_{p+1} g_p^-1, g_p).  A conjugate
of a half-twist power is again a half-twist power, so the moves act on
factors with any power.  The moved factor keeps its power, and its
conjugator grows by g_p^-1.  Conjugators are freely reduced as letter
words.  This keeps a move followed by its inverse exact at word level.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from . import _kernel
from .words import (
    BraidWord, HalfTwist, braid_eq, full_twist, parse_braid, signature_key,
)

__all__ = [
    "Factor", "FactorizedExpr", "HurwitzResult", "product",
    "validate_full_twist", "hurwitz_move", "conjugate_expr",
    "hurwitz_equivalent", "invariance_check", "dumps_expr", "loads_expr",
]


@dataclass(frozen=True)
class Factor:
    halftwist: HalfTwist
    power: int = 1

    def __post_init__(self) -> None:
        if self.power < 1:
            raise ValueError("factor power must be >= 1")
        h = self.halftwist
        reduced = _kernel.reduce(h.conjugator.letters)
        if reduced != h.conjugator.letters:
            object.__setattr__(self, "halftwist", HalfTwist(
                h.strands, BraidWord(h.strands, reduced), h.base, h.polarization))

    @classmethod
    def make(cls, strands: int, conjugator: Sequence[int], base: int,
             power: int = 1) -> "Factor":
        return cls(HalfTwist(strands, BraidWord(strands, tuple(conjugator)), base), power)

    def word(self) -> BraidWord:
        """The braid V^power as a word."""
        conj = self.halftwist.conjugator.letters
        letters = _kernel.inverse(conj) + (self.halftwist.base,) * self.power + conj
        return BraidWord(self.halftwist.strands, letters)

    def conj(self, by: Sequence[int]) -> "Factor":
        h = self.halftwist
        letters = _kernel.reduce(h.conjugator.letters + tuple(by))
        return Factor(HalfTwist(h.strands, BraidWord(h.strands, letters), h.base),
                      self.power)


@dataclass(frozen=True)
class FactorizedExpr:
    strands: int
    factors: tuple[Factor, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "factors", tuple(self.factors))
        for f in self.factors:
            if f.halftwist.strands != self.strands:
                raise ValueError("factor strand count differs from expression")

    def __len__(self) -> int:
        return len(self.factors)

    def expand(self) -> "FactorizedExpr":
        """Replace every V^p by p copies of V."""
        out = [Factor(f.halftwist, 1) for f in self.factors for _ in range(f.power)]
        return FactorizedExpr(self.strands, tuple(out))


def product(e: FactorizedExpr) -> BraidWord:
    letters: list[int] = []
    for f in e.factors:
        letters.extend(f.word().letters)
    return BraidWord(e.strands, tuple(letters))


def validate_full_twist(e: FactorizedExpr) -> bool:
    return braid_eq(product(e), full_twist(e.strands))


def hurwitz_move(e: FactorizedExpr, p: int, direction: int = 1) -> FactorizedExpr:
    """Hurwitz move at positions (p, p+1), 1-based; ``direction=-1`` inverts it."""
    if not 1 <= p <= len(e.factors) - 1:
        raise IndexError(f"move position {p} out of range")
    if direction not in (1, -1):
        raise ValueError("direction must be +1 or -1")
    fs = list(e.factors)
    a, b = fs[p - 1], fs[p]
    if direction == 1:
        fs[p - 1], fs[p] = b.conj(_kernel.inverse(a.word().letters)), a
    else:
        fs[p - 1], fs[p] = b, a.conj(b.word().letters)
    return FactorizedExpr(e.strands, tuple(fs))


def conjugate_expr(e: FactorizedExpr, h: BraidWord) -> FactorizedExpr:
    if h.strands != e.strands:
        raise ValueError("strand mismatch")
    return FactorizedExpr(e.strands, tuple(f.conj(h.letters) for f in e.factors))


def _state_key(e: FactorizedExpr) -> tuple:
    return tuple(signature_key(f.word()) for f in e.factors)


@dataclass(frozen=True)
class HurwitzResult:
    status: str  # "equivalent", "not-found-within-budget" or "not-equivalent"
    path: tuple[tuple[int, int], ...] = ()
    states: int = 0
    reason: str = field(default="", compare=False)

    @property
    def found(self) -> bool:
        return self.status == "equivalent"


def hurwitz_equivalent(e1: FactorizedExpr, e2: FactorizedExpr,
                       max_states: int = 10_000,
                       max_depth: int | None = None) -> HurwitzResult:
    """Breadth-first search for a sequence of moves taking e1 to e2.

    Moves are tried in the order (1,+1), (1,-1), (2,+1), ..., so the path
    returned is the first one in that order among the shortest.  States are
    identified by the tuple of factor signatures.
    """
    if e1.strands != e2.strands:
        return HurwitzResult("not-equivalent", reason="strand counts differ")
    if len(e1) != len(e2):
        return HurwitzResult("not-equivalent", reason="factor counts differ")
    if not braid_eq(product(e1), product(e2)):
        return HurwitzResult("not-equivalent", reason="products differ")
    target = _state_key(e2)
    start = _state_key(e1)
    if start == target:
        return HurwitzResult("equivalent", (), 1)
    seen = {start}
    frontier: deque = deque([(e1, ())])
    while frontier:
        expr, path = frontier.popleft()
        if max_depth is not None and len(path) >= max_depth:
            continue
        for p in range(1, len(expr)):
            for d in (1, -1):
                nxt = hurwitz_move(expr, p, d)
                key = _state_key(nxt)
                if key in seen:
                    continue
                new_path = path + ((p, d),)
                if key == target:
                    return HurwitzResult("equivalent", new_path, len(seen) + 1)
                if len(seen) >= max_states:
                    return HurwitzResult("not-found-within-budget", (), len(seen))
                seen.add(key)
                frontier.append((nxt, new_path))
    return HurwitzResult("not-found-within-budget", (), len(seen),
                         reason="search space exhausted under depth limit"
                         if max_depth is not None else "orbit exhausted")


def invariance_check(e: FactorizedExpr, h: BraidWord, max_states: int = 10_000,
                     max_depth: int | None = None) -> HurwitzResult:
    return hurwitz_equivalent(e, conjugate_expr(e, h), max_states, max_depth)


def replay(e: FactorizedExpr, path: Sequence[Sequence[int]]) -> FactorizedExpr:
    for p, d in path:
        e = hurwitz_move(e, p, d)
    return e


# ---------------------------------------------------------------------------
# Factorization files


def to_dict(e: FactorizedExpr) -> dict:
    return {
        "strands": e.strands,
        "factors": [
            {"conjugator": str(f.halftwist.conjugator),
             "base": f.halftwist.base,
             "power": f.power}
            for f in e.factors
        ],
    }


def from_dict(data: dict) -> FactorizedExpr:
    m = int(data["strands"])
    factors = []
    for item in data.get("factors", []):
        conj = parse_braid(str(item.get("conjugator", "1")), m)
        factors.append(Factor(HalfTwist(m, conj, int(item["base"])),
                              int(item.get("power", 1))))
    return FactorizedExpr(m, tuple(factors))


def dumps_expr(e: FactorizedExpr) -> str:
    return json.dumps(to_dict(e), indent=2, sort_keys=True)


def loads_expr(text: str) -> FactorizedExpr:
    return from_dict(json.loads(text))
