"""Presentations of fundamental groups read off factorized expressions.

For a factor V^p with V = (X_i)_w, the loops A = (Gamma_i)w and
B = (Gamma_{i+1})w give one relation.  That relation is A = B for p = 1,
[A, B] = 1 for p = 2, and ABA = BAB for p = 3.  The general recipe instead
takes every relation (Gamma_j)g = Gamma_j for a factor braid g.
"""

from __future__ import annotations

from dataclasses import dataclass

import sympy
from sympy.matrices.normalforms import smith_normal_form

from . import _kernel
from .monodromy import Factor, FactorizedExpr, conjugate_expr
from .words import FreeWord, artin_act, parse_free

__all__ = [
    "Presentation", "ABPair", "ab_pair", "relator_from_factor",
    "relators_general", "presentation", "projectivize",
    "add_invariance_relations", "tietze_simplify", "abelianization",
    "format_abelian", "dumps_presentation", "loads_presentation",
]


@dataclass(frozen=True)
class Presentation:
    generators: int
    relators: tuple[FreeWord, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "relators", tuple(self.relators))
        for r in self.relators:
            if r.rank != self.generators:
                raise ValueError("relator rank differs from generator count")

    def to_text(self) -> str:
        lines = [f"gens: {self.generators}"]
        lines += [f"rel: {r}" for r in self.relators]
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {"generators": self.generators,
                "relators": [str(r) for r in self.relators]}

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True)
class ABPair:
    A: FreeWord
    B: FreeWord


def ab_pair(f: Factor) -> ABPair:
    h = f.halftwist
    m = h.strands
    return ABPair(artin_act(h.conjugator, FreeWord.gen(m, h.base)),
                  artin_act(h.conjugator, FreeWord.gen(m, h.base + 1)))


def relator_from_factor(f: Factor) -> FreeWord:
    pair = ab_pair(f)
    A, B = pair.A, pair.B
    if f.power == 1:
        return A * B.inverse()
    if f.power == 2:
        return A * B * A.inverse() * B.inverse()
    if f.power == 3:
        return A * B * A * B.inverse() * A.inverse() * B.inverse()
    raise ValueError(f"power {f.power} has no cuspidal relator; use relators_general")


def relators_general(e: FactorizedExpr) -> list[FreeWord]:
    m = e.strands
    out = []
    for f in e.factors:
        w = f.word()
        for j in range(1, m + 1):
            image = artin_act(w, FreeWord.gen(m, j))
            rel = image * FreeWord.gen(m, j).inverse()
            if not rel.is_identity():
                out.append(rel)
    return out


def _relators(e: FactorizedExpr, mode: str) -> list[FreeWord]:
    if mode == "cuspidal":
        return [relator_from_factor(f) for f in e.factors]
    if mode == "general":
        return relators_general(e)
    raise ValueError(f"unknown mode {mode!r}")


def presentation(e: FactorizedExpr, mode: str = "cuspidal") -> Presentation:
    if mode == "cuspidal" and any(f.power not in (1, 2, 3) for f in e.factors):
        raise ValueError("cuspidal mode needs every power in {1, 2, 3}")
    return Presentation(e.strands, tuple(_relators(e, mode)))


def projectivize(p: Presentation) -> Presentation:
    m = p.generators
    return Presentation(m, p.relators + (FreeWord(m, tuple(range(1, m + 1))),))


def add_invariance_relations(p: Presentation, e: FactorizedExpr, h,
                             mode: str = "cuspidal") -> Presentation:
    extra = _relators(conjugate_expr(e, h), mode)
    return Presentation(p.generators, p.relators + tuple(extra))


# ---------------------------------------------------------------------------
# Tietze moves


def _cyclic_reduce(letters: tuple[int, ...]) -> tuple[int, ...]:
    letters = _kernel.reduce(letters)
    while len(letters) >= 2 and letters[0] == -letters[-1]:
        letters = letters[1:-1]
    return letters


def _cyclic_key(letters: tuple[int, ...]) -> tuple[int, ...]:
    # Smallest rotation of the relator or its inverse.
    if not letters:
        return ()
    inv = _kernel.inverse(letters)
    rots = [w[i:] + w[:i] for w in (letters, inv) for i in range(len(w))]
    return min(rots)


def _eliminate(rels: list[tuple[int, ...]], m: int, gen: int,
               value: tuple[int, ...]) -> list[tuple[int, ...]]:
    def renumber(x: int) -> int:
        return x - 1 if x > gen else (x + 1 if x < -gen else x)

    images = [tuple(renumber(x) for x in value) if j == gen else (renumber(j),)
              for j in range(1, m + 1)]
    return [_kernel.substitute(r, images) for r in rels]


def tietze_simplify(p: Presentation, passes: int = 10) -> tuple[Presentation, list[str]]:
    """Semantics-preserving simplification with a log of the moves applied."""
    m = p.generators
    rels = [r.letters for r in p.relators]
    log: list[str] = []
    for _ in range(passes):
        changed = False
        reduced = [_cyclic_reduce(r) for r in rels]
        if reduced != rels:
            log.append("cyclically reduce relators")
            changed = True
        kept, seen = [], set()
        for r in reduced:
            if not r:
                log.append("drop trivial relator")
                changed = True
                continue
            key = _cyclic_key(r)
            if key in seen:
                log.append(f"drop duplicate relator {FreeWord(m, r)}")
                changed = True
                continue
            seen.add(key)
            kept.append(r)
        rels = kept
        for idx, r in enumerate(rels):
            if len(r) == 2 and abs(r[0]) != abs(r[1]) and m > 1:
                t, o = (r[0], r[1]) if abs(r[0]) > abs(r[1]) else (r[1], r[0])
                gen = abs(t)
                # t o = 1 up to rotation, so t = o^-1.
                value = (-o,) if t > 0 else (o,)
                log.append(f"eliminate g{gen} = {FreeWord(m, value)} using {FreeWord(m, r)}")
                rest = rels[:idx] + rels[idx + 1:]
                rels = _eliminate(rest, m, gen, value)
                m -= 1
                changed = True
                break
        if not changed:
            break
    rels = [_cyclic_reduce(r) for r in rels]
    return Presentation(m, tuple(FreeWord(m, r) for r in rels if r)), log


# ---------------------------------------------------------------------------
# Abelianization


def relation_matrix(p: Presentation) -> list[list[int]]:
    rows = []
    for r in p.relators:
        row = [0] * p.generators
        for x in r.letters:
            row[abs(x) - 1] += 1 if x > 0 else -1
        rows.append(row)
    return rows


def abelianization(p: Presentation) -> tuple[int, ...]:
    """Invariant factors of the abelianization, 0 standing for a copy of Z.

    Factors equal to 1 are dropped, so the trivial group gives ``()``.
    """
    rows = [row for row in relation_matrix(p) if any(row)]
    m = p.generators
    if not rows:
        return (0,) * m
    snf = smith_normal_form(sympy.Matrix(rows), domain=sympy.ZZ)
    diag = [abs(int(snf[i, i])) for i in range(min(snf.shape))]
    torsion = sorted(d for d in diag if d > 1)
    free = m - sum(1 for d in diag if d != 0)
    return tuple(torsion) + (0,) * free


def format_abelian(factors: tuple[int, ...]) -> str:
    if not factors:
        return "1"
    return " + ".join("Z" if d == 0 else f"Z/{d}" for d in factors)


def dumps_presentation(p: Presentation) -> str:
    return p.to_text()


def loads_presentation(text: str) -> Presentation:
    m = None
    rels = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, _, value = line.partition(":")
        if key == "gens":
            m = int(value)
        elif key == "rel":
            if m is None:
                raise ValueError("gens line must come first")
            rels.append(parse_free(value, m))
        else:
            raise ValueError(f"unexpected line {line!r}")
    if m is None:
        raise ValueError("missing gens line")
    return Presentation(m, tuple(rels))
