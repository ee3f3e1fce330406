"""Pure-Python free-group kernels.

Words are tuples of nonzero ints: ``k`` stands for the generator with index
``k`` and ``-k`` for its inverse.  Every function returns freely reduced
tuples.  The compiled module ``_ckernel`` exposes the same functions.
"""

from __future__ import annotations

from typing import Sequence


def _push(out: list, x: int) -> None:
    if out and out[-1] == -x:
        out.pop()
    else:
        out.append(x)


def reduce(word: Sequence[int]) -> tuple:
    out: list = []
    for x in word:
        _push(out, x)
    return tuple(out)


def inverse(word: Sequence[int]) -> tuple:
    return tuple(-x for x in reversed(word))


def concat(a: Sequence[int], b: Sequence[int]) -> tuple:
    out: list = []
    for x in a:
        _push(out, x)
    for x in b:
        _push(out, x)
    return tuple(out)


def _act_into(out: list, word: Sequence[int], k: int) -> None:
    a = k if k > 0 else -k
    b = a + 1
    if k > 0:
        for x in word:
            if x == a:
                _push(out, a); _push(out, b); _push(out, -a)
            elif x == -a:
                _push(out, a); _push(out, -b); _push(out, -a)
            elif x == b:
                _push(out, a)
            elif x == -b:
                _push(out, -a)
            else:
                _push(out, x)
    else:
        for x in word:
            if x == a:
                _push(out, b)
            elif x == -a:
                _push(out, -b)
            elif x == b:
                _push(out, -b); _push(out, a); _push(out, b)
            elif x == -b:
                _push(out, -b); _push(out, -a); _push(out, b)
            else:
                _push(out, x)


def act_letter(word: Sequence[int], k: int) -> tuple:
    out: list = []
    _act_into(out, word, k)
    return tuple(out)


def act_word(word: Sequence[int], letters: Sequence[int]) -> tuple:
    cur = reduce(word)
    for k in letters:
        out: list = []
        _act_into(out, cur, k)
        cur = tuple(out)
    return cur


def signature(n: int, letters: Sequence[int]) -> tuple:
    return tuple(act_word((j,), letters) for j in range(1, n + 1))


def substitute(word: Sequence[int], images: Sequence[Sequence[int]]) -> tuple:
    out: list = []
    for x in word:
        if x > 0:
            for y in images[x - 1]:
                _push(out, y)
        else:
            for y in reversed(images[-x - 1]):
                _push(out, -y)
    return tuple(out)


def signature_capped(n: int, letters: Sequence[int], cap: int):
    """Like ``signature`` but returns None once any image exceeds ``cap``."""
    images = []
    for j in range(1, n + 1):
        cur: tuple = (j,)
        for k in letters:
            out: list = []
            _act_into(out, cur, k)
            if len(out) > cap:
                return None
            cur = tuple(out)
        images.append(cur)
    return tuple(images)
