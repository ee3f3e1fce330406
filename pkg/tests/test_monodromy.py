import pytest
from hypothesis import given
from hypothesis import strategies as st

from artifact.monodromy import (
    Factor, FactorizedExpr, conjugate_expr, dumps_expr, hurwitz_equivalent,
    hurwitz_move, invariance_check, loads_expr, product, replay,
    validate_full_twist,
)
from artifact.words import BraidWord, braid_eq, full_twist, signature_key
from conftest import letters


def expr(n, factors):
    """factors: list of (conjugator letters, base, power)."""
    return FactorizedExpr(n, tuple(Factor.make(n, c, b, p) for c, b, p in factors))


D3 = expr(3, [((), k, 1) for k in (1, 2, 1, 2, 1, 2)])


@st.composite
def expressions(draw):
    n = draw(st.integers(2, 5))
    size = draw(st.integers(2, 5))
    factors = [(draw(letters(n, 3)), draw(st.integers(1, n - 1)), draw(st.integers(1, 3)))
               for _ in range(size)]
    return expr(n, factors)


@st.composite
def expression_and_moves(draw):
    e = draw(expressions())
    moves = draw(st.lists(st.tuples(st.integers(1, len(e) - 1), st.sampled_from((1, -1))),
                          max_size=6))
    return e, moves


def test_full_twist_factorization():
    assert validate_full_twist(D3)
    assert not validate_full_twist(expr(3, [((), 1, 1)] * 6))
    four = expr(4, [((), k, 1) for k in (1, 2, 3) * 4])
    assert validate_full_twist(four)


@given(expression_and_moves())
def test_moves_preserve_the_product(case):
    e, moves = case
    assert braid_eq(product(replay(e, moves)), product(e))


@given(expression_and_moves())
def test_move_then_inverse_is_exact(case):
    e, moves = case
    for p, d in moves:
        assert hurwitz_move(hurwitz_move(e, p, d), p, -d) == e


def test_move_formula():
    e = expr(3, [((), 1, 1), ((), 2, 1)])
    moved = hurwitz_move(e, 1)
    a, b = e.factors
    first = moved.factors[0].word()
    assert braid_eq(first, a.word() * b.word() * a.word().inverse())
    assert moved.factors[1] == a


def test_move_keeps_powers():
    e = expr(3, [((), 1, 2), ((), 2, 3)])
    moved = hurwitz_move(e, 1)
    assert [f.power for f in moved.factors] == [3, 2]


def test_move_errors():
    with pytest.raises(IndexError):
        hurwitz_move(D3, 6)
    with pytest.raises(ValueError):
        hurwitz_move(D3, 1, 2)
    with pytest.raises(ValueError):
        Factor.make(3, (), 1, 0)


def test_search_finds_a_one_move_variant():
    variant = hurwitz_move(D3, 3)
    res = hurwitz_equivalent(D3, variant, max_states=10_000)
    assert res.status == "equivalent"
    assert res.path == ((3, 1),)


def test_search_path_replays_to_target():
    target = replay(D3, [(2, 1), (4, -1), (1, 1)])
    res = hurwitz_equivalent(D3, target)
    assert res.found
    got = replay(D3, res.path)
    assert [signature_key(f.word()) for f in got.factors] == \
        [signature_key(f.word()) for f in target.factors]


def test_product_mismatch_is_not_equivalent():
    swapped = expr(3, [((), 2, 1), ((), 1, 1)])
    res = hurwitz_equivalent(expr(3, [((), 1, 1), ((), 2, 1)]), swapped)
    assert res.status == "not-equivalent" and "products" in res.reason


def test_budget_is_reported():
    target = replay(D3, [(1, 1), (2, 1), (3, 1), (4, 1), (5, 1)])
    res = hurwitz_equivalent(D3, target, max_states=3)
    assert res.status == "not-found-within-budget"
    assert res.states <= 3


def test_invariance_under_full_twist_factor():
    res = invariance_check(D3, BraidWord(3, (1,)))
    assert res.found
    moved = replay(D3, res.path)
    conj = conjugate_expr(D3, BraidWord(3, (1,)))
    assert [signature_key(f.word()) for f in moved.factors] == \
        [signature_key(f.word()) for f in conj.factors]


def test_conjugating_by_the_full_twist_changes_nothing():
    conj = conjugate_expr(D3, full_twist(3))
    for f, g in zip(D3.factors, conj.factors):
        assert braid_eq(f.word(), g.word())


def test_expand_replaces_powers_by_copies():
    e = expr(3, [((), 1, 3), ((2,), 1, 2)])
    expanded = e.expand()
    assert len(expanded) == 5 and braid_eq(product(expanded), product(e))


@given(expressions())
def test_file_round_trip(e):
    assert loads_expr(dumps_expr(e)) == e


def test_loads_accepts_t_letters():
    text = '{"strands": 9, "factors": [{"conjugator": "t3", "base": 1, "power": 2}]}'
    e = loads_expr(text)
    assert e.factors[0].power == 2
