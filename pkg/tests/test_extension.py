import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from artifact.btilde import lambda_hat
from artifact.extension import (
    G0_INDICES, G0GraphElement, GnElement, adjacency_table, g0g_act_braid,
    g0g_act_T, g0g_commutator, g0g_gen, g0g_identity, g0g_inv, g0g_mul,
    g0g_tau, gn_act, gn_act_word, gn_commutator, gn_identity, gn_inv, gn_mul,
    gn_nu, gn_s1, gn_s_ij, gn_u, parse_g0, parse_gn,
)
from artifact.words import BraidWord
from conftest import letters, pure_letters
from oracles import adjacent, g0_normal_form, gn_normal_form, gn_s_ij_oracle


def gn_elements(n):
    return st.builds(
        lambda eps, a, b: GnElement(n, eps, a, tuple(b)),
        st.integers(0, 1), st.integers(-4, 4),
        st.lists(st.integers(-4, 4), min_size=n - 1, max_size=n - 1))


g0_elements = st.builds(
    lambda eps, b: G0GraphElement(eps, tuple(b)),
    st.integers(0, 1), st.lists(st.integers(-4, 4), min_size=8, max_size=8))


def as_gn_word(x):
    word = [("nu", x.eps), ("s", x.a)]
    word += [(i, e) for i, e in enumerate(x.b, start=1)]
    return [(g, e) for g, e in word if e]


def as_g0_word(x):
    word = [("tau", x.eps)] + list(zip(G0_INDICES, x.b))
    return [(g, e) for g, e in word if e]


# --- G(n) ---------------------------------------------------------------


def test_gn_normal_order_examples():
    n = 4
    assert gn_mul(gn_u(n, 1), gn_u(n, 2)) == GnElement(n, 0, 0, (1, 1, 0))
    assert gn_mul(gn_u(n, 2), gn_u(n, 1)) == GnElement(n, 1, 0, (1, 1, 0))
    s, u3 = gn_s1(n), gn_u(n, 3)
    assert gn_mul(gn_mul(s, u3), gn_mul(gn_inv(s), gn_inv(u3))) == gn_identity(n)


def test_gn_commutators():
    n = 5
    nu = gn_nu(n)
    assert gn_commutator(gn_s1(n), gn_u(n, 2)) == nu
    assert gn_commutator(gn_u(n, 2), gn_u(n, 3)) == nu
    assert gn_commutator(gn_u(n, 1), gn_u(n, 3)) == gn_identity(n)
    assert gn_commutator(gn_s1(n), gn_u(n, 1)) == gn_identity(n)


@pytest.mark.parametrize("n", [3, 4, 9])
def test_gn_generator_relation_table(n):
    gens = [("s", gn_s1(n))] + [(i, gn_u(n, i)) for i in range(1, n)]
    for (ga, x), (gb, y) in itertools.combinations(gens, 2):
        expected = gn_normal_form(n, [(ga, 1), (gb, 1), (ga, -1), (gb, -1)])
        got = gn_commutator(x, y)
        assert (got.eps, got.a, got.b) == expected, (ga, gb)


@given(st.integers(2, 9).flatmap(lambda n: st.tuples(gn_elements(n), gn_elements(n))))
def test_gn_mul_matches_rewriting_oracle(pair):
    x, y = pair
    z = gn_mul(x, y)
    assert (z.eps, z.a, z.b) == gn_normal_form(x.n, as_gn_word(x) + as_gn_word(y))


@given(st.integers(2, 9).flatmap(lambda n: st.tuples(gn_elements(n), gn_elements(n), gn_elements(n))))
def test_gn_group_axioms(triple):
    x, y, z = triple
    n = x.n
    assert gn_mul(gn_mul(x, y), z) == gn_mul(x, gn_mul(y, z))
    assert gn_mul(x, gn_inv(x)) == gn_identity(n)
    assert gn_mul(gn_nu(n), x) == gn_mul(x, gn_nu(n))
    assert gn_commutator(x, y).is_central()


def test_nu_has_order_two():
    assert gn_mul(gn_nu(6), gn_nu(6)) == gn_identity(6)


@pytest.mark.parametrize("n", [3, 4, 9])
def test_s_ij_matches_oracle(n):
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            s = gn_s_ij(i, j, n)
            assert (s.eps, s.a, s.b) == gn_s_ij_oracle(i, j, n), (i, j)


def test_s_ij_examples():
    n = 4
    assert gn_s_ij(1, 2, n) == GnElement(n, 0, 1, (0, 0, 0))
    # u2 s1 = nu s1 u2 because [s1, u2] = nu.
    assert gn_s_ij(1, 3, n) == GnElement(n, 1, 1, (0, 1, 0))
    # nu u2 u1 s1 reorders with two swaps across commuting-up-to-nu pairs,
    # so the central bit ends up set.
    assert gn_s_ij(2, 3, n) == GnElement(n, 1, 1, (1, 1, 0))


def test_gn_action_examples():
    n = 5
    assert gn_act(1, gn_u(n, 1)) == GnElement(n, 1, 0, (-1, 0, 0, 0))
    # s1 -> u2 s1, whose normal form is nu s1 u2
    u2s1 = gn_normal_form(n, [(2, 1), ("s", 1)])
    assert u2s1 == (1, 1, (0, 1, 0, 0))
    got = gn_act(2, gn_s1(n))
    assert (got.eps, got.a, got.b) == u2s1
    assert gn_act(1, gn_u(n, 3)) == gn_u(n, 3)


@given(st.integers(3, 6).flatmap(lambda n: st.tuples(st.just(n), letters(n, 6), gn_elements(n), gn_elements(n))))
def test_gn_action_is_an_automorphism(case):
    n, w, x, y = case
    bw = BraidWord(n, w)
    assert gn_act_word(bw, gn_mul(x, y)) == gn_mul(gn_act_word(bw, x), gn_act_word(bw, y))
    assert gn_act_word(bw.inverse(), gn_act_word(bw, x)) == x


@given(st.integers(3, 6).flatmap(lambda n: st.tuples(st.just(n), pure_letters(n, 3), letters(n, 5))))
def test_gn_action_is_lambda_equivariant(case):
    n, p, w = case
    pw, ww = BraidWord(n, p), BraidWord(n, w)
    assert lambda_hat(pw.conj(ww)) == gn_act_word(ww, lambda_hat(pw))


@given(st.integers(2, 9).flatmap(gn_elements))
def test_gn_text_round_trip(x):
    assert parse_gn(str(x), x.n) == x


def test_gn_errors():
    with pytest.raises(ValueError):
        gn_mul(gn_s1(3), gn_s1(4))
    with pytest.raises(ValueError):
        gn_s_ij(2, 2, 4)
    with pytest.raises(ValueError):
        GnElement(3, 0, 0, (1,))
    with pytest.raises(ValueError):
        parse_gn("w^1", 3)


# --- G0(9) --------------------------------------------------------------


def test_adjacency_table_is_consistent_with_endpoints():
    table = adjacency_table()
    for i, j in itertools.combinations(range(1, 10), 2):
        cls = table[(i, j)]
        assert cls.endswith("adjacent") == adjacent(i, j), (i, j, cls)


def test_g0_examples():
    g1, g2, g5 = g0g_gen(1), g0g_gen(2), g0g_gen(5)
    assert g0g_mul(g1, g2) == g0g_mul(g0g_mul(g2, g1), g0g_tau())
    assert g0g_mul(g1, g5) == g0g_mul(g5, g1)
    assert g0g_mul(g0g_tau(), g0g_tau()) == g0g_identity()


@pytest.mark.parametrize("i,j", list(itertools.combinations(G0_INDICES, 2)))
def test_g0_commutator_is_tau_iff_adjacent(i, j):
    c = g0g_commutator(g0g_gen(i), g0g_gen(j))
    assert c == (g0g_tau() if adjacent(i, j) else g0g_identity())


@given(g0_elements, g0_elements)
def test_g0_mul_matches_rewriting_oracle(x, y):
    z = g0g_mul(x, y)
    assert (z.eps, z.b) == g0_normal_form(as_g0_word(x) + as_g0_word(y))


@given(g0_elements, g0_elements, g0_elements)
def test_g0_group_axioms(x, y, z):
    assert g0g_mul(g0g_mul(x, y), z) == g0g_mul(x, g0g_mul(y, z))
    assert g0g_mul(x, g0g_inv(x)) == g0g_identity()


def test_g0_action_example_orderly_row():
    # (g1)_{T2} = g2 g1
    assert g0g_act_T(2, g0g_gen(1)) == g0g_mul(g0g_gen(2), g0g_gen(1))


@pytest.mark.parametrize("k", [1, 2, 3, 5, 6, 7, 8, 9])
def test_g0_action_round_trip(k):
    for i in G0_INDICES:
        g = g0g_gen(i)
        assert g0g_act_T(-k, g0g_act_T(k, g)) == g
        assert g0g_act_T(k, g0g_act_T(-k, g)) == g


@given(letters(9, 6), g0_elements, g0_elements)
def test_g0_braid_action_is_an_automorphism(w, x, y):
    bw = BraidWord(9, w)
    assert g0g_act_braid(bw, g0g_mul(x, y)) == g0g_mul(g0g_act_braid(bw, x), g0g_act_braid(bw, y))
    assert g0g_act_braid(bw.inverse(), g0g_act_braid(bw, x)) == x


@given(g0_elements)
def test_g0_text_round_trip(x):
    assert parse_g0(str(x)) == x


def test_g0_parse_errors():
    with pytest.raises(ValueError):
        parse_g0("g4")
    with pytest.raises(ValueError):
        parse_g0("h1")
