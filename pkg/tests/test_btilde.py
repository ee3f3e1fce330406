import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from artifact.btilde import (
    G0Module, GnModule, PureFactorList, XI_TRANSPORTS, btilde_eq, btilde_nf,
    c_word, canonical_lift, comb, gn_preimage, lambda_hat, lambda_of_factors,
    lemma_u, nf_word, parse_btilde_nf, parse_pure_factors, prime_axioms_check,
    prime_criterion_check, recompose, xi, xi_alternates, z_word,
)
from artifact.extension import (
    GnElement, g0g_gen, gn_commutator, gn_identity, gn_mul, gn_nu, gn_s1,
    gn_s_ij, gn_u,
)
from artifact.words import (
    BraidWord, HalfTwist, Permutation, braid_eq, catalog_T, catalog_word,
    classify_pair, commutator, psi,
)
from conftest import letters, pure_letters


def sq(i, j, n):
    return z_word(i, j, n) ** 2


# --- combing ------------------------------------------------------------


@given(st.integers(2, 9).flatmap(lambda n: st.tuples(st.just(n), pure_letters(n))))
def test_comb_round_trip(case):
    n, p = case
    w = BraidWord(n, p)
    f = comb(w)
    assert braid_eq(recompose(f), w)


def test_comb_of_empty_word_is_empty():
    assert comb(BraidWord.identity(5)).factors == ()


def test_comb_rejects_non_pure_words():
    with pytest.raises(ValueError):
        comb(BraidWord(3, (1,)))


def test_comb_of_a_generator_square():
    assert comb(sq(2, 4, 5)).factors == ((2, 4, 1),)


@given(st.integers(2, 7).flatmap(lambda n: st.tuples(st.just(n), pure_letters(n))))
def test_pure_factor_text_round_trip(case):
    n, p = case
    f = comb(BraidWord(n, p))
    assert parse_pure_factors(str(f), n) == f


# --- Lambda-hat ---------------------------------------------------------


@pytest.mark.parametrize("n", [4, 6, 9])
def test_lambda_of_generator_squares(n):
    for i, j in itertools.combinations(range(1, n + 1), 2):
        assert lambda_hat(sq(i, j, n)) == gn_s_ij(i, j, n), (i, j)


def test_s_ij_commutator_table():
    n = 7
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for p, q in itertools.product(pairs, repeat=2):
        shared = len(set(p) & set(q))
        c = gn_commutator(gn_s_ij(*p, n), gn_s_ij(*q, n))
        assert c == (gn_nu(n) if shared == 1 else gn_identity(n)), (p, q)


def test_lambda_of_c_is_nu():
    for n in (3, 5, 9):
        assert lambda_hat(c_word(n)) == gn_nu(n)


@given(st.integers(3, 7).flatmap(lambda n: st.tuples(st.just(n), pure_letters(n, 3), pure_letters(n, 3))))
def test_lambda_is_multiplicative(case):
    n, p, q = case
    wp, wq = BraidWord(n, p), BraidWord(n, q)
    assert lambda_hat(wp * wq) == gn_mul(lambda_hat(wp), lambda_hat(wq))


@given(st.integers(3, 7).flatmap(lambda n: st.tuples(st.just(n), pure_letters(n))))
def test_lambda_only_depends_on_the_braid(case):
    n, p = case
    w = BraidWord(n, p)
    padded = BraidWord(n, (1, 2, 1, -2, -1, -2) + p + (2, -2))
    assert lambda_hat(w) == lambda_hat(padded)


def test_lambda_of_factor_list():
    f = PureFactorList(4, ((1, 2, 1), (2, 3, -1)))
    expect = gn_mul(gn_s1(4), gn_s_ij(2, 3, 4).inverse())
    assert lambda_of_factors(f) == expect


# --- normal form --------------------------------------------------------


@given(st.integers(3, 9).flatmap(lambda n: st.tuples(st.just(n), letters(n, 14))))
def test_normal_form_matches_the_definition(case):
    n, w = case
    bw = BraidWord(n, w)
    nf = btilde_nf(bw)
    assert nf.perm == psi(bw)
    assert nf.coords == lambda_hat(bw * canonical_lift(nf.perm).inverse())


@given(st.integers(3, 9).flatmap(lambda n: st.tuples(st.just(n), letters(n, 14))))
def test_normal_form_text_and_word_round_trip(case):
    n, w = case
    nf = btilde_nf(BraidWord(n, w))
    assert parse_btilde_nf(str(nf)) == nf
    assert btilde_nf(nf_word(nf)) == nf


@given(st.integers(3, 9).flatmap(lambda n: st.tuples(
    st.just(n), st.integers(0, 1), st.integers(-3, 3),
    st.lists(st.integers(-3, 3), min_size=n - 1, max_size=n - 1))))
def test_gn_preimage(case):
    n, eps, a, b = case
    x = GnElement(n, eps, a, tuple(b))
    w = gn_preimage(x)
    assert psi(w).is_identity()
    assert btilde_nf(w).coords == x


@given(st.integers(3, 9).flatmap(lambda n: st.tuples(st.just(n), st.permutations(range(1, n + 1)))))
def test_canonical_lift_is_positive_and_has_the_permutation(case):
    n, images = case
    perm = Permutation(tuple(images))
    w = canonical_lift(perm)
    assert psi(w) == perm and all(k > 0 for k in w.letters)


def test_good_quadrangles():
    for n in (4, 9):
        x = lambda k: BraidWord(n, (k, k))
        X = BraidWord(n, (1,)).conj(BraidWord(n, (2, 3)))
        assert btilde_eq(x(1) * x(3), x(2) * X * X)


def test_quotient_is_proper():
    T4 = catalog_T(4).word()
    ident = BraidWord.identity(9)
    for i in (1, 3, 5, 8, 9):
        assert btilde_eq(commutator(T4, catalog_T(i).word()), ident), i
    assert not braid_eq(commutator(T4, catalog_T(3).word()), ident)


def test_btilde_eq_on_three_strands_is_braid_equality():
    assert btilde_eq(BraidWord(3, (1, 2, 1)), BraidWord(3, (2, 1, 2)))
    assert not btilde_eq(c_word(3), BraidWord.identity(3))


def test_c_is_central_and_nontrivial_in_btilde():
    n = 6
    c = c_word(n)
    assert not btilde_eq(c, BraidWord.identity(n))
    assert btilde_eq(c * c, BraidWord.identity(n))
    for k in range(1, n):
        x = BraidWord(n, (k,))
        assert btilde_eq(c * x, x * c)


def test_transversal_pairs_commute_in_btilde_only():
    T = lambda i: catalog_T(i).halftwist
    for i, j in itertools.combinations(range(1, 10), 2):
        if classify_pair(T(i), T(j)) == "transversal":
            comm = commutator(T(i).word(), T(j).word())
            assert btilde_eq(comm, BraidWord.identity(9))
            assert not braid_eq(comm, BraidWord.identity(9))


# --- xi elements --------------------------------------------------------


@pytest.mark.parametrize("i", range(1, 10))
def test_xi_is_pure_and_alternates_agree(i):
    e = xi(i)
    assert psi(e.expression).is_identity()
    c = lambda_hat(c_word(9))
    for name, alt, relation in xi_alternates(i):
        if relation == "equal":
            assert alt.coords == e.coords, name
        elif relation == "c-times":
            assert alt.coords == gn_mul(c, e.coords), name
        else:
            assert alt.coords == gn_mul(e.coords.inverse(), c), name


@pytest.mark.parametrize("source,word,target", XI_TRANSPORTS)
def test_xi_transports(source, word, target):
    moved = xi(source).expression.conj(catalog_word(word))
    assert btilde_eq(moved, xi(target).expression)


def test_xi_commutators_follow_classification():
    c = c_word(9)
    T = lambda i: catalog_T(i).halftwist
    for i, j in itertools.combinations([k for k in range(1, 10) if k != 4], 2):
        comm = commutator(xi(i).expression, xi(j).expression)
        adjacent = classify_pair(T(i), T(j)).endswith("adjacent")
        assert btilde_eq(comm, c if adjacent else BraidWord.identity(9)), (i, j)


# --- prime elements -----------------------------------------------------


def _frame(n):
    X = HalfTwist.simple(n, 1)
    return X, [HalfTwist.simple(n, 2)], [HalfTwist.simple(n, k) for k in range(3, n)]


def test_lemma_u_image():
    assert lambda_hat(lemma_u(9)) == gn_mul(gn_nu(9), gn_u(9, 1).inverse())


@pytest.mark.parametrize("label", ["u", "g1"])
def test_prime_elements_pass(label):
    X, adj, dis = _frame(9)
    module, g = ((GnModule(9), lambda_hat(lemma_u(9))) if label == "u"
                 else (G0Module(), g0g_gen(1)))
    results = prime_axioms_check(module, g, X, adj, dis) + prime_criterion_check(module, g)
    assert results[0].status == "pass"
    statuses = {r.name: r.status for r in results}
    assert statuses.pop("(0) orbit generates") == "not checked"
    assert set(statuses.values()) == {"pass"}, statuses


def test_s1_is_not_prime():
    X, adj, dis = _frame(9)
    first = prime_axioms_check(GnModule(9), gn_s1(9), X, adj, dis)[0]
    assert first.status == "fail" and first.detail
