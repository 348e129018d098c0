"""Root data and the affine Weyl group."""

import pytest
from hypothesis import given, strategies as st

from fada.errors import ConfigError, WindowExceededError
from fada.roots import AffineElt, AffineWeylGroup, FiniteRootDatum

import util


def group(rtype):
    return util.algebra(rtype, "CON", "small").torus.group


# -- finite data ------------------------------------------------------------


def test_a1_datum():
    d = FiniteRootDatum.from_type("A1")
    assert d.rank == 1
    assert d.positive_roots == ((1,),)
    assert d.theta == (1,)
    assert d.theta_coroot == (1,)
    assert d.pairing((1,), (1,)) == 2


def test_a2_datum():
    d = FiniteRootDatum.from_type("A2")
    assert d.rank == 2
    assert set(d.positive_roots) == {(1, 0), (0, 1), (1, 1)}
    assert d.theta == (1, 1)
    assert d.pairing((1, 0), (0, 1)) == -1
    assert len(d.weyl_elements) == 6
    assert d.weyl_lengths[d.longest_element] == 3


def test_reflection_formula():
    d = FiniteRootDatum.from_type("A2")
    s_theta = d.reflection(d.theta)
    assert s_theta.act_root((1, 0)) == (0, -1)
    assert s_theta.act_root(d.theta) == (-1, -1)
    neg = d.reflection((-1, -1))
    assert neg.act_root(d.theta) == (-1, -1)
    with pytest.raises(ConfigError):
        d.reflection((2, 0))


def test_braid_orders():
    d1 = FiniteRootDatum.from_type("A1")
    assert d1.braid_order(0, 1) is None  # infinite dihedral
    assert d1.braid_order(0, 0) == 1
    d2 = FiniteRootDatum.from_type("A2")
    assert d2.braid_order(1, 2) == 3
    assert d2.braid_order(0, 1) == 3
    assert d2.braid_order(0, 2) == 3


def test_from_cartan_validation():
    d = FiniteRootDatum.from_cartan([[2, -1], [-1, 2]], "custom-a2")
    assert d.theta == (1, 1)
    with pytest.raises(ConfigError):
        FiniteRootDatum.from_cartan([[2, -2], [-2, 2]], "affine")
    with pytest.raises(ConfigError):
        FiniteRootDatum.from_cartan([[2, 0], [0, 2]], "reducible")
    with pytest.raises(ConfigError):
        FiniteRootDatum.from_type("E11")


# -- group structure --------------------------------------------------------


@given(st.lists(st.integers(0, 2), max_size=8),
       st.lists(st.integers(0, 2), max_size=8))
def test_word_products(w1, w2):
    g = group("A2")
    x = g.from_word(w1)
    y = g.from_word(w2)
    assert g.mul(x, y) == g.from_word(tuple(w1) + tuple(w2))
    assert g.mul(x, g.inv(x)) == g.identity
    assert g.length(x) <= len(w1)
    assert g.length(g.inv(x)) == g.length(x)
    assert g.sign(x) == (-1) ** g.length(x)


def test_generator_involutions():
    g = group("A2")
    for i in range(3):
        s = g.simple(i)
        assert g.mul(s, s) == g.identity
        assert g.length(s) == 1


def test_rank_one_translations():
    g = group("A1")
    s0, s1 = g.simple(0), g.simple(1)
    # s_0 s_1 = t_{alpha^v} and s_1 s_0 = t_{-alpha^v}
    assert g.mul(s0, s1) == g.translation((1,))
    assert g.mul(s1, s0) == g.translation((-1,))
    assert g.length(g.translation((3,))) == 6
    assert g.length(g.translation((-3,))) == 6


def test_translation_lengths_a2():
    g = group("A2")
    d = g.datum
    # l(t_lam) = sum over positive roots of |<lam, alpha>|
    for lam in [(1, 0), (1, 1), (-1, 2), (2, -1)]:
        expected = sum(abs(d.pairing(lam, a)) for a in d.positive_roots)
        assert g.length(g.translation(lam)) == expected


def test_affine_action():
    g = group("A1")
    s0 = g.simple(0)
    # s_0 sends alpha to -alpha + 2 delta and fixes nothing of height zero
    assert g.act(s0, ((1,), 0)) == ((-1,), 2)
    assert g.act(s0, ((-1,), 1)) == ((1,), -1)
    s1 = g.simple(1)
    assert g.act(s1, ((1,), 0)) == ((-1,), 0)
    t = g.translation((1,))
    # t_lam fixes the finite part and shifts the level by -<lam, mu>
    assert g.act(t, ((1,), 0)) == ((1,), -2)


def test_act_inverse_roundtrip():
    g = group("A2")
    x = g.from_word((0, 1, 2))
    for beta in [((1, 0), 0), ((0, -1), 2), ((1, 1), -1)]:
        assert g.act_inv(x, g.act(x, beta)) == beta


def test_affine_reflection_roundtrip():
    g = group("A2")
    for beta in [((1, 0), 0), ((1, 1), 1), ((0, 1), -2)]:
        r = g.affine_reflection(beta)
        assert g.mul(r, r) == g.identity
        back = g.as_reflection(r)
        mu, m = beta
        # as_reflection normalizes to the positive form
        assert back == beta or back == (tuple(-v for v in mu), -m)
    with pytest.raises(ConfigError):
        g.affine_reflection(((2, 0), 1))


# -- windows ----------------------------------------------------------------


def brute_words(g, bound):
    """Least reduced word per element by breadth-first search."""
    best = {g.identity: ()}
    layer = {g.identity: ()}
    for _ in range(bound):
        nxt = {}
        for x, w in layer.items():
            for i in g.labels:
                y = g.mul(x, g.simple(i))
                if y in best:
                    continue
                cand = w + (i,)
                if y not in nxt or cand < nxt[y]:
                    nxt[y] = cand
        best.update(nxt)
        layer = nxt
    return best


@pytest.mark.parametrize("rtype,bound,count", [
    ("A1", 4, 9),
    ("A1", 8, 17),
    ("A2", 3, 19),
    ("A2", 4, 31),
])
def test_window_counts(rtype, bound, count):
    win = group(rtype).window(bound)
    assert len(win.elements) == count


def test_window_words_are_lexmin_reduced():
    for rtype, bound in (("A1", 5), ("A2", 3)):
        g = group(rtype)
        win = g.window(bound)
        oracle = brute_words(g, bound)
        assert set(win.elements) == set(oracle)
        for x in win.elements:
            assert win.words[x] == oracle[x]
            assert g.from_word(win.words[x]) == x
            assert len(win.words[x]) == g.length(x)


def test_window_ordering_and_require():
    g = group("A1")
    win = g.window(3)
    lens = [win.lengths[x] for x in win.elements]
    assert lens == sorted(lens)
    assert win.elements[0] == g.identity
    far = g.translation((5,))
    assert far not in win
    with pytest.raises(WindowExceededError) as err:
        win.require(far)
    assert "window >= 10" in str(err.value)


def test_window_translations():
    g = group("A1")
    win = g.window(8)
    trans = win.translations()
    assert len(trans) == 9
    assert {x.t for x in trans} == {(j,) for j in range(-4, 5)}


def test_descents():
    g = group("A1")
    s0 = g.simple(0)
    assert g.right_descent(s0, 0)
    assert not g.right_descent(s0, 1)
    x = g.from_word((0, 1))
    assert g.right_descent(x, 1)
    assert g.left_descent(x, 0)
    assert not g.left_descent(x, 1)


def test_inversions_count_matches_length():
    g = group("A2")
    for x in g.window(4).elements:
        inv = g.inversions(x)
        assert len(inv) == g.length(x)
        assert len(set(inv)) == len(inv)


def test_reduced_word_standalone():
    g = group("A2")
    win = g.window(4)
    for x in win.elements:
        assert g.reduced_word(x) == win.words[x]


# -- cosets -----------------------------------------------------------------


def finite_lift(g, u):
    return g.from_word(g.datum.weyl_words[u])


def test_coset_decompose_left():
    g = group("A2")
    for x in g.window(4).elements:
        u, v = g.coset_decompose(x)
        assert g.mul(finite_lift(g, u), v) == x
        # v has no finite left descent
        assert not any(g.left_descent(v, i) for i in (1, 2))
        assert g.length(x) == g.datum.weyl_lengths[u] + g.length(v)


def test_coset_decompose_right():
    g = group("A2")
    for x in g.window(4).elements:
        v, u = g.coset_decompose_right(x)
        assert g.mul(v, finite_lift(g, u)) == x
        assert not any(g.right_descent(v, i) for i in (1, 2))
        assert g.length(x) == g.length(v) + g.datum.weyl_lengths[u]


def test_minimal_reps():
    g = group("A2")
    win = g.window(6)
    mins = win.minimal_coset_reps()
    assert len(mins) == 16
    for x in win.elements:
        flag = not any(g.right_descent(x, i) for i in (1, 2))
        assert g.is_minimal_rep(x) == flag
    # each minimal rep's coset contains exactly one translation, and that
    # translation decomposes back to the rep
    for x in mins:
        lam = x.w.act_coroot(x.t)
        v, u = g.coset_decompose_right(g.translation(lam))
        assert v == x


def test_minimal_reps_rank_one():
    g = group("A1")
    win = g.window(8)
    assert len(win.minimal_coset_reps()) == 9


def test_compat_word():
    g = group("A2")
    win = g.window(4)
    for x in win.elements:
        word = win.compat_word(x)
        assert g.from_word(word) == x
        assert len(word) == g.length(x)
        u, v = g.coset_decompose(x)
        k = g.datum.weyl_lengths[u]
        assert word[:k] == g.datum.weyl_words[u]
        assert all(i != 0 for i in word[:k])


def test_bruhat_order():
    g = group("A1")
    e = g.identity
    s0 = g.simple(0)
    x = g.from_word((0, 1))
    y = g.from_word((0, 1, 0))
    assert g.bruhat_leq(e, x)
    assert g.bruhat_leq(s0, y)
    assert g.bruhat_leq(x, y)
    assert not g.bruhat_leq(y, x)
    assert not g.bruhat_leq(g.simple(1), s0)


def test_bruhat_subword_property():
    g = group("A2")
    win = g.window(3)
    for x in win.elements:
        for y in win.elements:
            if g.bruhat_leq(x, y):
                assert g.length(x) <= g.length(y)
    # any prefix of a reduced word is Bruhat below the full element
    y = g.from_word((0, 1, 2))
    for k in range(4):
        assert g.bruhat_leq(g.from_word((0, 1, 2)[:k]), y)


def test_names():
    g = group("A1")
    assert g.element_name(g.identity) == "e"
    assert g.element_name(g.simple(0)) == "s0"
    assert "s0 s1" in g.element_name(g.from_word((0, 1)))
