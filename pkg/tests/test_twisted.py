"""The twisted group algebra, Demazure elements and the eta/X tables."""

import pytest

from fada.algebra import AlgebraElement, Localized
from fada.errors import ConfigError, NotApplicableError
from fada.scalars import Scalar
from fada.twisted import ExpansionTables, braid_check

import util

BACKENDS = ("ADD", "MUL", "CON")


def rank_one(backend):
    return util.algebra("A1", backend, "small")


# -- generators -------------------------------------------------------------

@pytest.mark.parametrize("backend", BACKENDS)
@pytest.mark.parametrize("i", [0, 1])
def test_demazure_generator_square(backend, i):
    alg = rank_one(backend)
    x = alg.x_op(i)
    diff = (x * x - x * alg.torus.kappa(1)).simplify()
    assert util.tw_zero(diff)


@pytest.mark.parametrize("backend", BACKENDS)
def test_eta_from_generator(backend):
    alg = rank_one(backend)
    t = alg.torus
    for i, xi in ((0, t.neg_simple_x(1)), (1, t.simple_x(1))):
        lhs = alg.eta(t.group.simple(i))
        rhs = alg.one() - Localized(t, xi) * alg.x_op(i)
        assert util.tw_zero(lhs - rhs)


def test_eta_is_group_like():
    alg = rank_one("CON")
    g = alg.torus.group
    x = g.from_word((0, 1))
    y = g.from_word((1, 0, 1))
    assert util.tw_zero(alg.eta(x) * alg.eta(y) - alg.eta(g.mul(x, y)))


def test_twisting_moves_coefficients():
    alg = rank_one("CON")
    t = alg.torus
    s1 = t.group.simple(1)
    f = Localized(t, t.simple_x(1))
    sf = Localized(t, t.neg_simple_x(1))
    assert util.tw_zero(alg.eta(s1) * f - sf * alg.eta(s1))


@pytest.mark.parametrize("backend", BACKENDS)
def test_demazure_leibniz_against_operator(backend):
    # X_i f = Delta_i(f) + (s_i f) X_i as twisted elements
    alg = rank_one(backend)
    t = alg.torus
    xa = t.simple_x(1)
    f = xa * xa + t.neg_simple_x(1)
    for i in (0, 1):
        s = t.group.simple(i)
        lhs = alg.x_op(i) * Localized(t, f)
        rhs = (alg.coerce(Localized(t, t.demazure(i, f)))
               + Localized(t, t.act_elem(s, f)) * alg.x_op(i))
        assert util.tw_zero(lhs - rhs)


def test_coerce():
    alg = rank_one("CON")
    t = alg.torus
    assert util.tw_zero(alg.coerce(0))
    assert alg.coerce(3).coefficient(t.group.identity) == Localized(t, t.ring.from_scalar(3))
    assert alg.coerce(Scalar.param("c", ("c",))) is not None
    assert alg.coerce(t.simple_x(1)) is not None
    with pytest.raises(TypeError):
        alg.coerce("nope")
    with pytest.raises(TypeError):
        hash(alg.one())


def test_x_word_prefix_cache_consistency():
    alg = rank_one("CON")
    w = (0, 1, 0, 1)
    assert util.tw_zero(alg.x_word(w) - alg.x_word((0, 1)) * alg.x_word((0, 1)))


# -- frozen change-of-basis rows -------------------------------------------


def ab(t):
    a = Localized(t, t.simple_x(1))
    b = Localized(t, t.neg_simple_x(1))
    return a, b


def frozen_eta_rows(alg):
    """eta_w in the X basis for all w of length 2..4, rank one."""
    t = alg.torus
    a, b = ab(t)
    av, nav = util.alpha_vec(t), util.nalpha_vec(t)
    one = Localized(t, t.ring.one())

    def frac(num_loc, den_vec):
        return Localized(t, num_loc.num, num_loc.den + (den_vec,))

    ba = frac(b * (b - a), av)      # b(b-a)/a
    ab_ = frac(a * (a - b), nav)    # a(a-b)/b
    rows = {
        (1, 0): {(): one, (0,): -a, (1,): -a, (1, 0): a * a},
        (0, 1): {(): one, (0,): -b, (1,): -b, (0, 1): b * b},
        (0, 1, 0): {(): one, (0,): ba, (1,): -b, (1, 0): b * b,
                    (0, 1): b * b, (0, 1, 0): -(b * b * b)},
        (1, 0, 1): {(): one, (1,): ab_, (0,): -a, (0, 1): a * a,
                    (1, 0): a * a, (1, 0, 1): -(a * a * a)},
        (1, 0, 1, 0): {(): one, (0,): ab_, (1,): ab_,
                       (1, 0): frac(a * a * (b - a - a), nav),
                       (0, 1): a * a,
                       (0, 1, 0): -(a * a * a), (1, 0, 1): -(a * a * a),
                       (1, 0, 1, 0): a * a * a * a},
        (0, 1, 0, 1): {(): one, (0,): ba, (1,): ba,
                       (0, 1): frac(b * b * (a - b - b), av),
                       (1, 0): b * b,
                       (1, 0, 1): -(b * b * b), (0, 1, 0): -(b * b * b),
                       (0, 1, 0, 1): b * b * b * b},
    }
    return rows


@pytest.mark.parametrize("backend", BACKENDS)
def test_eta_rows_match_frozen_values(backend):
    alg = rank_one(backend)
    tables = util.tables(alg, 4)
    g = alg.torus.group
    win = tables.window
    for word, expected in frozen_eta_rows(alg).items():
        got = tables.eta_in_x(g.from_word(word))
        got_by_word = {win.word(v): c for v, c in got.items()}
        missing = set(expected) ^ set(got_by_word)
        assert not missing, (word, missing)
        for vw, c in expected.items():
            assert got_by_word[vw] == c, (word, vw)


@pytest.mark.parametrize("backend", BACKENDS)
def test_demazure_word_rows_match_frozen_values(backend):
    # X_{(1,0)} and X_{(0,1)} in the eta basis
    alg = rank_one(backend)
    t = alg.torus
    g = t.group
    a, b = ab(t)
    av, nav = util.alpha_vec(t), util.nalpha_vec(t)

    def inv(*dens):
        return Localized(t, t.ring.one(), dens)

    expected_10 = {
        (): inv(av, nav), (0,): -inv(av, nav),
        (1,): -inv(av, av), (1, 0): inv(av, av),
    }
    expected_01 = {
        (): inv(av, nav), (1,): -inv(av, nav),
        (0,): -inv(nav, nav), (0, 1): inv(nav, nav),
    }
    for word, expected in (((1, 0), expected_10), ((0, 1), expected_01)):
        got = {g.reduced_word(w): c for w, c in alg.x_word(word).terms.items()}
        assert set(got) == set(expected)
        for vw, c in expected.items():
            assert got[vw] == c, (word, vw)


@pytest.mark.parametrize("backend", BACKENDS)
def test_tables_invert_each_other(backend):
    alg = rank_one(backend)
    tables = util.tables(alg, 4)
    g = alg.torus.group
    zero = Localized(alg.torus, alg.torus.ring.zero())
    for w in tables.window.elements:
        row = tables.expand_in_x(alg.x_word(tables.window.compat_word(w)))
        for v, c in row.items():
            want = 1 if v == w else 0
            assert c == zero + want, (w, v)
        assert w in row


def test_x_coefficients_regular():
    alg = rank_one("CON")
    tables = util.tables(alg, 4)
    g = alg.torus.group
    assert tables.x_coefficients_regular(tables.eta_in_x(g.from_word((0, 1))))
    exp = tables.expand_in_x(alg.x_op(0) * Localized(alg.torus, alg.torus.ring.one(), (util.alpha_vec(alg.torus),)))
    assert not tables.x_coefficients_regular(exp)


# -- braid relations --------------------------------------------------------


def test_rank_one_has_no_braid_relation():
    alg = rank_one("CON")
    with pytest.raises(NotApplicableError):
        braid_check(alg, 0, 1)


@pytest.mark.parametrize("pair", [(1, 2), (0, 1), (0, 2)])
def test_braid_holds_for_connective_a2(pair):
    alg = util.algebra("A2", "CON", "small")
    rep = braid_check(alg, *pair)
    assert rep.holds and rep.order == 3
    assert rep.witness is None


def test_braid_word_independence_a2():
    alg = util.algebra("A2", "CON", "small")
    assert util.tw_zero(alg.x_word((1, 2, 1)) - alg.x_word((2, 1, 2)))


def test_braid_fails_for_hyperbolic():
    alg = util.algebra("A2", "SER", "small", fgl="hyperbolic", precision=6)
    rep = braid_check(alg, 1, 2)
    assert not rep.holds
    assert rep.witness and "eta[" in rep.witness
    assert "fails" in rep.line()


# -- the translation element ------------------------------------------------


@pytest.mark.parametrize("backend", BACKENDS)
def test_z_alpha_demazure_form(backend):
    # Z = X_0 + X_1 - x_{-alpha} X_0 X_1
    alg = rank_one(backend)
    t = alg.torus
    alpha = t.group.simple_root(1)[0]
    za = alg.z_alpha(alpha)
    b = Localized(t, t.neg_simple_x(1))
    rhs = alg.x_op(0) + alg.x_op(1) - b * (alg.x_op(0) * alg.x_op(1))
    assert util.tw_zero(za - rhs)


def test_z_alpha_specializations():
    # additive: the correction coefficient is +x_alpha
    t = rank_one("ADD").torus
    za = rank_one("ADD").z_alpha((1,))
    tr = t.group.translation((1,))
    assert za.coefficient(t.group.identity) == Localized(t, t.ring.one(), (util.nalpha_vec(t),))
    corr = util.tables(rank_one("ADD"), 2).expand_in_x(za)
    by_word = {util.tables(rank_one("ADD"), 2).window.word(v): c for v, c in corr.items()}
    assert by_word[(0, 1)] == Localized(t, t.simple_x(1))

    # multiplicative: the correction coefficient is e^alpha - 1
    m = rank_one("MUL")
    tm = m.torus
    corr_m = util.tables(m, 2).expand_in_x(m.z_alpha((1,)))
    by_word_m = {util.tables(m, 2).window.word(v): c for v, c in corr_m.items()}
    e_alpha = AlgebraElement(tm.ring, {(1,): Scalar.const(1)}, None)
    assert by_word_m[(0, 1)] == Localized(tm, e_alpha - tm.ring.one())


@pytest.mark.parametrize("backend", BACKENDS)
def test_z_alpha_powers(backend):
    # Z^k = (1 - eta_t)^k / x_{-alpha}^k since translations fix the small torus
    alg = rank_one(backend)
    t = alg.torus
    za = alg.z_alpha((1,))
    tr = alg.eta(t.group.translation((1,)))
    nav = util.nalpha_vec(t)
    power = alg.one()
    zk = alg.one()
    for k in range(1, 4):
        power = power * (alg.one() - tr)
        zk = zk * za
        scaled = power * Localized(t, t.ring.one(), (nav,) * k)
        assert util.tw_zero(zk - scaled), k


def test_z_alpha_rejects_non_roots():
    alg = rank_one("CON")
    with pytest.raises(ConfigError):
        alg.z_alpha((2,))


def test_z_alpha_series_backend():
    alg = util.algebra("A1", "SER", "small", fgl="connective", precision=8)
    t = alg.torus
    za = alg.z_alpha((1,))
    b = Localized(t, t.neg_simple_x(1))
    rhs = alg.x_op(0) + alg.x_op(1) - b * (alg.x_op(0) * alg.x_op(1))
    assert util.tw_zero(za - rhs)
