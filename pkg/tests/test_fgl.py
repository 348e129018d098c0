"""Formal group laws and truncated series."""

import pytest

from fada.errors import ConfigError, PrecisionError
from fada.fgl import FormalGroupLaw, TruncatedSeries, from_descriptor
from fada.scalars import Scalar


def ts_x(params=(), prec=8):
    return TruncatedSeries.variable(0, 1, params, prec)


def two_vars(params, prec=8):
    x = TruncatedSeries.variable(0, 2, params, prec)
    y = TruncatedSeries.variable(1, 2, params, prec)
    return x, y


# -- series basics ----------------------------------------------------------


def test_series_arithmetic_and_precision_join():
    x = ts_x(prec=8)
    y = ts_x(prec=3)
    s = x + y
    assert s.prec == 3
    p = x * x
    assert p.coefficient((2,)) == 1
    assert (x - x).is_zero()
    assert TruncatedSeries.zero(1, (), 5).valuation() is None
    assert (x * x * x).valuation() == 3


def test_series_eq_truncates():
    x = ts_x(prec=8)
    lo = ts_x(prec=2)
    assert lo == x + x * x * x  # cube is beyond the common precision
    assert not (x == x + x * x)


def test_series_const_and_mismatch():
    c = TruncatedSeries.const(Scalar.const(7), 1, 6)
    assert c.coefficient((0,)) == 7
    with pytest.raises(ValueError):
        ts_x(prec=4) + TruncatedSeries.variable(0, 2, (), 4)


# -- coefficient tables -----------------------------------------------------


def test_builtin_tables():
    add = FormalGroupLaw.additive().table(4)
    assert add == {(1, 0): Scalar.const(1), (0, 1): Scalar.const(1)}

    mul = FormalGroupLaw.multiplicative().table(4)
    assert mul[(1, 1)] == Scalar.const(-1)
    assert set(mul) == {(1, 0), (0, 1), (1, 1)}

    con = FormalGroupLaw.connective().table(4)
    assert con[(1, 1)] == -Scalar.param("c", ("c",))
    assert set(con) == {(1, 0), (0, 1), (1, 1)}


def test_hyperbolic_table_matches_geometric_expansion():
    # (x + y - cxy) / (1 + axy) = sum_k (-a)^k (xy)^k (x + y - cxy), so the
    # only nonzero entries sit at (k+1, k), (k, k+1) and (k+1, k+1)
    P = ("c", "a")
    c = Scalar.param("c", P)
    a = Scalar.param("a", P)
    one = Scalar.const(1, P)
    expected = {}
    for k in range(4):
        s = (-a) ** k
        expected[(k + 1, k)] = s * one
        expected[(k, k + 1)] = s * one
        expected[(k + 1, k + 1)] = -(s * c)
    expected = {e: v for e, v in expected.items() if sum(e) <= 6}
    got = FormalGroupLaw.hyperbolic().table(6)
    assert got == expected


def test_table_beyond_custom_degree_raises():
    P = ("c",)
    coeffs = FormalGroupLaw.connective().table(3)
    law = FormalGroupLaw.custom(coeffs, 3, P)
    assert law.table(3) == coeffs
    with pytest.raises(PrecisionError):
        law.table(4)


# -- the group operation ----------------------------------------------------


@pytest.mark.parametrize("law", [
    FormalGroupLaw.additive(),
    FormalGroupLaw.multiplicative(),
    FormalGroupLaw.connective(),
    FormalGroupLaw.hyperbolic(),
])
def test_validate_builtins(law):
    law.validate(6)


def test_validate_rejects_broken_laws():
    P = ()
    one = Scalar.const(1, P)
    # not symmetric
    bad = {(1, 0): one, (0, 1): one, (2, 1): one}
    with pytest.raises(ConfigError):
        FormalGroupLaw.custom(bad, 4, P).validate(4)
    # x + y + x^2 y^2 breaks associativity
    bad2 = {(1, 0): one, (0, 1): one, (2, 2): one}
    with pytest.raises(ConfigError):
        FormalGroupLaw.custom(bad2, 5, P).validate(5)
    # unit axiom failure
    bad3 = {(1, 0): one, (0, 1): one, (2, 0): one, (0, 2): one}
    with pytest.raises(ConfigError):
        FormalGroupLaw.custom(bad3, 4, P).validate(4)


def test_add_matches_closed_forms():
    P = ("c",)
    c = Scalar.param("c", P)
    law = FormalGroupLaw.connective()
    x, y = two_vars(P, prec=6)
    s = law.add(x, y)
    assert s.coefficient((1, 0)) == 1
    assert s.coefficient((0, 1)) == 1
    assert s.coefficient((1, 1)) == -c
    assert s.coefficient((2, 1)).is_zero()


def test_formal_inverse_per_law():
    x = ts_x((), 6)
    assert FormalGroupLaw.additive().inverse(x) == -x

    # multiplicative: i(x) = -x - x^2 - x^3 - ...
    minv = FormalGroupLaw.multiplicative().inverse(x)
    for k in range(1, 7):
        assert minv.coefficient((k,)) == -1

    P = ("c",)
    c = Scalar.param("c", P)
    xc = ts_x(P, 6)
    cinv = FormalGroupLaw.connective().inverse(xc)
    for k in range(1, 7):
        assert cinv.coefficient((k,)) == -(c ** (k - 1))

    # the hyperbolic inverse agrees with the connective one: the denominator
    # 1 + a x i(x) contributes nothing because x + i(x) - c x i(x) must vanish
    PH = ("c", "a")
    ch = Scalar.param("c", PH)
    xh = ts_x(PH, 6)
    hinv = FormalGroupLaw.hyperbolic().inverse(xh)
    for k in range(1, 7):
        assert hinv.coefficient((k,)) == -(ch ** (k - 1))


@pytest.mark.parametrize("law", [
    FormalGroupLaw.multiplicative(),
    FormalGroupLaw.connective(),
    FormalGroupLaw.hyperbolic(),
])
def test_inverse_is_two_sided(law):
    x = ts_x(law.params, 7)
    assert law.add(x, law.inverse(x)).is_zero()
    assert law.add(law.inverse(x), x).is_zero()


def test_multiple():
    P = ("c",)
    c = Scalar.param("c", P)
    law = FormalGroupLaw.connective()
    x = ts_x(P, 6)
    two = law.multiple(x, 2)
    assert two.coefficient((1,)) == 2
    assert two.coefficient((2,)) == -c
    assert two.coefficient((3,)).is_zero()
    assert law.multiple(x, 0).is_zero()
    assert law.multiple(x, -1) == law.inverse(x)
    assert law.multiple(x, 3) == law.add(x, two)

    # multiplicative [3](x) = 1 - (1-x)^3
    m = FormalGroupLaw.multiplicative()
    xm = ts_x((), 6)
    three = m.multiple(xm, 3)
    assert three.coefficient((1,)) == 3
    assert three.coefficient((2,)) == -3
    assert three.coefficient((3,)) == 1
    assert three.coefficient((4,)).is_zero()


def test_add_rejects_constant_terms():
    law = FormalGroupLaw.additive()
    x = ts_x((), 5)
    bad = x + TruncatedSeries.const(Scalar.const(1), 1, 5)
    with pytest.raises(ValueError):
        law.add(bad, x)


# -- descriptors ------------------------------------------------------------


def test_from_descriptor_builtins():
    assert from_descriptor({"kind": "connective"}).kind == "connective"
    assert from_descriptor({"kind": "hyperbolic"}).params == ("c", "a")
    with pytest.raises(ConfigError):
        from_descriptor({"kind": "elliptic"})
    with pytest.raises(ConfigError):
        from_descriptor({"no": "kind"})


def test_from_descriptor_custom_roundtrip():
    desc = {
        "kind": "custom",
        "params": ["b"],
        "degree": 4,
        "coeffs": [[1, 0, "1"], [0, 1, "1"], [1, 1, "2b"]],
    }
    law = from_descriptor(desc)
    law.validate(4)
    tab = law.table(4)
    assert tab[(1, 1)] == Scalar.monomial(("b",), (1,), 2)
    with pytest.raises(ConfigError):
        from_descriptor({"kind": "custom", "params": [], "degree": 3,
                         "coeffs": [[1, 0, "1"], [0, 1, "not_a_param"]]})
