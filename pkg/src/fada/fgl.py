"""One-dimensional commutative formal group laws over exact coefficient rings.

Supported families:

* ``additive``        F(x, y) = x + y                          over Z
* ``multiplicative``  F(x, y) = x + y - xy                     over Z
* ``connective``      F(x, y) = x + y - c*xy                   over Z[c]
* ``hyperbolic``      F(x, y) = (x + y - c*xy) / (1 + a*xy)    over Z[c, a]
* ``custom``          arbitrary coefficient table, validated to its degree

The first three have finite coefficient tables and admit exact polynomial or
group-algebra models elsewhere in the package; the hyperbolic and custom kinds
are handled through truncated power series with tracked precision.
"""
from __future__ import annotations

from typing import Dict, Optional, Tuple

from . import polyops
from .errors import ConfigError, PrecisionError
from .polyops import Terms
from .scalars import Scalar

DEFAULT_DEGREE = 8


class TruncatedSeries:
    """A multivariate power series known exactly up to a total degree.

    `prec` is inclusive: all terms of total degree <= prec are correct and
    stored; higher terms are unknown.
    """

    __slots__ = ("nvars", "params", "prec", "terms")

    def __init__(self, nvars: int, params: Tuple[str, ...], prec: int, terms: Terms):
        self.nvars = nvars
        self.params = params
        self.prec = prec
        self.terms = polyops.clean(polyops.ptruncate(terms, prec))

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(nvars: int, params: Tuple[str, ...], prec: int) -> "TruncatedSeries":
        return TruncatedSeries(nvars, params, prec, {})

    @staticmethod
    def variable(i: int, nvars: int, params: Tuple[str, ...], prec: int) -> "TruncatedSeries":
        e = tuple(1 if j == i else 0 for j in range(nvars))
        return TruncatedSeries(nvars, params, prec, {e: Scalar.const(1, params)})

    @staticmethod
    def const(s: Scalar, nvars: int, prec: int) -> "TruncatedSeries":
        return TruncatedSeries(nvars, s.params, prec, {(0,) * nvars: s})

    # -- arithmetic --------------------------------------------------------

    def _join(self, other: "TruncatedSeries") -> int:
        if self.nvars != other.nvars or self.params != other.params:
            raise ValueError("series ring mismatch")
        return min(self.prec, other.prec)

    def __add__(self, other):
        p = self._join(other)
        return TruncatedSeries(self.nvars, self.params, p, polyops.padd(self.terms, other.terms))

    def __sub__(self, other):
        p = self._join(other)
        return TruncatedSeries(self.nvars, self.params, p, polyops.psub(self.terms, other.terms))

    def __neg__(self):
        return TruncatedSeries(self.nvars, self.params, self.prec, polyops.pneg(self.terms))

    def __mul__(self, other):
        if isinstance(other, Scalar):
            return TruncatedSeries(self.nvars, self.params, self.prec, polyops.pscale(self.terms, other))
        p = self._join(other)
        return TruncatedSeries(self.nvars, self.params, p, polyops.pmul(self.terms, other.terms, p))

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        p = self._join(other)
        return polyops.ptruncate(self.terms, p) == polyops.ptruncate(other.terms, p)

    def is_zero(self) -> bool:
        return not self.terms

    def valuation(self) -> Optional[int]:
        return polyops.pvaluation(self.terms)

    def coefficient(self, e: Tuple[int, ...]) -> Scalar:
        return self.terms.get(e, Scalar.const(0, self.params))

    def __repr__(self):
        items = sorted(self.terms.items(), key=lambda kv: polyops.grlex_key(kv[0]))
        body = ", ".join("%s: %s" % (e, c) for e, c in items)
        return "TruncatedSeries({%s} + O(deg %d))" % (body, self.prec + 1)


class FormalGroupLaw:
    """A formal group law presented by its coefficient table F = sum a_ij x^i y^j."""

    def __init__(self, kind: str, params: Tuple[str, ...], table_degree: Optional[int]):
        self.kind = kind
        self.params = params
        # None means the coefficient table is finite and exact at all degrees
        self.table_degree = table_degree
        self._table_cache: Dict[int, Dict[Tuple[int, int], Scalar]] = {}
        self._custom: Optional[Dict[Tuple[int, int], Scalar]] = None

    # -- constructors ------------------------------------------------------

    @staticmethod
    def additive() -> "FormalGroupLaw":
        return FormalGroupLaw("additive", (), None)

    @staticmethod
    def multiplicative() -> "FormalGroupLaw":
        return FormalGroupLaw("multiplicative", (), None)

    @staticmethod
    def connective() -> "FormalGroupLaw":
        return FormalGroupLaw("connective", ("c",), None)

    @staticmethod
    def hyperbolic() -> "FormalGroupLaw":
        return FormalGroupLaw("hyperbolic", ("c", "a"), None)

    @staticmethod
    def custom(coeffs: Dict[Tuple[int, int], Scalar], degree: int, params: Tuple[str, ...]) -> "FormalGroupLaw":
        fgl = FormalGroupLaw("custom", params, degree)
        fgl._custom = dict(coeffs)
        fgl.validate(degree)
        return fgl

    # -- coefficient table -------------------------------------------------

    def table(self, degree: int) -> Dict[Tuple[int, int], Scalar]:
        """Coefficients a_ij for 1 <= i + j <= degree."""
        if self.table_degree is not None and degree > self.table_degree:
            raise PrecisionError(
                "table for %s known to degree %d, requested %d"
                % (self.kind, self.table_degree, degree)
            )
        if degree in self._table_cache:
            return self._table_cache[degree]
        one = Scalar.const(1, self.params)
        if self.kind == "additive":
            tab = {(1, 0): one, (0, 1): one}
        elif self.kind == "multiplicative":
            tab = {(1, 0): one, (0, 1): one, (1, 1): -one}
        elif self.kind == "connective":
            c = Scalar.param("c", self.params)
            tab = {(1, 0): one, (0, 1): one, (1, 1): -c}
        elif self.kind == "hyperbolic":
            tab = self._hyperbolic_table(degree)
        elif self.kind == "custom":
            tab = {ij: c for ij, c in self._custom.items() if ij[0] + ij[1] <= degree}
        else:
            raise ConfigError("unknown formal group law kind %r" % self.kind)
        tab = {ij: c for ij, c in tab.items() if not c.is_zero()}
        self._table_cache[degree] = tab
        return tab

    def _hyperbolic_table(self, degree: int) -> Dict[Tuple[int, int], Scalar]:
        # expand (x + y - c*xy) * (1 + a*xy)^(-1) as a bivariate series
        params = self.params
        c = Scalar.param("c", params)
        a = Scalar.param("a", params)
        num: Terms = {
            (1, 0): Scalar.const(1, params),
            (0, 1): Scalar.const(1, params),
            (1, 1): -c,
        }
        den: Terms = {(0, 0): Scalar.const(1, params), (1, 1): a}
        inv = polyops.series_inverse_unit(den, 2, params, degree)
        prod = polyops.pmul(num, inv, degree)
        return {e: s for e, s in prod.items()}

    # -- series operations -------------------------------------------------

    def _check_args(self, *series: TruncatedSeries) -> Tuple[int, Tuple[str, ...], int]:
        nvars = series[0].nvars
        params = series[0].params
        prec = min(s.prec for s in series)
        for s in series:
            if s.nvars != nvars or s.params != params:
                raise ValueError("series ring mismatch")
            if s.terms.get((0,) * nvars) is not None:
                raise ValueError("formal group law arguments must have zero constant term")
        if prec < 1:
            raise PrecisionError("cannot certify any positive degree (precision %d)" % prec)
        for p in self.params:
            if p not in params:
                raise ValueError("series scalars lack parameter %r" % p)
        return nvars, params, prec

    def add(self, p: TruncatedSeries, q: TruncatedSeries) -> TruncatedSeries:
        """Evaluate F(p, q) as a truncated series."""
        nvars, params, prec = self._check_args(p, q)
        tab = self.table(prec)
        out: Terms = {}
        pows_p: Dict[int, Terms] = {0: {(0,) * nvars: Scalar.const(1, params)}}
        pows_q: Dict[int, Terms] = {0: {(0,) * nvars: Scalar.const(1, params)}}

        def power(cache, base, k):
            if k not in cache:
                cache[k] = polyops.pmul(power(cache, base, k - 1), base.terms, prec)
            return cache[k]

        for (i, j), a_ij in sorted(tab.items()):
            term = polyops.pmul(power(pows_p, p, i), power(pows_q, q, j), prec)
            aij = a_ij if a_ij.params == params else a_ij.with_params(params)
            out = polyops.padd(out, polyops.pscale(term, aij))
        return TruncatedSeries(nvars, params, prec, out)

    def inverse(self, p: TruncatedSeries) -> TruncatedSeries:
        """The formal inverse i(p) with F(p, i(p)) = 0, solved term by term."""
        nvars, params, prec = self._check_args(p)
        cur = -p
        while True:
            err = self.add(p, cur)
            v = err.valuation()
            if v is None or v > prec:
                return cur
            cur = cur - err

    def multiple(self, p: TruncatedSeries, n: int) -> TruncatedSeries:
        """The n-fold formal sum [n](p); negative n uses the formal inverse."""
        nvars, params, prec = self._check_args(p)
        if n < 0:
            return self.multiple(self.inverse(p), -n)
        acc = TruncatedSeries.zero(nvars, params, prec)
        for _ in range(n):
            acc = self.add(acc, p) if not acc.is_zero() else p
        return acc if n else TruncatedSeries.zero(nvars, params, prec)

    # -- axioms ------------------------------------------------------------

    def validate(self, degree: int) -> None:
        """Check unit, commutativity and associativity up to total degree."""
        tab = self.table(degree)
        one = Scalar.const(1, self.params)
        if tab.get((1, 0)) != one or tab.get((0, 1)) != one:
            raise ConfigError("formal group law must satisfy F(x,0) = x and F(0,y) = y")
        for (i, j), cij in tab.items():
            if j == 0 and i != 1 and not cij.is_zero():
                raise ConfigError("F(x, 0) must equal x; found coefficient at x^%d" % i)
            if i == 0 and j != 1 and not cij.is_zero():
                raise ConfigError("F(0, y) must equal y; found coefficient at y^%d" % j)
            if tab.get((j, i), Scalar.const(0, self.params)) != cij:
                raise ConfigError("coefficient table is not symmetric at (%d, %d)" % (i, j))
        params = self.params
        x = TruncatedSeries.variable(0, 3, params, degree)
        y = TruncatedSeries.variable(1, 3, params, degree)
        z = TruncatedSeries.variable(2, 3, params, degree)
        left = self.add(self.add(x, y), z)
        right = self.add(x, self.add(y, z))
        if left != right:
            raise ConfigError("associativity fails up to degree %d" % degree)

    def __repr__(self):
        return "FormalGroupLaw(%s)" % self.kind


def from_descriptor(desc: dict) -> FormalGroupLaw:
    """Build a formal group law from a JSON-style descriptor.

    ``{"kind": "connective"}`` or
    ``{"kind": "custom", "degree": N, "params": [...], "coeffs": [[i, j, "scalar"], ...]}``.
    """
    if not isinstance(desc, dict) or "kind" not in desc:
        raise ConfigError("formal group law descriptor must be an object with a 'kind'")
    kind = desc["kind"]
    if kind == "additive":
        return FormalGroupLaw.additive()
    if kind == "multiplicative":
        return FormalGroupLaw.multiplicative()
    if kind == "connective":
        return FormalGroupLaw.connective()
    if kind == "hyperbolic":
        return FormalGroupLaw.hyperbolic()
    if kind == "custom":
        try:
            degree = int(desc["degree"])
            params = tuple(desc.get("params", ()))
            coeffs = {}
            for i, j, text in desc["coeffs"]:
                coeffs[(int(i), int(j))] = Scalar.parse(text, params)
        except (KeyError, TypeError, ValueError) as exc:
            raise ConfigError("bad custom formal group law descriptor: %s" % exc) from exc
        try:
            return FormalGroupLaw.custom(coeffs, degree, params)
        except PrecisionError as exc:
            raise ConfigError(str(exc)) from exc
    raise ConfigError("unknown formal group law kind %r" % kind)
