"""Formal group algebras of the big and small torus, in four exact models.

Backends:

* ``ADD``  polynomials in x_1..x_nvars, with x_mu linear in mu  (additive law)
* ``MUL``  the integral group ring of the lattice, x_mu = 1 - e_{-mu}
           (multiplicative law with inverted parameter set to 1)
* ``CON``  group ring over Z[c, c^{-1}], x_mu = c^{-1}(1 - e_{-mu})
           (connective law with generic invertible c)
* ``SER``  truncated power series for an arbitrary formal group law, with a
           tracked per-element precision

The big torus has character lattice Q + Z*delta (coordinates: simple roots,
then delta); the small torus has Q only, and translations act trivially on it.
Keys of the term dictionaries are exponent tuples for ADD/SER and lattice
points for MUL/CON.
"""
from __future__ import annotations

from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import polyops
from .errors import ConfigError, MembershipError, PrecisionError
from .fgl import FormalGroupLaw, TruncatedSeries
from .polyops import Terms
from .scalars import Scalar
from .roots import AffineElt, AffineWeylGroup, AffRoot, FiniteRootDatum, Vec

EXACT_BACKENDS = ("ADD", "MUL", "CON")
BACKENDS = EXACT_BACKENDS + ("SER",)


class FormalRing:
    """One model of the formal group algebra R[[x_Lambda]] of a lattice."""

    def __init__(self, backend: str, nvars: int, fgl: Optional[FormalGroupLaw] = None,
                 precision: int = 8):
        if backend not in BACKENDS:
            raise ConfigError("unknown backend %r" % backend)
        self.backend = backend
        self.nvars = nvars
        if backend == "ADD":
            self.fgl = FormalGroupLaw.additive()
        elif backend == "MUL":
            self.fgl = FormalGroupLaw.multiplicative()
        elif backend == "CON":
            self.fgl = FormalGroupLaw.connective()
        else:
            if fgl is None:
                raise ConfigError("SER backend needs an explicit formal group law")
            self.fgl = fgl
        self.params: Tuple[str, ...] = self.fgl.params
        self.precision = precision
        if backend == "SER" and precision < 1:
            raise ConfigError("series precision must be at least 1")
        self._x_cache: Dict[Vec, "AlgebraElement"] = {}

    # -- scalars and constants --------------------------------------------

    def scalar(self, v) -> Scalar:
        if isinstance(v, Scalar):
            return v if v.params == self.params else v.with_params(self.params)
        return Scalar.const(int(v), self.params)

    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, {}, self._full_prec())

    def one(self) -> "AlgebraElement":
        return AlgebraElement(self, {self._zero_key(): self.scalar(1)}, self._full_prec())

    def from_scalar(self, v) -> "AlgebraElement":
        s = self.scalar(v)
        return AlgebraElement(self, {self._zero_key(): s} if not s.is_zero() else {},
                              self._full_prec())

    def _zero_key(self) -> Vec:
        return (0,) * self.nvars

    def _full_prec(self) -> Optional[int]:
        return self.precision if self.backend == "SER" else None

    # -- the Euler classes x_mu -------------------------------------------

    def x_of(self, mu: Vec) -> "AlgebraElement":
        mu = tuple(mu)
        if len(mu) != self.nvars:
            raise ConfigError("lattice point has wrong rank")
        if mu in self._x_cache:
            return self._x_cache[mu]
        zero = self._zero_key()
        if self.backend == "ADD":
            terms = {
                tuple(1 if j == i else 0 for j in range(self.nvars)): self.scalar(mu[i])
                for i in range(self.nvars) if mu[i]
            }
            out = AlgebraElement(self, terms, None)
        elif self.backend == "MUL":
            terms = {}
            if any(mu):
                terms = {zero: self.scalar(1), tuple(-v for v in mu): self.scalar(-1)}
            out = AlgebraElement(self, terms, None)
        elif self.backend == "CON":
            terms = {}
            if any(mu):
                cinv = Scalar.monomial(self.params, (-1,))
                terms = {zero: cinv, tuple(-v for v in mu): -cinv}
            out = AlgebraElement(self, terms, None)
        else:
            out = self._x_series(mu)
        self._x_cache[mu] = out
        return out

    def _x_series(self, mu: Vec) -> "AlgebraElement":
        prec = self.precision
        acc: Optional[TruncatedSeries] = None
        for i, k in enumerate(mu):
            if not k:
                continue
            var = TruncatedSeries.variable(i, self.nvars, self.params, prec)
            part = self.fgl.multiple(var, k)
            acc = part if acc is None else self.fgl.add(acc, part)
        if acc is None:
            return AlgebraElement(self, {}, prec)
        return AlgebraElement(self, acc.terms, prec)

    # -- term arithmetic ---------------------------------------------------

    def mul_terms(self, a: Terms, b: Terms, prec: Optional[int]) -> Terms:
        return polyops.pmul(a, b, prec if self.backend == "SER" else None)


class AlgebraElement:
    """An element of a FormalRing; SER elements carry the precision to which
    their coefficients are certified."""

    __slots__ = ("ring", "terms", "prec")

    def __init__(self, ring: FormalRing, terms: Terms, prec: Optional[int]):
        self.ring = ring
        if ring.backend == "SER":
            if prec is None:
                prec = ring.precision
            terms = polyops.ptruncate(terms, prec)
        else:
            prec = None
        self.terms = polyops.clean(terms)
        self.prec = prec

    # -- helpers -----------------------------------------------------------

    def _join(self, other: "AlgebraElement") -> Optional[int]:
        if self.ring is not other.ring:
            if (self.ring.backend != other.ring.backend
                    or self.ring.nvars != other.ring.nvars
                    or self.ring.params != other.ring.params):
                raise ConfigError("elements live in different rings")
        if self.prec is None:
            return other.prec
        if other.prec is None:
            return self.prec
        return min(self.prec, other.prec)

    def with_terms(self, terms: Terms, prec: Optional[int] = "same") -> "AlgebraElement":
        return AlgebraElement(self.ring, terms, self.prec if prec == "same" else prec)

    def items(self) -> List[Tuple[Vec, Scalar]]:
        return sorted(self.terms.items(), key=lambda kv: polyops.grlex_key(kv[0]))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, (AlgebraElement, int, Scalar)):
            return NotImplemented
        other = self._coerce(other)
        return AlgebraElement(self.ring, polyops.padd(self.terms, other.terms),
                              self._join(other))

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, (AlgebraElement, int, Scalar)):
            return NotImplemented
        other = self._coerce(other)
        return AlgebraElement(self.ring, polyops.psub(self.terms, other.terms),
                              self._join(other))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return self.with_terms(polyops.pneg(self.terms))

    def __mul__(self, other):
        if isinstance(other, (int, Scalar)):
            return self.with_terms(polyops.pscale(self.terms, self.ring.scalar(other)))
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        prec = self._join(other)
        return AlgebraElement(self.ring, self.ring.mul_terms(self.terms, other.terms, prec),
                              prec)

    def __rmul__(self, other):
        if isinstance(other, (int, Scalar)):
            return self.__mul__(other)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not defined in the formal ring")
        out = self.ring.one()
        base = self
        for _ in range(n):
            out = out * base
        if self.prec is not None:
            out = AlgebraElement(self.ring, out.terms, self.prec)
        return out

    def _coerce(self, other) -> "AlgebraElement":
        if isinstance(other, AlgebraElement):
            return other
        if isinstance(other, (int, Scalar)):
            return self.ring.from_scalar(other)
        raise TypeError("cannot combine AlgebraElement with %r" % type(other))

    def __eq__(self, other):
        if isinstance(other, (int, Scalar)):
            other = self.ring.from_scalar(other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        prec = self._join(other)
        if prec is None:
            return self.terms == other.terms
        return (polyops.ptruncate(self.terms, prec)
                == polyops.ptruncate(other.terms, prec))

    def __hash__(self):
        raise TypeError("AlgebraElement is unhashable; compare with ==")

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, key: Vec) -> Scalar:
        return self.terms.get(tuple(key), self.ring.scalar(0))

    def substitute_params(self, assignment) -> "AlgebraElement":
        """Specialize named parameters to integers, staying in the same ring
        shape (the parameter tuple is kept; substituted names drop out of the
        coefficients)."""
        out: Terms = {}
        for k, c in self.terms.items():
            c2 = c.substitute(assignment)
            if not c2.is_zero():
                out[k] = c2
        return AlgebraElement(self.ring, out, self.prec)

    def __repr__(self):
        parts = ["%s*[%s]" % (c, ",".join(map(str, k))) for k, c in self.items()]
        body = " + ".join(parts) if parts else "0"
        tail = "" if self.prec is None else " + O(%d)" % (self.prec + 1)
        return "<%s %s%s>" % (self.ring.backend, body, tail)


# -- localization ----------------------------------------------------------


class Localized:
    """num / prod x_beta over a multiset of lattice points beta.

    Denominators are stored as a sorted tuple of lattice points with
    multiplicity; equality is tested by cross-multiplication, which is valid
    because every backend ring is an integral domain.
    """

    __slots__ = ("torus", "num", "den")

    def __init__(self, torus: "TorusAlgebra", num: AlgebraElement, den: Iterable[Vec] = ()):
        self.torus = torus
        self.num = num
        self.den = tuple(sorted(tuple(b) for b in den))
        if any(not any(b) for b in self.den):
            raise ConfigError("zero lattice point cannot be inverted")

    # -- basics ------------------------------------------------------------

    def den_product(self) -> AlgebraElement:
        out = self.torus.ring.one()
        for b in self.den:
            out = out * self.torus.ring.x_of(b)
        return out

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_negligible(self) -> bool:
        """Zero through the whole tracked precision, denominator included.

        On exact backends this is plain zeroness.  On SER a vanishing
        numerator only certifies a vanishing value once the denominator's
        valuation is paid for; past that point nothing about the value is
        known and the ambiguity is an error, not a silent zero.
        """
        if not self.num.is_zero():
            return False
        prec = self.num.prec
        if prec is None:
            return True
        if prec - len(self.den) < 0:
            hint = self.torus.ring.precision + len(self.den) - prec
            raise PrecisionError(
                "series precision exhausted by a localized denominator; "
                "rerun with precision >= %d"
                % max(hint, self.torus.ring.precision + 1))
        return True

    def __neg__(self):
        return Localized(self.torus, -self.num, self.den)

    def __add__(self, other):
        other = self._coerce(other)
        lcm: Dict[Vec, int] = {}
        for b in set(self.den) | set(other.den):
            lcm[b] = max(self.den.count(b), other.den.count(b))
        num1 = self.num
        num2 = other.num
        for b, m in sorted(lcm.items()):
            for _ in range(m - self.den.count(b)):
                num1 = num1 * self.torus.ring.x_of(b)
            for _ in range(m - other.den.count(b)):
                num2 = num2 * self.torus.ring.x_of(b)
        den = []
        for b, m in lcm.items():
            den.extend([b] * m)
        return Localized(self.torus, num1 + num2, den)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Scalar)):
            return Localized(self.torus, self.num * other, self.den)
        if isinstance(other, AlgebraElement):
            return Localized(self.torus, self.num * other, self.den)
        if not isinstance(other, Localized):
            return NotImplemented
        return Localized(self.torus, self.num * other.num, self.den + other.den)

    def __rmul__(self, other):
        if isinstance(other, (int, Scalar, AlgebraElement)):
            return self.__mul__(other)
        return NotImplemented

    def _coerce(self, other) -> "Localized":
        if isinstance(other, Localized):
            return other
        if isinstance(other, AlgebraElement):
            return Localized(self.torus, other)
        if isinstance(other, (int, Scalar)):
            return Localized(self.torus, self.torus.ring.from_scalar(other))
        raise TypeError("cannot combine Localized with %r" % type(other))

    def __eq__(self, other):
        other = self._coerce(other)
        if self.num.prec is None and other.num.prec is None:
            return (self.num * other.den_product()) == (other.num * self.den_product())
        # On the truncated backend cross multiplication raises the valuation
        # by the denominator degree, which can push every visible term past
        # the tracked precision and fake an equality.  Cancel denominators
        # first and let the zero test pay for whatever is left.
        return (self - other).simplify().is_negligible()

    def __hash__(self):
        raise TypeError("Localized is unhashable")

    # -- simplification ----------------------------------------------------

    def simplify(self) -> "Localized":
        """Cancel denominator factors that divide the numerator exactly."""
        if self.num.is_zero():
            num = self.num
            if num.prec is not None and self.den:
                # a numerator that vanishes through O(p) over a denominator
                # of valuation d is only known to vanish through O(p - d)
                num = AlgebraElement(num.ring, {}, num.prec - len(self.den))
            return Localized(self.torus, num, ())
        num = self.num
        remaining: List[Vec] = []
        for b in self.den:
            q = self.torus.divide_once(num, b)
            if q is None:
                remaining.append(b)
            else:
                num = q
        return Localized(self.torus, num, remaining)

    def as_element(self) -> AlgebraElement:
        """The underlying ring element; raises if a denominator survives."""
        s = self.simplify()
        if s.den:
            raise MembershipError(
                "element is genuinely localized (denominator %r)" % (s.den,))
        return s.num

    def inverse(self) -> "Localized":
        """Inverse, defined when the numerator is a single unit monomial."""
        items = list(self.num.terms.items())
        if len(items) != 1:
            raise MembershipError("numerator is not a unit monomial")
        key, coeff = items[0]
        if self.torus.ring.backend in ("ADD", "SER"):
            if any(key):
                raise MembershipError("numerator is not a unit in this backend")
        elif not coeff.is_monomial_unit():
            raise MembershipError("numerator coefficient is not a unit")
        inv_num = self.den_product()
        if self.torus.ring.backend in ("MUL", "CON"):
            neg_key = tuple(-v for v in key)
            unit = AlgebraElement(self.torus.ring, {neg_key: coeff.inverse()}, None)
            return Localized(self.torus, inv_num * unit, ())
        return Localized(self.torus, inv_num * coeff.inverse(), ())

    def __repr__(self):
        if not self.den:
            return repr(self.num)
        return "(%r) / x%s" % (self.num, list(self.den))


# -- torus algebras --------------------------------------------------------


class TorusAlgebra:
    """A formal group algebra together with the affine Weyl group action.

    ``torus == 'big'`` uses the lattice Q + Z*delta and the level-zero affine
    action; ``torus == 'small'`` uses Q, on which translations act trivially.
    """

    def __init__(self, datum: FiniteRootDatum, backend: str, torus: str,
                 fgl: Optional[FormalGroupLaw] = None, precision: int = 8,
                 group: Optional[AffineWeylGroup] = None):
        if torus not in ("big", "small"):
            raise ConfigError("torus must be 'big' or 'small'")
        self.datum = datum
        self.torus = torus
        self.group = group if group is not None else AffineWeylGroup(datum)
        nvars = datum.rank + (1 if torus == "big" else 0)
        self.ring = FormalRing(backend, nvars, fgl, precision)

    # -- lattice embedding -------------------------------------------------

    def embed_root(self, beta: AffRoot) -> Vec:
        mu, m = beta
        if self.torus == "big":
            return tuple(mu) + (m,)
        return tuple(mu)

    def x_root(self, beta: AffRoot) -> AlgebraElement:
        return self.ring.x_of(self.embed_root(beta))

    def simple_x(self, i: int) -> AlgebraElement:
        return self.x_root(self.group.simple_root(i))

    def neg_simple_x(self, i: int) -> AlgebraElement:
        mu, m = self.group.simple_root(i)
        return self.x_root((tuple(-v for v in mu), -m))

    # -- Weyl action -------------------------------------------------------

    def act_vec(self, x: AffineElt, v: Vec) -> Vec:
        n = self.datum.rank
        if self.torus == "small":
            return x.w.act_root(v)
        mu = v[:n]
        m = v[n]
        return x.w.act_root(mu) + (m - self.datum.pairing(x.t, mu),)

    def act_elem(self, x: AffineElt, f: AlgebraElement) -> AlgebraElement:
        if f.ring.backend in ("MUL", "CON"):
            out: Terms = {}
            for k, c in f.terms.items():
                k2 = self.act_vec(x, k)
                out[k2] = out[k2] + c if k2 in out else c
            return AlgebraElement(f.ring, out, f.prec)
        # ADD and SER act by substituting each variable's image series
        n = self.ring.nvars
        images = []
        for i in range(n):
            basis = tuple(1 if j == i else 0 for j in range(n))
            images.append(self.ring.x_of(self.act_vec(x, basis)).terms)
        out = polyops.psubstitute(f.terms, images, n, self.ring.params, f.prec)
        return AlgebraElement(f.ring, out, f.prec)

    def act_loc(self, x: AffineElt, f: Localized) -> Localized:
        num = self.act_elem(x, f.num)
        den = [self.act_vec(x, b) for b in f.den]
        return Localized(self, num, den)

    # -- division ----------------------------------------------------------

    def divide_once(self, f: AlgebraElement, b: Vec) -> Optional[AlgebraElement]:
        """f / x_b as a ring element, or None when not exactly divisible."""
        den = self.ring.x_of(tuple(b))
        if den.is_zero():
            raise ConfigError("cannot divide by x_0 = 0")
        if self.ring.backend == "SER":
            if f.is_zero():
                val = polyops.pvaluation(den.terms) or 0
                if f.prec - val < 0:
                    raise PrecisionError("series precision exhausted in division")
                return f.with_terms({}, f.prec - val)
            res = polyops.series_div_exact(f.terms, den.terms, f.prec)
            if res is None:
                return None
            q, qprec = res
            if qprec < 0:
                raise PrecisionError("series precision exhausted in division")
            return AlgebraElement(self.ring, q, qprec)
        q = polyops.pdiv_exact(f.terms, den.terms,
                               laurent=self.ring.backend in ("MUL", "CON"))
        if q is None:
            return None
        return AlgebraElement(self.ring, q, None)

    def divides(self, f: AlgebraElement, beta: AffRoot, d: int) -> Optional[AlgebraElement]:
        """f / x_beta^d when x_beta^d divides f, else None."""
        b = self.embed_root(beta)
        cur = f
        for _ in range(d):
            nxt = self.divide_once(cur, b)
            if nxt is None:
                return None
            cur = nxt
        return cur

    # -- classical operators ----------------------------------------------

    def demazure(self, i: int, f: AlgebraElement) -> AlgebraElement:
        """Delta_i(f) = (f - s_i f) / x_{alpha_i}; always an exact division."""
        diff = f - self.act_elem(self.group.simple(i), f)
        b = self.embed_root(self.group.simple_root(i))
        q = self.divide_once(diff, b)
        if q is None:
            raise MembershipError("difference f - s_i(f) is not divisible by x_i")
        return q

    def kappa(self, i: int) -> Localized:
        """kappa_i = 1/x_{alpha_i} + 1/x_{-alpha_i}, returned simplified."""
        b = self.embed_root(self.group.simple_root(i))
        nb = tuple(-v for v in b)
        one = self.ring.one()
        k = Localized(self, one, (b,)) + Localized(self, one, (nb,))
        return k.simplify()

    def augmentation(self, f: AlgebraElement) -> Scalar:
        """The counit: e_lam -> 1 on group-ring models, x -> 0 on series."""
        if self.ring.backend in ("MUL", "CON"):
            total = self.ring.scalar(0)
            for c in f.terms.values():
                total = total + c
            return total
        return f.coefficient((0,) * self.ring.nvars)

    # -- backend bridges ---------------------------------------------------

    def to_series(self, f: AlgebraElement, target: "TorusAlgebra") -> AlgebraElement:
        """Re-express an exact-backend element in a SER model of the matching
        formal group law, for cross-checking."""
        if target.ring.backend != "SER":
            raise ConfigError("target must be a SER algebra")
        src = self.ring.backend
        if src == "ADD":
            out = target.ring.zero()
            n = self.ring.nvars
            for k, c in f.terms.items():
                term = target.ring.one() * c.with_params(target.ring.params)
                for i in range(n):
                    basis = tuple(1 if j == i else 0 for j in range(n))
                    term = term * (target.ring.x_of(basis) ** k[i])
                out = out + term
            return out
        if src in ("MUL", "CON"):
            out = target.ring.zero()
            cpar = (Scalar.param("c", target.ring.params) if src == "CON"
                    else Scalar.const(1, target.ring.params))
            for lam, c in f.terms.items():
                neg = tuple(-v for v in lam)
                # e_lam = 1 - c * x_{-lam} in the connective normalization
                e_lam = target.ring.one() - target.ring.x_of(neg) * cpar
                out = out + e_lam * _scalar_into(c, target.ring.params)
            return out
        raise ConfigError("to_series expects an exact-backend source")


def _scalar_into(c: Scalar, params: Tuple[str, ...]) -> Scalar:
    return c if c.params == params else c.with_params(params)


def make_torus(datum: FiniteRootDatum, backend: str, torus: str,
               fgl: Optional[FormalGroupLaw] = None, precision: int = 8,
               group: Optional[AffineWeylGroup] = None) -> TorusAlgebra:
    return TorusAlgebra(datum, backend, torus, fgl=fgl, precision=precision, group=group)
