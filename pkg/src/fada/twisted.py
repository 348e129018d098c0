"""The twisted formal group algebra and the affine Demazure elements.

Q_W is the free left module over the localized algebra Q with basis eta_w for
w in the affine Weyl group, multiplied by the twisted rule

    (c * eta_w) (c' * eta_w') = c * w(c') * eta_{w w'}.

The Demazure elements X_i = (1/x_{alpha_i}) (1 - eta_{s_i}) generate the
subalgebra of interest; products along reduced words expand triangularly in
the eta basis, and the inverse change of basis is solved by back-substitution.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .algebra import AlgebraElement, Localized, TorusAlgebra
from .errors import ConfigError, NotApplicableError
from .roots import AffineElt, Vec, Window
from .scalars import Scalar


class TwistedElement:
    """A finite left-Q combination of eta_w basis elements."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: "TwistedAlgebra", terms: Dict[AffineElt, Localized]):
        self.algebra = algebra
        self.terms = {w: c for w, c in terms.items() if not c.is_zero()}

    # -- ring structure ----------------------------------------------------

    def __add__(self, other):
        other = self.algebra.coerce(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out[w] + c if w in out else c
        return TwistedElement(self.algebra, out)

    __radd__ = __add__

    def __neg__(self):
        return TwistedElement(self.algebra, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self.algebra.coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self.algebra.coerce(other)
        torus = self.algebra.torus
        out: Dict[AffineElt, Localized] = {}
        for w, c in self.terms.items():
            for w2, c2 in other.terms.items():
                key = torus.group.mul(w, w2)
                val = c * torus.act_loc(w, c2)
                out[key] = out[key] + val if key in out else val
        return TwistedElement(self.algebra, out)

    def __rmul__(self, other):
        # scalars embed as coefficients of eta_e, so coerce and multiply
        return self.algebra.coerce(other) * self

    def __eq__(self, other):
        other = self.algebra.coerce(other)
        for w in set(self.terms) | set(other.terms):
            a = self.terms.get(w)
            b = other.terms.get(w)
            if a is None:
                if not b.simplify().is_negligible():
                    return False
            elif b is None:
                if not a.simplify().is_negligible():
                    return False
            elif not (a == b):
                return False
        return True

    def __hash__(self):
        raise TypeError("TwistedElement is unhashable")

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.terms.values())

    def simplify(self) -> "TwistedElement":
        return TwistedElement(self.algebra, {w: c.simplify() for w, c in self.terms.items()})

    def coefficient(self, w: AffineElt) -> Localized:
        if w in self.terms:
            return self.terms[w]
        return Localized(self.algebra.torus, self.algebra.torus.ring.zero())

    def support(self) -> List[AffineElt]:
        return list(self.terms)

    def __repr__(self):
        group = self.algebra.torus.group
        parts = []
        for w in sorted(self.terms, key=group.length):
            parts.append("(%r) eta[%s]" % (self.terms[w], group.word_name(group.reduced_word(w))))
        return " + ".join(parts) if parts else "0"


class TwistedAlgebra:
    """Q_W over a torus algebra, with cached Demazure word products."""

    def __init__(self, torus: TorusAlgebra):
        self.torus = torus
        self._xop: Dict[int, TwistedElement] = {}
        self._xword: Dict[Tuple[int, ...], TwistedElement] = {}

    # -- constructors ------------------------------------------------------

    def zero(self) -> TwistedElement:
        return TwistedElement(self, {})

    def one(self) -> TwistedElement:
        return self.eta(self.torus.group.identity)

    def eta(self, w: AffineElt) -> TwistedElement:
        return TwistedElement(self, {w: Localized(self.torus, self.torus.ring.one())})

    def coerce(self, value) -> TwistedElement:
        if isinstance(value, TwistedElement):
            return value
        ident = self.torus.group.identity
        if isinstance(value, Localized):
            return TwistedElement(self, {ident: value})
        if isinstance(value, AlgebraElement):
            return TwistedElement(self, {ident: Localized(self.torus, value)})
        if isinstance(value, (int, Scalar)):
            return TwistedElement(
                self, {ident: Localized(self.torus, self.torus.ring.from_scalar(value))})
        raise TypeError("cannot coerce %r into the twisted algebra" % type(value))

    # -- Demazure elements -------------------------------------------------

    def x_op(self, i: int) -> TwistedElement:
        """X_i = (1/x_{alpha_i}) (1 - eta_{s_i})."""
        if i not in self._xop:
            torus = self.torus
            b = torus.embed_root(torus.group.simple_root(i))
            inv = Localized(torus, torus.ring.one(), (b,))
            self._xop[i] = TwistedElement(
                self, {torus.group.identity: inv, torus.group.simple(i): -inv})
        return self._xop[i]

    def x_word(self, word: Sequence[int]) -> TwistedElement:
        """X_{i_1} ... X_{i_k}, cached along prefixes."""
        word = tuple(word)
        if word in self._xword:
            return self._xword[word]
        if not word:
            out = self.one()
        else:
            out = self.x_word(word[:-1]) * self.x_op(word[-1])
        self._xword[word] = out
        return out

    def z_alpha(self, alpha: Vec) -> TwistedElement:
        """Z_alpha = (1/x_{-alpha}) (1 - eta_{t_{alpha^v}}) for a finite root."""
        torus = self.torus
        datum = torus.datum
        if tuple(alpha) not in datum.coroot_of:
            raise ConfigError("%r is not a finite root" % (alpha,))
        neg = tuple(-v for v in alpha)
        b = torus.embed_root((neg, 0))
        inv = Localized(torus, torus.ring.one(), (b,))
        t = torus.group.translation(datum.coroot_of[tuple(alpha)])
        return TwistedElement(self, {torus.group.identity: inv, t: -inv})


# -- change of basis -------------------------------------------------------


class ExpansionTables:
    """Triangular change of basis between {eta_w} and {X_{I_w}} on a window.

    I_w is the canonical reduced word of w of the form (finite part) +
    (minimal coset representative part), so products X_{I_u} X_{I_v} respect
    the Weyl-translation factorization used by the Peterson expansion.
    """

    def __init__(self, algebra: TwistedAlgebra, window: Window, word_product=None):
        self.algebra = algebra
        self.window = window
        self.word_product = word_product if word_product is not None else algebra.x_word
        self.words: Dict[AffineElt, Tuple[int, ...]] = {
            w: window.compat_word(w) for w in window.elements
        }
        # a[w][u]: X_{I_w} = sum_u a[w][u] eta_u
        self.a: Dict[AffineElt, Dict[AffineElt, Localized]] = {}
        for w in window.elements:
            self.a[w] = dict(self.word_product(self.words[w]).terms)
        # b[w][u]: eta_w = sum_u b[w][u] X_{I_u}, solved in increasing length
        self.b: Dict[AffineElt, Dict[AffineElt, Localized]] = {}
        for w in window.elements:
            aw = self.a[w]
            diag_inv = aw[w].inverse()
            out: Dict[AffineElt, Localized] = {w: diag_inv}
            for u, c in aw.items():
                if u == w:
                    continue
                if u not in self.b:
                    raise ConfigError(
                        "expansion of X_{I_w} is not triangular; unexpected "
                        "support at an element not yet solved")
                scale = diag_inv * c
                for v, b_uv in self.b[u].items():
                    delta = -(scale * b_uv)
                    out[v] = out[v] + delta if v in out else delta
            simplified = {v: c.simplify() for v, c in out.items()}
            self.b[w] = {v: c for v, c in simplified.items()
                         if not c.is_negligible()}

    def eta_in_x(self, w: AffineElt) -> Dict[AffineElt, Localized]:
        self.window.require(w)
        return self.b[w]

    def expand_in_x(self, z: TwistedElement) -> Dict[AffineElt, Localized]:
        """Left-coefficient expansion of z in the X_{I_w} basis."""
        out: Dict[AffineElt, Localized] = {}
        for u, c in z.terms.items():
            self.window.require(u, "eta support of the element")
            for v, b_uv in self.b[u].items():
                delta = c * b_uv
                out[v] = out[v] + delta if v in out else delta
        simplified = {v: c.simplify() for v, c in out.items()}
        return {v: c for v, c in simplified.items() if not c.is_negligible()}

    def x_coefficients_regular(self, expansion: Dict[AffineElt, Localized]) -> bool:
        """Whether every coefficient lies in S (no surviving denominator)."""
        return all(not c.simplify().den for c in expansion.values())


# -- braid relations -------------------------------------------------------


@dataclass
class BraidReport:
    i: int
    j: int
    order: int
    holds: bool
    witness: Optional[str] = None

    def line(self) -> str:
        if self.holds:
            return "braid (%d,%d) of order %d: holds" % (self.i, self.j, self.order)
        return ("braid (%d,%d) of order %d: fails at %s"
                % (self.i, self.j, self.order, self.witness))


def braid_check(algebra: TwistedAlgebra, i: int, j: int) -> BraidReport:
    """Compare the two alternating Demazure products of the braid length.

    Raises NotApplicableError when the Coxeter order of s_i s_j is infinite,
    as for the two generators of the rank-one affine group.
    """
    datum = algebra.torus.datum
    m = datum.braid_order(i, j)
    if m is None:
        raise NotApplicableError(
            "generators %d and %d have infinite braid order; no braid "
            "relation exists to check" % (i, j))
    word_a = tuple((i, j)[k % 2] for k in range(m))
    word_b = tuple((j, i)[k % 2] for k in range(m))
    lhs = algebra.x_word(word_a)
    rhs = algebra.x_word(word_b)
    diff_support = set(lhs.terms) | set(rhs.terms)
    group = algebra.torus.group
    for w in sorted(diff_support, key=lambda x: (group.length(x),
                                                 group.reduced_word(x))):
        ca = lhs.coefficient(w)
        cb = rhs.coefficient(w)
        if not (ca == cb):
            name = group.word_name(group.reduced_word(w))
            return BraidReport(i, j, m, False,
                              witness="eta[%s]: %r vs %r" % (name, ca.simplify(),
                                                             cb.simplify()))
    return BraidReport(i, j, m, True)
