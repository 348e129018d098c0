"""The Peterson subalgebra: centralizer elements, basis, structure constants.

Over the small torus, translations act trivially on coefficients, so an
element of the twisted algebra commutes with the whole coefficient algebra
exactly when its eta-support consists of translations.  The basis element
attached to a minimal coset representative u (no finite right descent) is the
projection of the Demazure word element,

    P_u = pr(X_{I_u}),    pr(eta_{t_lam w}) = eta_{t_lam},

which is translation-supported and expands back in the Demazure basis as
X_{I_u} plus corrections carried entirely by non-minimal representatives,
with every coefficient in the base ring S.  Both shape facts are checked by
``expansion`` and exercised heavily in the tests; they are what makes the
family {P_u} a basis of the centralizer.

Because of the delta shape, the basis coefficients of any translation
supported element are just its Demazure coefficients at minimal
representatives, so products expand by reading off one table.  The separate
d-table (structure constants of the Demazure basis itself) ties the two
pictures together through the comparison identity checked in
``structure_pair``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .algebra import AlgebraElement, Localized, TorusAlgebra
from .duals import DualElement, TranslationDual, restrict_to_translations
from .errors import ConfigError, MembershipError
from .roots import AffineElt, Vec, Window
from .twisted import ExpansionTables, TwistedAlgebra, TwistedElement


def pr(algebra: TwistedAlgebra, z: TwistedElement) -> TwistedElement:
    """Project eta_x to eta at the unique translation in the coset x W."""
    group = algebra.torus.group
    out: Dict[AffineElt, Localized] = {}
    for x, c in z.terms.items():
        t = group.translation(x.w.act_coroot(x.t))
        out[t] = out[t] + c if t in out else c
    return TwistedElement(algebra, out)


def is_translation_supported(algebra: TwistedAlgebra, z: TwistedElement) -> bool:
    group = algebra.torus.group
    return all(group.is_translation(x) for x in z.terms)


def k(algebra: TwistedAlgebra, z: TwistedElement) -> TwistedElement:
    """The inclusion of translation-supported elements; pr is a left inverse."""
    if not is_translation_supported(algebra, z):
        raise MembershipError("k is defined on translation-supported elements")
    return z


def k_star(f: DualElement) -> TranslationDual:
    """Keep the values at pure translations, discard the rest."""
    return restrict_to_translations(f)


@dataclass
class PetersonExpansion:
    """Demazure-basis expansion of a Peterson basis element."""

    u: AffineElt
    word: Tuple[int, ...]
    coeffs: Dict[AffineElt, AlgebraElement]
    words: Dict[AffineElt, Tuple[int, ...]]


class PetersonContext:
    """Peterson basis elements and expansions over a fixed window."""

    def __init__(self, algebra: TwistedAlgebra, window: Window):
        if algebra.torus.torus != "small":
            raise ConfigError("the Peterson subalgebra lives over the small torus")
        self.algebra = algebra
        self.window = window
        self.tables = ExpansionTables(algebra, window)
        self.minimal: Tuple[AffineElt, ...] = window.minimal_coset_reps()
        self._minimal_set = set(self.minimal)
        self._elements: Dict[AffineElt, TwistedElement] = {}
        self._expansions: Dict[AffineElt, Dict[AffineElt, Localized]] = {}
        self._xprods: Dict[Tuple[AffineElt, AffineElt], Dict[AffineElt, Localized]] = {}

    # -- indexing ----------------------------------------------------------

    def lam_of(self, u: AffineElt) -> Vec:
        """The translation lattice point with t_{lam} in u W."""
        return u.w.act_coroot(u.t)

    def defining_translation(self, u: AffineElt) -> AffineElt:
        return self.algebra.torus.group.translation(self.lam_of(u))

    # -- the basis ---------------------------------------------------------

    def element(self, u: AffineElt) -> TwistedElement:
        """P_u = pr(X_{I_u}), translation-supported by construction."""
        if u in self._elements:
            return self._elements[u]
        if u not in self._minimal_set:
            raise ConfigError("Peterson basis is indexed by minimal coset "
                              "representatives; got a non-minimal element")
        word = self.window.compat_word(u)
        out = pr(self.algebra, self.algebra.x_word(word)).simplify()
        self._elements[u] = out
        return out

    def x_expansion(self, u: AffineElt) -> Dict[AffineElt, Localized]:
        if u not in self._expansions:
            self._expansions[u] = self.tables.expand_in_x(self.element(u))
        return self._expansions[u]

    def expansion(self, u: AffineElt) -> PetersonExpansion:
        """The checked expansion: unit coefficient at u, zero at every other
        minimal representative, and everything denominator-free."""
        raw = self.x_expansion(u)
        coeffs: Dict[AffineElt, AlgebraElement] = {}
        for v, c in raw.items():
            s = c.simplify()
            if v in self._minimal_set and v != u:
                raise ConfigError(
                    "expansion of P_%s has an unexpected coefficient at the "
                    "minimal representative %s"
                    % (self.algebra.torus.group.element_name(u),
                       self.algebra.torus.group.element_name(v)))
            if s.den:
                raise MembershipError(
                    "coefficient at %s does not lie in S"
                    % self.algebra.torus.group.element_name(v))
            coeffs[v] = s.num
        one = self.algebra.torus.ring.one()
        if u not in coeffs or not (coeffs[u] == one):
            raise ConfigError("leading Peterson coefficient is not 1")
        words = {v: self.window.compat_word(v) for v in coeffs}
        return PetersonExpansion(u, self.window.compat_word(u), coeffs, words)

    # -- expansion of translation-supported elements -----------------------

    def d_expansion(self, z: TwistedElement,
                    verify: bool = False) -> Dict[AffineElt, Localized]:
        """Peterson-basis coefficients of a translation-supported element;
        these are its Demazure coefficients at minimal representatives.

        With ``verify`` the full Demazure expansion is reconstructed from the
        Peterson expansion, which checks the non-minimal columns too.
        """
        if not is_translation_supported(self.algebra, z):
            raise MembershipError("element is not supported on translations")
        full = self.tables.expand_in_x(z)
        out = {v: c for v, c in full.items() if v in self._minimal_set}
        if verify:
            recon: Dict[AffineElt, Localized] = {}
            for u, d in out.items():
                for v, c in self.x_expansion(u).items():
                    delta = d * c
                    recon[v] = recon[v] + delta if v in recon else delta
            zero = Localized(self.algebra.torus, self.algebra.torus.ring.zero())
            for v in set(full) | set(recon):
                if not (full.get(v, zero) == recon.get(v, zero)):
                    raise MembershipError(
                        "Peterson expansion does not reproduce the Demazure "
                        "coefficient at %s"
                        % self.algebra.torus.group.element_name(v))
        return out

    # -- structure constants -----------------------------------------------

    def x_product_expansion(self, w2: AffineElt, v: AffineElt
                            ) -> Dict[AffineElt, Localized]:
        """Demazure coefficients of X_{I_{w2}} X_{I_v}."""
        key = (w2, v)
        if key not in self._xprods:
            prod = (self.algebra.x_word(self.window.compat_word(w2))
                    * self.algebra.x_word(self.window.compat_word(v)))
            self._xprods[key] = self.tables.expand_in_x(prod)
        return self._xprods[key]

    def structure_pair(self, u: AffineElt, v: AffineElt,
                       verify: bool = False) -> "StructurePair":
        """d-row, Peterson row and the comparison identity for one pair."""
        d_row = self.x_product_expansion(u, v)
        frak_row = self.d_expansion(self.element(u) * self.element(v),
                                    verify=verify)
        cu = self.x_expansion(u)
        zero = Localized(self.algebra.torus, self.algebra.torus.ring.zero())
        mismatches: List[AffineElt] = []
        targets = set(frak_row)
        for w2 in cu:
            targets |= {w3 for w3 in self.x_product_expansion(w2, v)
                        if w3 in self._minimal_set}
        for w3 in targets:
            rhs = zero
            for w2, c in cu.items():
                d = self.x_product_expansion(w2, v).get(w3)
                if d is not None:
                    rhs = rhs + c * d
            if not (frak_row.get(w3, zero) == rhs):
                mismatches.append(w3)
        return StructurePair(u, v, d_row, frak_row, mismatches)

    def structure_constants(self, total_length: int, verify: bool = False
                            ) -> List["StructurePair"]:
        out = []
        lengths = self.window.lengths
        for u in self.minimal:
            for v in self.minimal:
                if lengths[u] + lengths[v] <= total_length:
                    out.append(self.structure_pair(u, v, verify=verify))
        return out


@dataclass
class StructurePair:
    """X_{I_u} X_{I_v} in the Demazure basis, P_u P_v in the Peterson basis,
    and the places where the comparison identity fails (normally empty)."""

    u: AffineElt
    v: AffineElt
    d_row: Dict[AffineElt, Localized]
    frak_row: Dict[AffineElt, Localized]
    mismatches: List[AffineElt]

    @property
    def identity_holds(self) -> bool:
        return not self.mismatches


# -- centralizer checks ----------------------------------------------------


@dataclass
class CentralizerReport:
    translation_supported: bool
    commutes: bool
    witnesses: List[str] = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return self.translation_supported == self.commutes


def centralizer_report(algebra: TwistedAlgebra, z: TwistedElement) -> CentralizerReport:
    """Cross-validate the two characterizations of centrality: support on
    translations, and commutation with the coefficient generators x_{+-alpha_i}."""
    torus = algebra.torus
    supported = is_translation_supported(algebra, z)
    witnesses: List[str] = []
    n = torus.datum.rank
    gens: List[Tuple[str, AlgebraElement]] = []
    for i in range(1, n + 1):
        gens.append(("x[alpha_%d]" % i, torus.simple_x(i)))
        gens.append(("x[-alpha_%d]" % i, torus.neg_simple_x(i)))
    for name, c in gens:
        ce = algebra.coerce(c)
        if not (z * ce == ce * z):
            witnesses.append("does not commute with %s" % name)
    return CentralizerReport(supported, not witnesses, witnesses)


def centralizer_check(algebra: TwistedAlgebra, z: TwistedElement) -> bool:
    report = centralizer_report(algebra, z)
    if not report.consistent:
        raise ConfigError("support and commutation criteria disagree: %r"
                          % (report.witnesses,))
    return report.commutes


# -- Hopf structure on translation-supported elements ----------------------


def counit(algebra: TwistedAlgebra, z: TwistedElement) -> Localized:
    """Pairing against the constant function: eta_{t_lam} -> 1."""
    if not is_translation_supported(algebra, z):
        raise MembershipError("counit is defined on translation-supported elements")
    out = Localized(algebra.torus, algebra.torus.ring.zero())
    for c in z.terms.values():
        out = out + c
    return out.simplify()


def antipode(algebra: TwistedAlgebra, z: TwistedElement) -> TwistedElement:
    """eta_{t_lam} -> eta_{t_{-lam}}; coefficients are untouched because
    translations act trivially on the small torus."""
    if not is_translation_supported(algebra, z):
        raise MembershipError("antipode is defined on translation-supported elements")
    group = algebra.torus.group
    out: Dict[AffineElt, Localized] = {}
    for x, c in z.terms.items():
        t = group.translation(tuple(-a for a in x.t))
        out[t] = out[t] + c if t in out else c
    return TwistedElement(algebra, out)


Coproduct = Dict[Tuple[Vec, Vec], Localized]


def coproduct(algebra: TwistedAlgebra, z: TwistedElement) -> Coproduct:
    """Group-like coproduct eta_t -> eta_t (x) eta_t, coefficients on the
    left tensor factor."""
    if not is_translation_supported(algebra, z):
        raise MembershipError("coproduct is defined on translation-supported elements")
    return {(x.t, x.t): c for x, c in z.terms.items()}


def coproduct_multiply(a: Coproduct, b: Coproduct) -> Coproduct:
    """Product in the tensor square of the translation group algebra."""
    out: Coproduct = {}
    for (l1, r1), c1 in a.items():
        for (l2, r2), c2 in b.items():
            key = (tuple(x + y for x, y in zip(l1, l2)),
                   tuple(x + y for x, y in zip(r1, r2)))
            val = c1 * c2
            out[key] = out[key] + val if key in out else val
    return {k: v for k, v in out.items() if not v.simplify().is_zero()}
