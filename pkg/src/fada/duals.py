"""Window-limited duals of the affine Demazure algebra and GKM conditions.

A dual element is an S-valued (possibly localized) function on the elements of
a fixed length window of the affine Weyl group.  Two module structures act on
duals: the right-side action

    (z . f)[u]  =  sum_w  u(c_w) * f[u w]          (bullet)

and the left-side Hecke action

    (z o f)[u]  =  sum_v  c_v * v( f[v^{-1} u] )   (odot)

for z = sum_w c_w eta_w.  Both need the shifted arguments to stay inside the
window of f; otherwise a WindowExceededError pinpoints the length required.

The small-torus GKM conditions bound, for every finite positive root alpha and
each degree d up to a chosen bound, the alternating binomial sums of values
along translation orbits t_{j alpha^v} w; the big-torus conditions are the
classical pairwise divisibility conditions along real affine reflections.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .algebra import AlgebraElement, Localized, TorusAlgebra
from .errors import WindowExceededError
from .roots import AffineElt, Vec, Window
from .scalars import Scalar
from .twisted import ExpansionTables, TwistedElement


class DualElement:
    """A function from a window of affine Weyl elements to localized values."""

    __slots__ = ("torus", "window", "values")

    def __init__(self, torus: TorusAlgebra, window: Window, values: Dict[AffineElt, Localized]):
        self.torus = torus
        self.window = window
        self.values = {w: v for w, v in values.items() if not v.is_zero()}
        for w in self.values:
            window.require(w, "dual support")

    @staticmethod
    def zero(torus: TorusAlgebra, window: Window) -> "DualElement":
        return DualElement(torus, window, {})

    def get(self, w: AffineElt) -> Localized:
        self.window.require(w, "dual evaluation")
        if w in self.values:
            return self.values[w]
        return Localized(self.torus, self.torus.ring.zero())

    def __add__(self, other: "DualElement") -> "DualElement":
        out = dict(self.values)
        for w, v in other.values.items():
            out[w] = out[w] + v if w in out else v
        return DualElement(self.torus, self.window, out)

    def __sub__(self, other: "DualElement") -> "DualElement":
        return self + (-other)

    def __neg__(self) -> "DualElement":
        return DualElement(self.torus, self.window, {w: -v for w, v in self.values.items()})

    def scale(self, c) -> "DualElement":
        return DualElement(self.torus, self.window, {w: v * c for w, v in self.values.items()})

    def __eq__(self, other):
        if not isinstance(other, DualElement):
            return NotImplemented
        for w in set(self.values) | set(other.values):
            if not (self.get(w) == other.get(w)):
                return False
        return True

    def __hash__(self):
        raise TypeError("DualElement is unhashable")

    def simplify(self) -> "DualElement":
        return DualElement(self.torus, self.window,
                           {w: v.simplify() for w, v in self.values.items()})

    def restrict(self, window: Window) -> "DualElement":
        vals = {w: v for w, v in self.values.items() if w in window}
        return DualElement(self.torus, window, vals)

    def support(self) -> List[AffineElt]:
        return list(self.values)

    def __repr__(self):
        group = self.torus.group
        parts = []
        for w in sorted(self.values, key=group.length):
            parts.append("[%s] -> %r" % (group.element_name(w), self.values[w]))
        return "Dual{%s}" % ("; ".join(parts) if parts else "")


# -- dual basis and pairings -----------------------------------------------


def dual_x(tables: ExpansionTables, w: AffineElt) -> DualElement:
    """The functional dual to X_{I_w}: its value on eta_v is b_{v, I_w}."""
    torus = tables.algebra.torus
    values = {}
    for v in tables.window.elements:
        c = tables.b[v].get(w)
        if c is not None and not c.is_zero():
            values[v] = c
    return DualElement(torus, tables.window, values)


def pair(z: TwistedElement, f: DualElement) -> Localized:
    """<z, f> = sum_w c_w f[w], left-linear over the localized ring."""
    out = Localized(f.torus, f.torus.ring.zero())
    for w, c in z.terms.items():
        out = out + c * f.get(w)
    return out


def bullet(z: TwistedElement, f: DualElement, out_window: Window) -> DualElement:
    """(z . f)[u] = sum_w u(c_w) f[uw]."""
    torus = f.torus
    group = torus.group
    values: Dict[AffineElt, Localized] = {}
    for u in out_window.elements:
        acc = Localized(torus, torus.ring.zero())
        for w, c in z.terms.items():
            uw = group.mul(u, w)
            f.window.require(uw, "bullet shift u*w")
            acc = acc + torus.act_loc(u, c) * f.get(uw)
        if not acc.is_zero():
            values[u] = acc.simplify()
    return DualElement(torus, out_window, values)


def odot(z: TwistedElement, f: DualElement, out_window: Window) -> DualElement:
    """(z o f)[u] = sum_v c_v v(f[v^{-1} u])."""
    torus = f.torus
    group = torus.group
    values: Dict[AffineElt, Localized] = {}
    for u in out_window.elements:
        acc = Localized(torus, torus.ring.zero())
        for v, c in z.terms.items():
            shifted = group.mul(group.inv(v), u)
            f.window.require(shifted, "odot shift v^{-1}*u")
            acc = acc + c * torus.act_loc(v, f.get(shifted))
        if not acc.is_zero():
            values[u] = acc.simplify()
    return DualElement(torus, out_window, values)


def characteristic(torus: TorusAlgebra, u: AlgebraElement, window: Window) -> DualElement:
    """The characteristic function of u in S: w -> w(u)."""
    values = {}
    for w in window.elements:
        img = torus.act_elem(w, u)
        if not img.is_zero():
            values[w] = Localized(torus, img)
    return DualElement(torus, window, values)


def phi(torus: TorusAlgebra, a: AlgebraElement, b: AlgebraElement,
        window: Window) -> DualElement:
    """phi(a (x) b): w -> a * w(b), the coproduct-side characteristic map."""
    values = {}
    for w in window.elements:
        img = a * torus.act_elem(w, b)
        if not img.is_zero():
            values[w] = Localized(torus, img)
    return DualElement(torus, window, values)


# -- invariance ------------------------------------------------------------


@dataclass
class InvarianceReport:
    checked: int = 0
    skipped: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def invariant(self) -> bool:
        return not self.failures


def w_invariance_report(f: DualElement) -> InvarianceReport:
    """Constancy of f on cosets u W: f[u] == f[u s_i] for finite i.

    Pairs whose partner leaves the window are counted as skipped; invariance
    is certified only on the pairs both of whose members are enumerable.
    """
    torus = f.torus
    group = torus.group
    rep = InvarianceReport()
    for u in f.window.elements:
        for i in range(1, torus.datum.rank + 1):
            us = group.mul(u, group.simple(i))
            if us not in f.window:
                rep.skipped += 1
                continue
            rep.checked += 1
            if not (f.get(u) == f.get(us)):
                rep.failures.append(
                    "f[%s] != f[%s s%d]" % (group.element_name(u),
                                            group.element_name(u), i))
    return rep


# -- GKM conditions --------------------------------------------------------


@dataclass
class GkmReport:
    torus_kind: str
    backend: str
    degree_bound: int
    checked: int = 0
    skipped: List[str] = field(default_factory=list)
    violations: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        return ("GKM(%s,%s,D=%d): %d conditions checked, %d skipped, %d violations"
                % (self.torus_kind, self.backend, self.degree_bound,
                   self.checked, len(self.skipped), len(self.violations)))


def _regular_value(v: Localized) -> Optional[AlgebraElement]:
    s = v.simplify()
    if s.den:
        return None
    return s.num


def gkm_check_small(f: DualElement, degree_bound: int,
                    grassmannian: bool = False) -> GkmReport:
    """Small-torus GKM conditions up to the degree bound.

    For each finite positive root alpha, each 1 <= d <= degree_bound and each
    window element w:

      * the alternating sum  sum_{j=0}^{d} (-1)^j C(d,j) f[t_{j alpha^v} w]
        must lie in x_alpha^d S;
      * unless `grassmannian`, the reflected difference sum
        sum_{j=0}^{d-1} (-1)^j C(d-1,j) (f[t_j w] - f[t_j s_alpha w])
        must also lie in x_alpha^d S.  The reflected orbit translates the
        reflected point: the pairing argument is eta_{t_j} eta_{s_alpha}
        eta_w, not s_alpha applied after the translation.

    Orbit points outside the window are skipped and reported, never silently
    treated as zero.
    """
    torus = f.torus
    group = torus.group
    datum = torus.datum
    report = GkmReport(torus.torus, torus.ring.backend, degree_bound)

    # degree-0 regularity of every value
    for w in f.window.elements:
        report.checked += 1
        if _regular_value(f.get(w)) is None:
            report.violations.append(
                "value at %s is not regular" % group.element_name(w))
    if report.violations:
        return report

    for alpha in datum.positive_roots:
        alpha_v = datum.coroot_of[alpha]
        beta = (alpha, 0)
        s_alpha = group.affine_reflection(beta)
        for d in range(1, degree_bound + 1):
            for w in f.window.elements:
                orbit = []
                ok = True
                for j in range(d + 1):
                    tjw = group.mul(group.translation(
                        tuple(j * c for c in alpha_v)), w)
                    if tjw not in f.window:
                        report.skipped.append(
                            "alpha=%r d=%d w=%s: orbit leaves window"
                            % (alpha, d, group.element_name(w)))
                        ok = False
                        break
                    orbit.append(tjw)
                if not ok:
                    continue
                report.checked += 1
                acc = Localized(torus, torus.ring.zero())
                for j, tjw in enumerate(orbit):
                    sign = -1 if j % 2 else 1
                    acc = acc + f.get(tjw) * (sign * math.comb(d, j))
                num = _regular_value(acc)
                if num is None or torus.divides(num, beta, d) is None:
                    report.violations.append(
                        "binomial sum for alpha=%r d=%d w=%s not in x^%d S"
                        % (alpha, d, group.element_name(w), d))
                    continue
                if grassmannian:
                    continue
                sw = group.mul(s_alpha, w)
                refl_orbit = []
                ok = True
                for j in range(d):
                    tjsw = group.mul(group.translation(
                        tuple(j * c for c in alpha_v)), sw)
                    if tjsw not in f.window:
                        report.skipped.append(
                            "alpha=%r d=%d w=%s: reflected orbit leaves window"
                            % (alpha, d, group.element_name(w)))
                        ok = False
                        break
                    refl_orbit.append(tjsw)
                if not ok:
                    continue
                report.checked += 1
                acc = Localized(torus, torus.ring.zero())
                for j, tjsw in enumerate(refl_orbit):
                    sign = -1 if j % 2 else 1
                    acc = acc + (f.get(orbit[j]) - f.get(tjsw)) * (
                        sign * math.comb(d - 1, j))
                num = _regular_value(acc)
                if num is None or torus.divides(num, beta, d) is None:
                    report.violations.append(
                        "reflected sum for alpha=%r d=%d w=%s not in x^%d S"
                        % (alpha, d, group.element_name(w), d))
    return report


def gkm_check_big(f: DualElement) -> GkmReport:
    """Big-torus GKM: values regular, and f[w] - f[s_beta w] in x_beta S-hat
    for every real affine reflection pairing two window elements."""
    torus = f.torus
    group = torus.group
    report = GkmReport(torus.torus, torus.ring.backend, 1)
    for w in f.window.elements:
        report.checked += 1
        if _regular_value(f.get(w)) is None:
            report.violations.append(
                "value at %s is not regular" % group.element_name(w))
    if report.violations:
        return report
    elements = f.window.elements
    for a_idx, w in enumerate(elements):
        for w2 in elements[a_idx + 1:]:
            r = group.mul(w2, group.inv(w))
            beta = group.as_reflection(r)
            if beta is None:
                continue
            report.checked += 1
            diff = _regular_value(f.get(w) - f.get(w2))
            if diff is None or torus.divides(diff, beta, 1) is None:
                report.violations.append(
                    "f[%s] - f[%s] not divisible by x_%r"
                    % (group.element_name(w), group.element_name(w2), beta))
    return report


# -- duals on the translation lattice --------------------------------------


class TranslationDual:
    """A function on translation lattice points, the small-torus counterpart
    of duals restricted through the translation projection."""

    __slots__ = ("torus", "values")

    def __init__(self, torus: TorusAlgebra, values: Dict[Vec, Localized]):
        self.torus = torus
        self.values = {tuple(k): v for k, v in values.items() if not v.is_zero()}

    def get(self, lam: Vec) -> Localized:
        lam = tuple(lam)
        if lam in self.values:
            return self.values[lam]
        return Localized(self.torus, self.torus.ring.zero())

    def __eq__(self, other):
        if not isinstance(other, TranslationDual):
            return NotImplemented
        for k in set(self.values) | set(other.values):
            if not (self.get(k) == other.get(k)):
                return False
        return True

    def __hash__(self):
        raise TypeError("TranslationDual is unhashable")

    def __repr__(self):
        parts = ["t%r -> %r" % (k, v) for k, v in sorted(self.values.items())]
        return "TranslationDual{%s}" % "; ".join(parts)


def restrict_to_translations(f: DualElement) -> TranslationDual:
    """Keep only the values at translation elements t_lam."""
    values = {}
    for w, v in f.values.items():
        if f.torus.group.is_translation(w):
            values[w.t] = v
    return TranslationDual(f.torus, values)


def pr_star(torus: TorusAlgebra, g: TranslationDual, window: Window) -> DualElement:
    """Pull a translation-lattice function back through pr(w t_lam) = t_{w lam}.

    The image is constant on cosets u W by construction, hence invariant for
    the bullet action of the finite Weyl group.
    """
    values = {}
    for x in window.elements:
        v = g.get(x.w.act_coroot(x.t))
        if not v.is_zero():
            values[x] = v
    return DualElement(torus, window, values)
