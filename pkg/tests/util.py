"""Shared builders for the test suite.

Algebras are cached per configuration because window table construction is
the dominant cost in the exact backends.
"""

from typing import Dict, Optional, Tuple

from fada.algebra import Localized, TorusAlgebra, make_torus
from fada.fgl import FormalGroupLaw
from fada.roots import FiniteRootDatum
from fada.twisted import ExpansionTables, TwistedAlgebra

_DATA: Dict[str, FiniteRootDatum] = {}
_ALG: Dict[Tuple, TwistedAlgebra] = {}
_TABLES: Dict[Tuple, ExpansionTables] = {}


def datum(rtype: str) -> FiniteRootDatum:
    if rtype not in _DATA:
        _DATA[rtype] = FiniteRootDatum.from_type(rtype)
    return _DATA[rtype]


def law_of(kind: Optional[str]) -> Optional[FormalGroupLaw]:
    if kind is None:
        return None
    return {
        "additive": FormalGroupLaw.additive,
        "multiplicative": FormalGroupLaw.multiplicative,
        "connective": FormalGroupLaw.connective,
        "hyperbolic": FormalGroupLaw.hyperbolic,
    }[kind]()


def algebra(rtype: str = "A1", backend: str = "CON", torus: str = "small",
            fgl: Optional[str] = None, precision: int = 8) -> TwistedAlgebra:
    key = (rtype, backend, torus, fgl, precision)
    if key not in _ALG:
        t = make_torus(datum(rtype), backend, torus, fgl=law_of(fgl),
                       precision=precision)
        _ALG[key] = TwistedAlgebra(t)
    return _ALG[key]


def tables(alg: TwistedAlgebra, length: int) -> ExpansionTables:
    t = alg.torus
    key = (id(alg), length)
    if key not in _TABLES:
        _TABLES[key] = ExpansionTables(alg, t.group.window(length))
    return _TABLES[key]


# -- small-rank shorthands --------------------------------------------------


def xa(t: TorusAlgebra):
    """x_alpha for the simple root of a rank-one system."""
    return t.simple_x(1)


def xna(t: TorusAlgebra):
    """x_{-alpha} for the simple root of a rank-one system."""
    return t.neg_simple_x(1)


def over(t: TorusAlgebra, num, *dens) -> Localized:
    """num / prod x_beta with dens given as lattice points."""
    if isinstance(num, int):
        num = t.ring.from_scalar(num)
    return Localized(t, num, dens)


def alpha_vec(t: TorusAlgebra):
    return t.embed_root(t.group.simple_root(1))


def nalpha_vec(t: TorusAlgebra):
    return tuple(-v for v in alpha_vec(t))


def tw_zero(x) -> bool:
    """Whether a twisted element simplifies to zero."""
    return not x.simplify().terms


def loc_eq(x, y) -> bool:
    return x == y
