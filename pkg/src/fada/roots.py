"""Finite root data and affine Weyl groups in the translation normal form.

A finite root datum is built from a Cartan matrix A with A[i][j] = <alpha_i^v,
alpha_j>.  Roots are stored as integer coordinate tuples in the basis of simple
roots, coroots in the basis of simple coroots.  The affine Weyl group is the
semidirect product W x Q^v; an element is a pair (w, lam) standing for
w * t_lam, where the translation t_lam acts on an affine root mu + m*delta by
mu + (m - <lam, mu>)*delta.

Generator labels are 0..n: label 0 is the affine reflection in delta - theta,
labels 1..n are the finite simple reflections.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from .errors import ConfigError, WindowExceededError

Vec = Tuple[int, ...]
Mat = Tuple[Vec, ...]
AffRoot = Tuple[Vec, int]  # (finite part in root coords, delta coefficient)


# -- small integer linear algebra -----------------------------------------


def vadd(a: Vec, b: Vec) -> Vec:
    return tuple(x + y for x, y in zip(a, b))


def vsub(a: Vec, b: Vec) -> Vec:
    return tuple(x - y for x, y in zip(a, b))


def vneg(a: Vec) -> Vec:
    return tuple(-x for x in a)


def vscale(k: int, a: Vec) -> Vec:
    return tuple(k * x for x in a)


def matvec(m: Mat, v: Vec) -> Vec:
    return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in m)


def matmul(a: Mat, b: Mat) -> Mat:
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def identity_mat(n: int) -> Mat:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


# -- finite Weyl group elements -------------------------------------------


class FiniteWeylElt:
    """A finite Weyl group element with its action on roots and coroots.

    All four matrices are kept so that products and inverses never require a
    matrix inversion: generators are involutions, so inverses propagate.
    """

    __slots__ = ("mat", "mat_inv", "cmat", "cmat_inv")

    def __init__(self, mat: Mat, mat_inv: Mat, cmat: Mat, cmat_inv: Mat):
        self.mat = mat
        self.mat_inv = mat_inv
        self.cmat = cmat
        self.cmat_inv = cmat_inv

    def __mul__(self, other: "FiniteWeylElt") -> "FiniteWeylElt":
        return FiniteWeylElt(
            matmul(self.mat, other.mat),
            matmul(other.mat_inv, self.mat_inv),
            matmul(self.cmat, other.cmat),
            matmul(other.cmat_inv, self.cmat_inv),
        )

    def inverse(self) -> "FiniteWeylElt":
        return FiniteWeylElt(self.mat_inv, self.mat, self.cmat_inv, self.cmat)

    def act_root(self, v: Vec) -> Vec:
        return matvec(self.mat, v)

    def act_root_inv(self, v: Vec) -> Vec:
        return matvec(self.mat_inv, v)

    def act_coroot(self, v: Vec) -> Vec:
        return matvec(self.cmat, v)

    def act_coroot_inv(self, v: Vec) -> Vec:
        return matvec(self.cmat_inv, v)

    def __eq__(self, other):
        if not isinstance(other, FiniteWeylElt):
            return NotImplemented
        return self.mat == other.mat

    def __hash__(self):
        return hash(self.mat)

    def __repr__(self):
        return "FiniteWeylElt(%r)" % (self.mat,)


class AffineElt(NamedTuple):
    """w * t_lam in the affine Weyl group."""

    w: FiniteWeylElt
    t: Vec


# -- root datum ------------------------------------------------------------

_PREDEFINED: Dict[str, Tuple[Tuple[int, ...], ...]] = {
    "B2": ((2, -1), (-2, 2)),
    "C2": ((2, -2), (-1, 2)),
    "G2": ((2, -1), (-3, 2)),
    "B3": ((2, -1, 0), (-1, 2, -1), (0, -2, 2)),
    "C3": ((2, -1, 0), (-1, 2, -2), (0, -1, 2)),
}


def _type_a_cartan(n: int) -> Tuple[Tuple[int, ...], ...]:
    return tuple(
        tuple(2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n))
        for i in range(n)
    )


class FiniteRootDatum:
    """Roots, coroots and the finite Weyl group of a finite-type Cartan matrix.

    Only irreducible types are accepted: the untwisted affinization adds one
    node attached through the highest root, which requires a unique highest
    root.
    """

    def __init__(self, cartan: Mat, label: Optional[str] = None):
        self.cartan = cartan
        self.label = label
        self.rank = len(cartan)
        self._validate()
        self._close_roots()
        self._build_weyl()
        self._affine_cartan()

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_cartan(cls, rows: Sequence[Sequence[int]], label: Optional[str] = None) -> "FiniteRootDatum":
        try:
            cartan = tuple(tuple(int(v) for v in row) for row in rows)
        except (TypeError, ValueError) as exc:
            raise ConfigError("Cartan matrix entries must be integers") from exc
        return cls(cartan, label=label)

    @classmethod
    def from_type(cls, name: str) -> "FiniteRootDatum":
        name = name.strip().upper().replace("_", "")
        if name in _PREDEFINED:
            return cls(_PREDEFINED[name], label=name)
        if name.startswith("A") and name[1:].isdigit() and int(name[1:]) >= 1:
            return cls(_type_a_cartan(int(name[1:])), label=name)
        raise ConfigError("unknown root system type %r" % name)

    # -- validation --------------------------------------------------------

    def _validate(self) -> None:
        A = self.cartan
        n = self.rank
        if n == 0 or any(len(row) != n for row in A):
            raise ConfigError("Cartan matrix must be square and nonempty")
        for i in range(n):
            if A[i][i] != 2:
                raise ConfigError("Cartan matrix diagonal must be 2")
            for j in range(n):
                if i != j:
                    if A[i][j] > 0:
                        raise ConfigError("off-diagonal Cartan entries must be <= 0")
                    if (A[i][j] == 0) != (A[j][i] == 0):
                        raise ConfigError("Cartan zero pattern must be symmetric")
        # connectivity: affinization needs a unique highest root
        seen = {0}
        frontier = [0]
        while frontier:
            i = frontier.pop()
            for j in range(n):
                if j not in seen and A[i][j] != 0:
                    seen.add(j)
                    frontier.append(j)
        if len(seen) != n:
            raise ConfigError("Cartan matrix must be irreducible")
        # symmetrizer d with d_i * A[i][j] = d_j * A[j][i]
        d: List[Optional[Fraction]] = [None] * n
        d[0] = Fraction(1)
        frontier = [0]
        while frontier:
            i = frontier.pop()
            for j in range(n):
                if A[i][j] != 0 and i != j and d[j] is None:
                    d[j] = d[i] * Fraction(A[i][j], A[j][i])
                    frontier.append(j)
        assert all(x is not None for x in d)
        scale = 1
        for x in d:
            scale = scale * x.denominator // _gcd(scale, x.denominator)
        self.symmetrizer: Vec = tuple(int(x * scale) for x in d)
        if any(x <= 0 for x in self.symmetrizer):
            raise ConfigError("Cartan matrix is not symmetrizable with positive weights")
        # positive definiteness of the symmetrized matrix = finite type
        sym = [[Fraction(self.symmetrizer[i] * A[i][j]) for j in range(n)] for i in range(n)]
        for k in range(1, n + 1):
            if _leading_minor(sym, k) <= 0:
                raise ConfigError("Cartan matrix is not of finite type")

    # -- pairing and roots -------------------------------------------------

    def pairing(self, coroot: Vec, root: Vec) -> int:
        """<lam, mu> for lam in coroot coordinates, mu in root coordinates."""
        A = self.cartan
        total = 0
        for i, li in enumerate(coroot):
            if li:
                row = A[i]
                total += li * sum(row[j] * root[j] for j in range(self.rank) if root[j])
        return total

    def _simple_reflection(self, i: int) -> FiniteWeylElt:
        # row i of the root action is e_i - A[i], of the coroot action e_i - A[:,i]
        n = self.rank
        A = self.cartan
        mat = tuple(
            tuple((1 if r == j else 0) - (A[i][j] if r == i else 0) for j in range(n))
            for r in range(n)
        )
        cmat = tuple(
            tuple((1 if r == j else 0) - (A[j][i] if r == i else 0) for j in range(n))
            for r in range(n)
        )
        return FiniteWeylElt(mat, mat, cmat, cmat)

    def _close_roots(self) -> None:
        n = self.rank
        simples = [self._simple_reflection(i) for i in range(n)]
        self.simple_reflections: Tuple[FiniteWeylElt, ...] = tuple(simples)
        pairs: Dict[Vec, Vec] = {}
        frontier: List[Tuple[Vec, Vec]] = []
        for i in range(n):
            e = tuple(1 if j == i else 0 for j in range(n))
            pairs[e] = e
            frontier.append((e, e))
        while frontier:
            root, coroot = frontier.pop()
            for s in simples:
                r2 = s.act_root(root)
                if r2 not in pairs:
                    pairs[r2] = s.act_coroot(coroot)
                    frontier.append((r2, pairs[r2]))
        self.coroot_of: Dict[Vec, Vec] = pairs
        self.roots: Tuple[Vec, ...] = tuple(sorted(pairs))
        self.positive_roots: Tuple[Vec, ...] = tuple(
            sorted(r for r in pairs if all(c >= 0 for c in r))
        )
        self.negative_roots: Tuple[Vec, ...] = tuple(vneg(r) for r in self.positive_roots)
        if 2 * len(self.positive_roots) != len(self.roots):
            raise ConfigError("root system closure is not symmetric")
        by_height = sorted(self.positive_roots, key=lambda r: (sum(r), r))
        self.theta: Vec = by_height[-1]
        if len(by_height) > 1 and sum(by_height[-2]) == sum(self.theta):
            # a tie would mean the system is reducible; already excluded
            raise ConfigError("highest root is not unique")
        self.theta_coroot: Vec = pairs[self.theta]

    def reflection(self, root: Vec) -> FiniteWeylElt:
        """The reflection s_alpha for any (positive or negative) root."""
        cache = getattr(self, "_reflection_cache", None)
        if cache is None:
            cache = {}
            self._reflection_cache = cache
        if root in cache:
            return cache[root]
        if root not in self.coroot_of:
            raise ConfigError("%r is not a root" % (root,))
        coroot = self.coroot_of[root]
        n = self.rank
        mat = []
        cmat = []
        for r in range(n):
            mrow = []
            crow = []
            for j in range(n):
                ej = tuple(1 if k == j else 0 for k in range(n))
                mrow.append((1 if r == j else 0) - self.pairing(coroot, ej) * root[r])
                crow.append((1 if r == j else 0) - self.pairing(ej, root) * coroot[r])
            mat.append(tuple(mrow))
            cmat.append(tuple(crow))
        m = tuple(mat)
        c = tuple(cmat)
        out = FiniteWeylElt(m, m, c, c)
        cache[root] = out
        return out

    # -- finite Weyl group -------------------------------------------------

    def _build_weyl(self) -> None:
        ident = FiniteWeylElt(*(identity_mat(self.rank),) * 4)
        self.weyl_identity = ident
        words: Dict[FiniteWeylElt, Tuple[int, ...]] = {ident: ()}
        lengths: Dict[FiniteWeylElt, int] = {ident: 0}
        layer = [ident]
        while layer:
            nxt: Dict[FiniteWeylElt, Tuple[int, ...]] = {}
            for w in layer:
                for i, s in enumerate(self.simple_reflections):
                    ws = w * s
                    if ws in lengths:
                        continue
                    cand = words[w] + (i + 1,)
                    if ws not in nxt or cand < nxt[ws]:
                        nxt[ws] = cand
            for ws, word in nxt.items():
                words[ws] = word
                lengths[ws] = len(word)
            layer = sorted(nxt, key=lambda v: nxt[v])
        self.weyl_words = words
        self.weyl_lengths = lengths
        self.weyl_elements: Tuple[FiniteWeylElt, ...] = tuple(
            sorted(words, key=lambda w: (lengths[w], words[w]))
        )
        self.longest_element = self.weyl_elements[-1]
        if lengths[self.longest_element] != len(self.positive_roots):
            raise ConfigError("finite Weyl group enumeration is inconsistent")

    def finite_sign(self, w: FiniteWeylElt) -> int:
        return -1 if self.weyl_lengths[w] % 2 else 1

    # -- affine data -------------------------------------------------------

    def _affine_cartan(self) -> None:
        n = self.rank
        A = self.cartan
        th = self.theta
        thv = self.theta_coroot

        def unit(i: int) -> Vec:
            return tuple(1 if j == i else 0 for j in range(n))

        rows: List[Tuple[int, ...]] = []
        top = [2] + [-self.pairing(thv, unit(j)) for j in range(n)]
        rows.append(tuple(top))
        for i in range(n):
            row = [-self.pairing(unit(i), th)] + list(A[i])
            rows.append(tuple(row))
        self.affine_cartan: Mat = tuple(rows)

    def braid_order(self, i: int, j: int) -> Optional[int]:
        """Order of s_i s_j in the affine group; None means infinite."""
        if i == j:
            return 1
        prod = self.affine_cartan[i][j] * self.affine_cartan[j][i]
        return {0: 2, 1: 3, 2: 4, 3: 6}.get(prod)

    def describe(self) -> str:
        return self.label or ("cartan%r" % (self.cartan,))


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a) or 1


def _leading_minor(m: List[List[Fraction]], k: int) -> Fraction:
    sub = [row[:k] for row in m[:k]]
    det = Fraction(1)
    for col in range(k):
        pivot = None
        for r in range(col, k):
            if sub[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            sub[col], sub[pivot] = sub[pivot], sub[col]
            det = -det
        det *= sub[col][col]
        for r in range(col + 1, k):
            factor = sub[r][col] / sub[col][col]
            sub[r] = [sub[r][j] - factor * sub[col][j] for j in range(k)]
    return det


# -- affine Weyl group -----------------------------------------------------


@dataclass
class Window:
    """All affine Weyl elements of length at most `length_bound`.

    Elements are canonically ordered by (length, lexicographically least
    reduced word); `words` holds that least word for each element.
    """

    group: "AffineWeylGroup"
    length_bound: int
    elements: Tuple[AffineElt, ...]
    words: Dict[AffineElt, Tuple[int, ...]]
    lengths: Dict[AffineElt, int]
    index: Dict[AffineElt, int] = field(default_factory=dict)

    def __post_init__(self):
        if not self.index:
            self.index = {x: k for k, x in enumerate(self.elements)}

    def __contains__(self, x: AffineElt) -> bool:
        return x in self.index

    def require(self, x: AffineElt, context: str = "") -> None:
        if x not in self.index:
            need = self.group.length(x)
            raise WindowExceededError(
                "element of length %d lies outside window of size %d%s; "
                "rerun with window >= %d"
                % (need, self.length_bound, (" (%s)" % context) if context else "", need)
            )

    def word(self, x: AffineElt) -> Tuple[int, ...]:
        self.require(x)
        return self.words[x]

    def compat_word(self, x: AffineElt) -> Tuple[int, ...]:
        """A reduced word of the form (finite word of u) + (word of v), x = u v
        with v of minimal length in W x."""
        u, v = self.group.coset_decompose(x)
        self.require(v)
        return self.group.datum.weyl_words[u] + self.words[v]

    def minimal_coset_reps(self) -> Tuple[AffineElt, ...]:
        return tuple(x for x in self.elements if self.group.is_minimal_rep(x))

    def translations(self) -> Tuple[AffineElt, ...]:
        ident = self.group.datum.weyl_identity
        return tuple(x for x in self.elements if x.w == ident)


class AffineWeylGroup:
    """The affine Weyl group of a finite root datum, with length-bounded
    enumeration, reduced words, inversions and Bruhat order."""

    def __init__(self, datum: FiniteRootDatum):
        self.datum = datum
        n = datum.rank
        self.identity = AffineElt(datum.weyl_identity, (0,) * n)
        gens = [AffineElt(datum.reflection(datum.theta), vneg(datum.theta_coroot))]
        for i in range(n):
            gens.append(AffineElt(datum.simple_reflections[i], (0,) * n))
        self.generators: Tuple[AffineElt, ...] = tuple(gens)
        self.labels: Tuple[int, ...] = tuple(range(n + 1))
        self._windows: Dict[int, Window] = {}
        self._bruhat_memo: Dict[Tuple[AffineElt, AffineElt], bool] = {}

    # -- structure ---------------------------------------------------------

    def simple(self, i: int) -> AffineElt:
        return self.generators[i]

    def simple_root(self, i: int) -> AffRoot:
        n = self.datum.rank
        if i == 0:
            return (vneg(self.datum.theta), 1)
        return (tuple(1 if j == i - 1 else 0 for j in range(n)), 0)

    def mul(self, x: AffineElt, y: AffineElt) -> AffineElt:
        return AffineElt(x.w * y.w, vadd(y.w.act_coroot_inv(x.t), y.t))

    def inv(self, x: AffineElt) -> AffineElt:
        return AffineElt(x.w.inverse(), vneg(x.w.act_coroot(x.t)))

    def product(self, xs: Iterable[AffineElt]) -> AffineElt:
        out = self.identity
        for x in xs:
            out = self.mul(out, x)
        return out

    def from_word(self, word: Iterable[int]) -> AffineElt:
        return self.product(self.generators[i] for i in word)

    def translation(self, lam: Vec) -> AffineElt:
        return AffineElt(self.datum.weyl_identity, tuple(lam))

    def is_translation(self, x: AffineElt) -> bool:
        return x.w == self.datum.weyl_identity

    def affine_reflection(self, beta: AffRoot) -> AffineElt:
        """The reflection in the real affine root alpha + m*delta."""
        mu, m = beta
        if mu not in self.datum.coroot_of:
            raise ConfigError("%r is not a real affine root" % (beta,))
        return AffineElt(self.datum.reflection(mu), vscale(m, self.datum.coroot_of[mu]))

    def as_reflection(self, r: AffineElt) -> Optional[AffRoot]:
        """The positive real affine root beta with r = s_beta, if one exists."""
        datum = self.datum
        for mu in datum.positive_roots:
            if r.w != datum.reflection(mu):
                continue
            muv = datum.coroot_of[mu]
            m: Optional[int] = None
            for a, b in zip(r.t, muv):
                if b != 0:
                    if a % b != 0:
                        return None
                    q = a // b
                    if m is None:
                        m = q
                    elif m != q:
                        return None
                elif a != 0:
                    return None
            if m is None:
                return None
            beta: AffRoot = (mu, m)
            if self.is_negative_root(beta):
                beta = (vneg(mu), -m)
            return beta
        return None

    # -- action on affine roots --------------------------------------------

    def act(self, x: AffineElt, beta: AffRoot) -> AffRoot:
        mu, m = beta
        return (x.w.act_root(mu), m - self.datum.pairing(x.t, mu))

    def act_inv(self, x: AffineElt, beta: AffRoot) -> AffRoot:
        return self.act(self.inv(x), beta)

    def is_negative_root(self, beta: AffRoot) -> bool:
        mu, m = beta
        if m != 0:
            return m < 0
        return any(c < 0 for c in mu)

    # -- length and descents -----------------------------------------------

    def length(self, x: AffineElt) -> int:
        """Closed form: sum over finite positive roots alpha of
        |<lam, alpha> + [w(alpha) < 0]| for x = w t_lam."""
        total = 0
        datum = self.datum
        for alpha in datum.positive_roots:
            chi = 1 if any(c < 0 for c in x.w.act_root(alpha)) else 0
            total += abs(datum.pairing(x.t, alpha) + chi)
        return total

    def right_descent(self, x: AffineElt, i: int) -> bool:
        return self.is_negative_root(self.act(x, self.simple_root(i)))

    def left_descent(self, x: AffineElt, i: int) -> bool:
        return self.is_negative_root(self.act_inv(x, self.simple_root(i)))

    def sign(self, x: AffineElt) -> int:
        return -1 if self.length(x) % 2 else 1

    # -- enumeration -------------------------------------------------------

    def window(self, length_bound: int) -> Window:
        if length_bound in self._windows:
            return self._windows[length_bound]
        best = None
        for have in self._windows.values():
            if have.length_bound > length_bound:
                if best is None or have.length_bound < best.length_bound:
                    best = have
        if best is not None:
            keep = tuple(x for x in best.elements if best.lengths[x] <= length_bound)
            win = Window(
                self,
                length_bound,
                keep,
                {x: best.words[x] for x in keep},
                {x: best.lengths[x] for x in keep},
            )
            self._windows[length_bound] = win
            return win
        words: Dict[AffineElt, Tuple[int, ...]] = {self.identity: ()}
        lengths: Dict[AffineElt, int] = {self.identity: 0}
        layer = [self.identity]
        depth = 0
        while layer and depth < length_bound:
            depth += 1
            nxt: Dict[AffineElt, Tuple[int, ...]] = {}
            for x in layer:
                for i in self.labels:
                    if self.right_descent(x, i):
                        continue
                    y = self.mul(x, self.generators[i])
                    if y in lengths:
                        continue
                    cand = words[x] + (i,)
                    if y not in nxt or cand < nxt[y]:
                        nxt[y] = cand
            for y, word in nxt.items():
                words[y] = word
                lengths[y] = depth
            layer = list(nxt)
        elements = tuple(sorted(words, key=lambda x: (lengths[x], words[x])))
        win = Window(self, length_bound, elements, words, lengths)
        self._windows[length_bound] = win
        return win

    def is_minimal_rep(self, x: AffineElt) -> bool:
        """Minimal length in its coset x W: no finite right descent."""
        return not any(self.right_descent(x, i) for i in range(1, self.datum.rank + 1))

    def coset_decompose(self, x: AffineElt) -> Tuple[FiniteWeylElt, AffineElt]:
        """x = u v with u finite and v minimal in W x; lengths add."""
        u = self.datum.weyl_identity
        v = x
        moved = True
        while moved:
            moved = False
            for i in range(1, self.datum.rank + 1):
                if self.left_descent(v, i):
                    v = self.mul(self.generators[i], v)
                    u = u * self.datum.simple_reflections[i - 1]
                    moved = True
                    break
        return u, v

    def coset_decompose_right(self, x: AffineElt) -> Tuple[AffineElt, FiniteWeylElt]:
        """x = v u with u finite and v minimal in x W; lengths add."""
        u = self.datum.weyl_identity
        v = x
        moved = True
        while moved:
            moved = False
            for i in range(1, self.datum.rank + 1):
                if self.right_descent(v, i):
                    v = self.mul(v, self.generators[i])
                    u = self.datum.simple_reflections[i - 1] * u
                    moved = True
                    break
        return v, u

    def inversions(self, x: AffineElt, word: Optional[Sequence[int]] = None) -> List[AffRoot]:
        """Left inversions {beta > 0 : x^{-1}(beta) < 0}, from a reduced word."""
        if word is None:
            word = self.reduced_word(x)
        out: List[AffRoot] = []
        prefix = self.identity
        for i in word:
            out.append(self.act(prefix, self.simple_root(i)))
            prefix = self.mul(prefix, self.generators[i])
        return out

    def reduced_word(self, x: AffineElt) -> Tuple[int, ...]:
        """Lexicographically least reduced word, by greedy left descents."""
        word: List[int] = []
        cur = x
        while cur != self.identity:
            for i in self.labels:
                if self.left_descent(cur, i):
                    word.append(i)
                    cur = self.mul(self.generators[i], cur)
                    break
            else:
                raise ConfigError("element has no left descent but is not e")
        return tuple(word)

    # -- Bruhat order ------------------------------------------------------

    def bruhat_leq(self, x: AffineElt, y: AffineElt) -> bool:
        if x == y:
            return True
        key = (x, y)
        memo = self._bruhat_memo
        if key in memo:
            return memo[key]
        lx = self.length(x)
        ly = self.length(y)
        if lx >= ly:
            memo[key] = False
            return False
        for i in self.labels:
            if self.right_descent(y, i):
                ys = self.mul(y, self.generators[i])
                xs = self.mul(x, self.generators[i])
                if self.length(xs) < lx:
                    res = self.bruhat_leq(xs, ys)
                else:
                    res = self.bruhat_leq(x, ys)
                memo[key] = res
                return res
        raise ConfigError("nonidentity element without right descent")

    # -- formatting --------------------------------------------------------

    def word_name(self, word: Sequence[int]) -> str:
        if not word:
            return "e"
        return " ".join("s%d" % i for i in word)

    def element_name(self, x: AffineElt, window: Optional[Window] = None) -> str:
        if window is not None and x in window:
            return self.word_name(window.words[x])
        return self.word_name(self.reduced_word(x))
