"""The convolution *-algebra of a finite groupoid, over exact Gaussian rationals.

Basis deltas multiply by composition (delta_a * delta_b = delta_{a.b} when
composable, zero otherwise) and the involution is conjugate-transpose along
inversion.  Induced maps — restriction to an invariant unit set, pushforward
along a quotient — are stored as exact matrices on the delta basis, so kernels
and ideal ranks are computed with no floating point.  Characters evaluate as
root-of-unity exponents; complex numbers appear only when a caller asks for a
numeric value.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from . import abelian, core, quotients
from .abelian import Character, FiniteAbelianGroup
from .core import ElementSubset, FiniteGroupoid
from .linalg import QI0, QI1, Echelon, Qi, as_qi, kernel_basis, vec_iadd_scaled


@dataclass
class AlgebraElement:
    """A function on arrows with Gaussian-rational values, sparsely stored."""

    host: FiniteGroupoid
    coeffs: dict[int, Qi]

    def __eq__(self, other):
        return (isinstance(other, AlgebraElement) and self.host == other.host
                and self.coeffs.keys() == other.coeffs.keys()
                and all(self.coeffs[k] == other.coeffs[k] for k in self.coeffs))

    def __add__(self, other):
        self._same_host(other)
        out = dict(self.coeffs)
        vec_iadd_scaled(out, other.coeffs, QI1)
        return AlgebraElement(self.host, out)

    def __sub__(self, other):
        self._same_host(other)
        out = dict(self.coeffs)
        vec_iadd_scaled(out, other.coeffs, Qi(-1))
        return AlgebraElement(self.host, out)

    def __neg__(self):
        return AlgebraElement(self.host, {k: -v for k, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return convolve(self, other)
        return self.scaled(other)

    def __rmul__(self, other):
        return self.scaled(other)

    def scaled(self, c) -> AlgebraElement:
        c = as_qi(c)
        if not c:
            return AlgebraElement(self.host, {})
        return AlgebraElement(self.host, {k: c * v for k, v in self.coeffs.items()})

    def star(self) -> AlgebraElement:
        return involute(self)

    def is_zero(self) -> bool:
        return not self.coeffs

    def value(self, g: int) -> Qi:
        return self.coeffs.get(g, QI0)

    def _same_host(self, other):
        if self.host != other.host:
            raise ValueError("elements of different groupoid algebras")

    def __repr__(self):
        terms = [f"{v}*d[{self.host.labels[k]}]" for k, v in sorted(self.coeffs.items())]
        return " + ".join(terms) if terms else "0"


def from_coeffs(G: FiniteGroupoid, coeffs: dict) -> AlgebraElement:
    out = {}
    for k, v in coeffs.items():
        q = as_qi(v)
        if q:
            if not (0 <= k < G.n):
                raise ValueError(f"coefficient index {k} out of range")
            out[k] = q
    return AlgebraElement(G, out)


def zero(G: FiniteGroupoid) -> AlgebraElement:
    return AlgebraElement(G, {})


def delta(G: FiniteGroupoid, g: int) -> AlgebraElement:
    if not (0 <= g < G.n):
        raise ValueError(f"arrow index {g} out of range")
    return AlgebraElement(G, {g: QI1})


def unit_element(G: FiniteGroupoid) -> AlgebraElement:
    """The multiplicative unit: the sum of the unit deltas."""
    return AlgebraElement(G, {x: QI1 for x in G.units})


def convolve(f: AlgebraElement, g: AlgebraElement) -> AlgebraElement:
    """(f*g)(c) sums f(a) g(b) over factorizations c = a.b."""
    f._same_host(g)
    G = f.host
    comp = G.comp
    out: dict[int, Qi] = {}
    for a, ca in f.coeffs.items():
        for b, cb in g.coeffs.items():
            c = comp.get((a, b))
            if c is not None:
                s = out.get(c, QI0) + ca * cb
                if s:
                    out[c] = s
                else:
                    del out[c]
    return AlgebraElement(G, out)


def involute(f: AlgebraElement) -> AlgebraElement:
    """f*(g) = conj(f(g^-1)); an antimultiplicative involution."""
    G = f.host
    return AlgebraElement(G, {G.inv[k]: v.conjugate() for k, v in f.coeffs.items()})


def diagonal_basis(G: FiniteGroupoid) -> list[dict]:
    """Delta vectors of the units: the canonical commutative diagonal."""
    return [{x: QI1} for x in sorted(G.units)]


# --- induced homomorphisms ------------------------------------------------

@dataclass
class AlgebraHom:
    """A linear map between groupoid algebras, stored on the delta basis."""

    domain: FiniteGroupoid
    codomain: FiniteGroupoid
    images: tuple[AlgebraElement, ...]

    def apply(self, f: AlgebraElement) -> AlgebraElement:
        if f.host != self.domain:
            raise ValueError("element not in the domain algebra")
        acc: dict[int, Qi] = {}
        for k, c in f.coeffs.items():
            vec_iadd_scaled(acc, self.images[k].coeffs, c)
        return AlgebraElement(self.codomain, acc)

    def kernel(self) -> list[dict]:
        """Exact basis of the kernel, one vector per free coordinate."""
        rows: dict[int, dict] = {}
        for j, img in enumerate(self.images):
            for i, c in img.coeffs.items():
                rows.setdefault(i, {})[j] = c
        return kernel_basis(rows.values(), self.domain.n)


def compose_homs(outer: AlgebraHom, inner: AlgebraHom) -> AlgebraHom:
    if inner.codomain != outer.domain:
        raise ValueError("homomorphisms do not compose")
    images = tuple(outer.apply(img) for img in inner.images)
    return AlgebraHom(domain=inner.domain, codomain=outer.codomain, images=images)


def restriction_hom(G: FiniteGroupoid, F: ElementSubset | Iterable[int]) -> AlgebraHom:
    """Restriction of functions to the subgroupoid over an invariant unit set."""
    kept = core.restricted_arrows(G, F)
    sub = core.restrict(G, F)
    index = {g: i for i, g in enumerate(kept)}
    images = tuple(
        AlgebraElement(sub, {index[g]: QI1}) if g in index else AlgebraElement(sub, {})
        for g in G.arrows())
    return AlgebraHom(domain=G, codomain=sub, images=images)


def quotient_hom_from_result(G: FiniteGroupoid, qr: quotients.QuotientResult) -> AlgebraHom:
    """Pushforward along an already-computed quotient map."""
    Q = qr.quotient
    images = tuple(AlgebraElement(Q, {qr.class_map[g]: QI1}) for g in G.arrows())
    return AlgebraHom(domain=G, codomain=Q, images=images)


def quotient_hom(G: FiniteGroupoid,
                 H: quotients.NormalSubgroupoid | ElementSubset | Iterable[int]) -> AlgebraHom:
    """Pushforward along the quotient map: sums a function over each class."""
    return quotient_hom_from_result(G, quotients.quotient(G, H))


def hom_multiplicativity_violations(h: AlgebraHom, limit: int = 1) -> list[tuple[int, int]]:
    """Basis pairs where phi(d_a * d_b) != phi(d_a) * phi(d_b)."""
    out = []
    for a in h.domain.arrows():
        fa = h.images[a]
        for b in h.domain.arrows():
            lhs = h.apply(convolve(delta(h.domain, a), delta(h.domain, b)))
            if lhs != convolve(fa, h.images[b]):
                out.append((a, b))
                if len(out) >= limit:
                    return out
    return out


def hom_star_violations(h: AlgebraHom, limit: int = 1) -> list[int]:
    out = []
    for a in h.domain.arrows():
        if h.apply(involute(delta(h.domain, a))) != involute(h.images[a]):
            out.append(a)
            if len(out) >= limit:
                return out
    return out


def hom_is_surjective(h: AlgebraHom) -> bool:
    ech = Echelon()
    for img in h.images:
        ech.insert(img.coeffs)
    return ech.rank == h.codomain.n


# --- the commutator ideal -------------------------------------------------

@dataclass
class IdealBasis:
    """A two-sided ideal, held as canonical reduced rows."""

    host: FiniteGroupoid
    rows: tuple[dict, ...]
    _echelon: Echelon = field(init=False, repr=False)

    def __post_init__(self):
        self._echelon = Echelon()
        for r in self.rows:
            self._echelon.insert(dict(r))

    @property
    def rank(self) -> int:
        return len(self.rows)

    def contains(self, vec: dict) -> bool:
        return self._echelon.contains(vec)


def _left_shift(G: FiniteGroupoid, g: int, row: dict) -> dict:
    comp = G.comp
    out = {}
    for b, c in row.items():
        t = comp.get((g, b))
        if t is not None:
            out[t] = c
    return out


def _right_shift(G: FiniteGroupoid, g: int, row: dict) -> dict:
    comp = G.comp
    out = {}
    for a, c in row.items():
        t = comp.get((a, g))
        if t is not None:
            out[t] = c
    return out


def commutator_ideal(G: FiniteGroupoid) -> IdealBasis:
    """The smallest closed two-sided ideal containing all basis commutators.

    Seeds with delta_a * delta_b - delta_b * delta_a, then alternates
    left/right multiplication by every basis delta with exact re-reduction
    until the dimension stops growing; the algebra dimension bounds the
    number of growth steps, so termination is immediate.
    """
    ech = Echelon()
    queue: list[dict] = []

    def feed(vec: dict):
        stored = ech.insert(vec)
        if stored:
            queue.append(dict(stored))

    for (a, b), ab in G.comp.items():
        vec = {ab: QI1}
        ba = G.comp.get((b, a))
        if ba is not None:
            vec_iadd_scaled(vec, {ba: QI1}, Qi(-1))
        if vec:
            feed(vec)

    n = G.n
    while queue and ech.rank < n:
        row = queue.pop()
        for g in G.arrows():
            for shifted in (_left_shift(G, g, row), _right_shift(G, g, row)):
                if shifted:
                    feed(shifted)

    return IdealBasis(host=G, rows=tuple(dict(r) for r in ech.rows()))


def ideal_closure_violations(basis: IdealBasis, limit: int = 1) -> list[tuple[int, int, str]]:
    """Shifts of basis rows that escape the span (empty for a two-sided ideal)."""
    G = basis.host
    out = []
    for i, row in enumerate(basis.rows):
        for g in G.arrows():
            for side, shifted in (("left", _left_shift(G, g, row)),
                                  ("right", _right_shift(G, g, row))):
                if shifted and not basis.contains(shifted):
                    out.append((i, g, side))
                    if len(out) >= limit:
                        return out
    return out


def abelianization_dim(G: FiniteGroupoid) -> int:
    """Dimension of the algebra modulo its commutator ideal."""
    return G.n - commutator_ideal(G).rank


# --- characters -----------------------------------------------------------

def abelianized_fiber(G: FiniteGroupoid, x: int) -> tuple[FiniteAbelianGroup, dict[int, int]]:
    """The abelianized isotropy group at a fixed point x.

    Returns the group together with the class map sending each arrow at x to
    its element index.
    """
    if x not in core.fixed_points(G):
        raise ValueError(f"unit {G.labels[x]} is not a fixed point")
    kept = core.restricted_arrows(G, [x])
    gx = core.restrict(G, [x])
    qr = quotients.quotient(gx, quotients.commutator_subgroupoid(gx))
    a, arrows = abelian.abelian_fiber(qr.quotient, next(iter(qr.quotient.units)))
    elem_of_arrow = {arrow: i for i, arrow in enumerate(arrows)}
    class_of = {g: elem_of_arrow[qr.class_map[i]] for i, g in enumerate(kept)}
    return a, class_of


def _compatible(a: FiniteAbelianGroup, b: FiniteAbelianGroup) -> bool:
    return a.table == b.table and a.identity == b.identity


@dataclass
class CharacterFunctional:
    """A one-dimensional representation evaluated on the delta basis.

    Supported on the isotropy at one fixed point; values there are roots of
    unity stored as exponents modulo the abelianized fiber's exponent.
    """

    host: FiniteGroupoid
    unit: int
    chi: Character
    exponents: dict[int, int]
    modulus: int

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self.exponents)

    def value_fraction(self, g: int) -> Fraction | None:
        """Exponent of the value at arrow g as a fraction of a turn; None = 0."""
        e = self.exponents.get(g)
        return None if e is None else Fraction(e % self.modulus, self.modulus)

    def value_complex(self, g: int) -> complex:
        e = self.value_fraction(g)
        return 0j if e is None else cmath.exp(2j * cmath.pi * e)

    def evaluate(self, f: AlgebraElement) -> complex:
        if f.host != self.host:
            raise ValueError("element of a different groupoid algebra")
        return sum((c.to_complex() * self.value_complex(g) for g, c in f.coeffs.items()),
                   start=0j)


def character_functional(G: FiniteGroupoid, x: int, chi: Character) -> CharacterFunctional:
    """The functional chi . Q_x: evaluate the class of each arrow at x under chi."""
    a, class_of = abelianized_fiber(G, x)
    if not _compatible(a, chi.host):
        raise ValueError("character does not belong to the abelianized fiber at this unit")
    exponents = {g: chi.exps[cls] % a.exponent for g, cls in class_of.items()}
    return CharacterFunctional(host=G, unit=x, chi=chi, exponents=exponents,
                               modulus=a.exponent)


def enumerate_characters(G: FiniteGroupoid) -> list[CharacterFunctional]:
    """All one-dimensional representations: fixed points paired with fiber characters."""
    out = []
    for x in sorted(core.fixed_points(G).members):
        a, class_of = abelianized_fiber(G, x)
        for chi in abelian.characters(a):
            exponents = {g: chi.exps[cls] % a.exponent for g, cls in class_of.items()}
            out.append(CharacterFunctional(host=G, unit=x, chi=chi,
                                           exponents=exponents, modulus=a.exponent))
    return out


def functional_multiplicativity_violations(phi: CharacterFunctional,
                                           limit: int = 1) -> list[tuple[int, int]]:
    """Basis pairs where phi(d_a * d_b) != phi(d_a) phi(d_b), checked in exponents."""
    G = phi.host
    out = []
    for a in G.arrows():
        ea = phi.exponents.get(a)
        for b in G.arrows():
            eb = phi.exponents.get(b)
            ab = G.comp.get((a, b))
            eab = None if ab is None else phi.exponents.get(ab)
            expected = None if (ea is None or eb is None) else (ea + eb) % phi.modulus
            if expected != eab:
                out.append((a, b))
                if len(out) >= limit:
                    return out
    return out


def functional_star_violations(phi: CharacterFunctional, limit: int = 1) -> list[int]:
    """Arrows where phi(d_g*) is not the conjugate of phi(d_g)."""
    G = phi.host
    out = []
    for g in G.arrows():
        e = phi.exponents.get(g)
        ei = phi.exponents.get(G.inv[g])
        bad = (e is None) != (ei is None) or (e is not None and (e + ei) % phi.modulus != 0)
        if bad:
            out.append(g)
            if len(out) >= limit:
                return out
    return out


def pi_hom(G: FiniteGroupoid) -> AlgebraHom:
    """Restrict to the fixed points, then push down to the abelianized bundle."""
    ab = quotients.abelianize_groupoid(G)
    to_fix = restriction_hom(G, core.fixed_points(G))
    to_ab = quotient_hom(ab.g_fix, ab.commutator)
    if to_fix.codomain != to_ab.domain:
        raise AssertionError("fixed-point restrictions disagree")
    return compose_homs(to_ab, to_fix)


# --- the transform for abelian bundles ------------------------------------

@dataclass
class GelfandMatrix:
    """Evaluation of every character functional on every basis delta.

    Entries are root-of-unity exponents as Fractions of a full turn (None for
    zero), so the matrix is exact; to_complex() gives the numeric matrix.
    Row r corresponds to pairs[r] = (unit, character); columns follow arrow
    order.
    """

    host: FiniteGroupoid
    pairs: tuple[tuple[int, Character], ...]
    entries: tuple[tuple[Fraction | None, ...], ...]

    @property
    def size(self) -> int:
        return len(self.pairs)

    def to_complex(self) -> list[list[complex]]:
        return [[0j if e is None else cmath.exp(2j * cmath.pi * e) for e in row]
                for row in self.entries]


def gelfand_transform(G: FiniteGroupoid) -> GelfandMatrix:
    """The fiberwise character table of an abelian group bundle.

    Square because the characters of each fiber are as numerous as its
    elements; block-diagonal across units; convolution goes to pointwise
    multiplication.
    """
    bundle = abelian.dual_bundle(G)
    pairs = []
    entries = []
    for x in bundle.base:
        arrows = bundle.fiber_arrows[x]
        group = bundle.fiber_groups[x]
        col_of = {g: i for i, g in enumerate(arrows)}
        for chi in bundle.fibers[x]:
            pairs.append((x, chi))
            row: list[Fraction | None] = [None] * G.n
            for g, i in col_of.items():
                row[g] = Fraction(chi.exps[i] % group.exponent, group.exponent)
            entries.append(tuple(row))
    return GelfandMatrix(host=G, pairs=tuple(pairs), entries=tuple(entries))


def gelfand_multiplicativity_violations(gm: GelfandMatrix, limit: int = 1) -> list[tuple]:
    """Basis pairs and rows where the transform fails to turn * into pointwise product.

    Exact: exponents add modulo one where both factors are roots of unity.
    """
    G = gm.host
    out = []
    for a in G.arrows():
        for b in G.arrows():
            ab = G.comp.get((a, b))
            for r in range(gm.size):
                ea, eb = gm.entries[r][a], gm.entries[r][b]
                eab = None if ab is None else gm.entries[r][ab]
                expected = None if (ea is None or eb is None) else (ea + eb) % 1
                if expected != eab:
                    out.append((a, b, r))
                    if len(out) >= limit:
                        return out
    return out
