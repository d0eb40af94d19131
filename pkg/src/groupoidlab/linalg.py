"""Exact linear algebra over the Gaussian rationals.

Scalars are complex numbers with Fraction real and imaginary parts; vectors
are sparse dicts from coordinate index to scalar.  The Echelon accumulator
keeps a reduced row basis (monic pivots, pivot columns eliminated everywhere
else), so ranks, kernels, and subspace comparisons are exact and the stored
rows are canonical for the subspace they span.
"""

from __future__ import annotations

from fractions import Fraction


class Qi:
    """A Gaussian rational re + im*i with exact Fraction parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        other = as_qi(other)
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __add__(self, other):
        other = as_qi(other)
        return Qi(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        other = as_qi(other)
        return Qi(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return Qi(-self.re, -self.im)

    def __mul__(self, other):
        other = as_qi(other)
        return Qi(self.re * other.re - self.im * other.im,
                  self.re * other.im + self.im * other.re)

    __radd__ = __add__
    __rmul__ = __mul__

    def __truediv__(self, other):
        other = as_qi(other)
        d = other.re * other.re + other.im * other.im
        if not d:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return Qi((self.re * other.re + self.im * other.im) / d,
                  (self.im * other.re - self.re * other.im) / d)

    def conjugate(self):
        return Qi(self.re, -self.im)

    def to_complex(self) -> complex:
        return complex(self.re) + 1j * complex(self.im)

    def __repr__(self):
        if not self.im:
            return f"{self.re}"
        return f"({self.re}{'+' if self.im >= 0 else '-'}{abs(self.im)}i)"


def as_qi(x) -> Qi:
    if isinstance(x, Qi):
        return x
    if isinstance(x, (int, Fraction)):
        return Qi(x)
    raise TypeError(f"cannot interpret {x!r} as a Gaussian rational")


QI0 = Qi(0)
QI1 = Qi(1)
QI_I = Qi(0, 1)

# sparse vector: dict {index: nonzero Qi}


def vec_iadd_scaled(dst: dict, src: dict, c: Qi) -> dict:
    """dst += c * src, dropping entries that cancel to zero."""
    if c:
        for k, v in src.items():
            s = dst.get(k, QI0) + c * v
            if s:
                dst[k] = s
            else:
                dst.pop(k, None)
    return dst


def vec_scale(v: dict, c: Qi) -> dict:
    return {k: c * x for k, x in v.items()} if c else {}


def vec_equal(a: dict, b: dict) -> bool:
    return a.keys() == b.keys() and all(a[k] == b[k] for k in a)


class Echelon:
    """Growing reduced row basis; insert() reports whether the rank increased."""

    def __init__(self):
        self.pivots: dict[int, dict] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, vec: dict) -> dict:
        """Residual of vec modulo the current row space (zero iff contained)."""
        work = dict(vec)
        for p in sorted(set(work) & set(self.pivots)):
            c = work.get(p)
            if c:
                vec_iadd_scaled(work, self.pivots[p], -c)
        return work

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)

    def insert(self, vec: dict) -> dict | None:
        """Add vec to the span; return its stored reduced row if the rank grew."""
        work = self.reduce(vec)
        if not work:
            return None
        lead = min(work)
        c = work[lead]
        row = {k: v / c for k, v in work.items()}
        for other in self.pivots.values():
            if lead in other:
                vec_iadd_scaled(other, row, -other[lead])
        self.pivots[lead] = row
        return row

    def rows(self) -> list[dict]:
        """Canonical reduced rows, ordered by pivot column."""
        return [self.pivots[p] for p in sorted(self.pivots)]


def rank_of(vectors) -> int:
    e = Echelon()
    for v in vectors:
        e.insert(v)
    return e.rank


def kernel_basis(equations, width: int) -> list[dict]:
    """Basis of the solution space of a sparse homogeneous system.

    Each equation is a sparse row over coordinates 0..width-1; the basis
    vectors are in free-variable form (one per non-pivot coordinate).
    """
    ech = Echelon()
    for row in equations:
        ech.insert(row)
    out = []
    for f in range(width):
        if f in ech.pivots:
            continue
        v = {f: QI1}
        for p, row in ech.pivots.items():
            c = row.get(f)
            if c:
                v[p] = -c
        out.append(v)
    return out


def same_span(rows_a, rows_b) -> bool:
    """Exact subspace equality via rank and mutual containment."""
    ea, eb = Echelon(), Echelon()
    for r in rows_a:
        ea.insert(r)
    for r in rows_b:
        eb.insert(r)
    if ea.rank != eb.rank:
        return False
    return all(ea.contains(r) for r in eb.rows()) and all(eb.contains(r) for r in ea.rows())
