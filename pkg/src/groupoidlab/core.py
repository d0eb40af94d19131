"""Finite groupoids as explicit arrow tables.

A groupoid is stored with arrows indexed 0..n-1: a set of unit indices, total
source/range maps into the units, a partial composition table (defined exactly
on pairs with src(a) == rng(b)), and a total inversion map.  Everything is
finite and checked by exhaustive enumeration, so the usual axioms become
decidable table properties.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator


@dataclass(frozen=True)
class FiniteGroupoid:
    """A finite groupoid given by explicit tables on arrow indices 0..n-1.

    comp maps a composable pair (a, b) to the arrow for "a after b"; a pair is
    composable exactly when src(a) == rng(b).  labels name arrows for
    serialization and never affect the algebra.
    """

    n: int
    units: frozenset[int]
    src: tuple[int, ...]
    rng: tuple[int, ...]
    comp: dict[tuple[int, int], int]
    inv: tuple[int, ...]
    labels: tuple[str, ...]

    def arrows(self) -> range:
        return range(self.n)

    def composable(self, a: int, b: int) -> bool:
        return self.src[a] == self.rng[b]

    def compose(self, a: int, b: int) -> int:
        return self.comp[(a, b)]

    def is_unit(self, g: int) -> bool:
        return g in self.units

    def arrows_from(self, x: int) -> list[int]:
        """All arrows with source x."""
        return [g for g in range(self.n) if self.src[g] == x]

    def arrows_into(self, x: int) -> list[int]:
        """All arrows with range x."""
        return [g for g in range(self.n) if self.rng[g] == x]

    def label_index(self, label: str) -> int:
        return self.labels.index(label)

    def __repr__(self) -> str:
        return f"FiniteGroupoid(n={self.n}, units={len(self.units)})"


def make_groupoid(units: Iterable[int], src: Iterable[int], rng: Iterable[int],
                  comp: dict[tuple[int, int], int], inv: Iterable[int],
                  labels: Iterable[str] | None = None) -> FiniteGroupoid:
    """Normalize containers and build a FiniteGroupoid (no axiom checking)."""
    src_t = tuple(src)
    n = len(src_t)
    if labels is None:
        labels = [f"g{i}" for i in range(n)]
    return FiniteGroupoid(n=n, units=frozenset(units), src=src_t, rng=tuple(rng),
                          comp=dict(comp), inv=tuple(inv), labels=tuple(labels))


@dataclass(frozen=True)
class ElementSubset:
    """A subset of a groupoid's arrows, remembering its host."""

    host: FiniteGroupoid
    members: frozenset[int]

    def __contains__(self, g: int) -> bool:
        return g in self.members

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def __repr__(self) -> str:
        return f"ElementSubset({sorted(self.members)})"


def subset(host: FiniteGroupoid, members: Iterable[int]) -> ElementSubset:
    ms = frozenset(members)
    bad = [g for g in ms if not (0 <= g < host.n)]
    if bad:
        raise ValueError(f"subset members out of range: {sorted(bad)}")
    return ElementSubset(host, ms)


def _members(host: FiniteGroupoid, s: ElementSubset | Iterable[int]) -> frozenset[int]:
    """Accept either an ElementSubset of this host or a raw index iterable."""
    if isinstance(s, ElementSubset):
        if s.host is not host and s.host != host:
            raise ValueError("subset belongs to a different groupoid")
        return s.members
    return subset(host, s).members


# --- validation ---------------------------------------------------------

MALFORMED = "malformed-table"
UNIT_LAW = "unit-law"
IDENTITY_LAW = "identity-law"
COMPATIBILITY = "compatibility"
ASSOCIATIVITY = "associativity"
INVERSE_LAW = "inverse-law"


@dataclass(frozen=True)
class AxiomViolation:
    kind: str
    message: str
    witness: tuple

    def __repr__(self) -> str:
        return f"AxiomViolation({self.kind}: {self.message})"


def _check_malformed(G: FiniteGroupoid) -> list[AxiomViolation]:
    out = []
    n = G.n
    if len(G.src) != n or len(G.rng) != n or len(G.inv) != n or len(G.labels) != n:
        out.append(AxiomViolation(MALFORMED, "table lengths disagree with n", (n,)))
        return out
    for x in G.units:
        if not (0 <= x < n):
            out.append(AxiomViolation(MALFORMED, "unit index out of range", (x,)))
    for g in range(n):
        for name, table in (("src", G.src), ("rng", G.rng), ("inv", G.inv)):
            if not (0 <= table[g] < n):
                out.append(AxiomViolation(MALFORMED, f"{name}({g}) out of range", (g, table[g])))
    if out:
        return out
    for g in range(n):
        for name, table in (("src", G.src), ("rng", G.rng)):
            if table[g] not in G.units:
                out.append(AxiomViolation(MALFORMED, f"{name}({g}) is not a unit", (g, table[g])))
    for (a, b), c in G.comp.items():
        if not (0 <= a < n and 0 <= b < n and 0 <= c < n):
            out.append(AxiomViolation(MALFORMED, "comp entry out of range", (a, b, c)))
        elif G.src[a] != G.rng[b]:
            out.append(AxiomViolation(MALFORMED, "comp defined on non-composable pair", (a, b)))
    for a in range(n):
        for b in range(n):
            if G.src[a] == G.rng[b] and (a, b) not in G.comp:
                out.append(AxiomViolation(MALFORMED, "comp undefined on composable pair", (a, b)))
    return out


def validate(G: FiniteGroupoid) -> list[AxiomViolation]:
    """Exhaustively check the groupoid axioms; return all violations found.

    Malformed tables (bad indices, comp not defined exactly on composable
    pairs) are reported alone, since the axiom checks assume well-formed
    tables.  On success the list is empty.
    """
    malformed = _check_malformed(G)
    if malformed:
        return malformed

    out = []
    for x in sorted(G.units):
        if G.src[x] != x or G.rng[x] != x:
            out.append(AxiomViolation(UNIT_LAW, "unit not fixed by src/rng", (x,)))
    if out:
        # src/rng of a unit feed the identity-law lookups below; stop here.
        return out

    for g in G.arrows():
        if G.comp[(g, G.src[g])] != g:
            out.append(AxiomViolation(IDENTITY_LAW, "g . src(g) != g", (g,)))
        if G.comp[(G.rng[g], g)] != g:
            out.append(AxiomViolation(IDENTITY_LAW, "rng(g) . g != g", (g,)))

    for (a, b), c in G.comp.items():
        if G.src[c] != G.src[b] or G.rng[c] != G.rng[a]:
            out.append(AxiomViolation(COMPATIBILITY, "src/rng of composite disagree", (a, b, c)))
    if any(v.kind == COMPATIBILITY for v in out):
        # the associativity lookups compose products further, which is only
        # well-defined once every product lands between the compatible units
        return out

    by_rng: dict[int, list[int]] = {}
    for g in G.arrows():
        by_rng.setdefault(G.rng[g], []).append(g)
    for (a, b), ab in G.comp.items():
        for c in by_rng.get(G.src[b], ()):
            if G.comp[(ab, c)] != G.comp[(a, G.comp[(b, c)])]:
                out.append(AxiomViolation(ASSOCIATIVITY, "(ab)c != a(bc)", (a, b, c)))

    for g in G.arrows():
        h = G.inv[g]
        left = G.comp.get((h, g))
        right = G.comp.get((g, h))
        if left != G.src[g] or right != G.rng[g]:
            out.append(AxiomViolation(INVERSE_LAW, "inv(g).g != src(g) or g.inv(g) != rng(g)", (g, h)))
    return out


# --- structural subsets --------------------------------------------------

def isotropy(G: FiniteGroupoid) -> ElementSubset:
    """Arrows with equal source and range.

    In the finite-discrete setting every such arrow is isolated, so this set
    is already open; no interior needs to be taken.
    """
    return subset(G, (g for g in G.arrows() if G.src[g] == G.rng[g]))


def compose_sets(G: FiniteGroupoid, U: ElementSubset | Iterable[int],
                 V: ElementSubset | Iterable[int]) -> ElementSubset:
    """Pointwise product {u.v : u in U, v in V, composable}."""
    mu = _members(G, U)
    mv = _members(G, V)
    out = set()
    for u in mu:
        for v in mv:
            if G.src[u] == G.rng[v]:
                out.add(G.comp[(u, v)])
    return subset(G, out)


def fixed_points(G: FiniteGroupoid) -> ElementSubset:
    """Units x such that every arrow out of x comes back to x."""
    fixed = set(G.units)
    for g in G.arrows():
        if G.src[g] != G.rng[g]:
            fixed.discard(G.src[g])
            fixed.discard(G.rng[g])
    return subset(G, fixed)


def invariance_witness(G: FiniteGroupoid, F: ElementSubset | Iterable[int]) -> int | None:
    """Return an arrow leaving F (src in F, rng outside), or None if F is invariant."""
    mf = _members(G, F)
    for g in G.arrows():
        if G.src[g] in mf and G.rng[g] not in mf:
            return g
    return None


class NotInvariantError(ValueError):
    """Raised when restricting to a non-invariant unit set; carries the witness arrow."""

    def __init__(self, witness: int, label: str):
        super().__init__(f"unit set is not invariant: arrow {label} leaves it")
        self.witness = witness


def restricted_arrows(G: FiniteGroupoid, F: ElementSubset | Iterable[int]) -> list[int]:
    """Arrows of the restriction to F, in ascending host order."""
    mf = _members(G, F)
    bad = [x for x in mf if x not in G.units]
    if bad:
        raise ValueError(f"restriction set contains non-units: {sorted(bad)}")
    w = invariance_witness(G, mf)
    if w is not None:
        raise NotInvariantError(w, G.labels[w])
    return [g for g in G.arrows() if G.src[g] in mf]


def restrict(G: FiniteGroupoid, F: ElementSubset | Iterable[int]) -> FiniteGroupoid:
    """Full subgroupoid over an invariant set of units F.

    Arrow order and labels are inherited from the host; rejects non-invariant
    F with the witness arrow in the error.
    """
    kept = restricted_arrows(G, F)
    index = {g: i for i, g in enumerate(kept)}
    comp = {(index[a], index[b]): index[c]
            for (a, b), c in G.comp.items() if a in index and b in index}
    return FiniteGroupoid(
        n=len(kept),
        units=frozenset(index[x] for x in kept if x in G.units),
        src=tuple(index[G.src[g]] for g in kept),
        rng=tuple(index[G.rng[g]] for g in kept),
        comp=comp,
        inv=tuple(index[G.inv[g]] for g in kept),
        labels=tuple(G.labels[g] for g in kept),
    )


def is_effective(G: FiniteGroupoid) -> bool:
    """True when the only arrows fixing their source are the units."""
    return isotropy(G).members == G.units


def is_group_bundle(G: FiniteGroupoid) -> bool:
    """True when every arrow has equal source and range."""
    return len(isotropy(G)) == G.n


def is_bisection(G: FiniteGroupoid, U: ElementSubset | Iterable[int]) -> bool:
    """True when src and rng are both injective on U."""
    mu = _members(G, U)
    srcs = {G.src[g] for g in mu}
    rngs = {G.rng[g] for g in mu}
    return len(srcs) == len(mu) and len(rngs) == len(mu)


def unit_components(G: FiniteGroupoid) -> list[frozenset[int]]:
    """Partition of the units into connected components under arrows."""
    parent = {x: x for x in G.units}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in G.arrows():
        a, b = find(G.src[g]), find(G.rng[g])
        if a != b:
            parent[a] = b
    comps: dict[int, set[int]] = {}
    for x in G.units:
        comps.setdefault(find(x), set()).add(x)
    return [frozenset(c) for _, c in sorted((min(c), c) for c in comps.values())]


def isotropy_fiber(G: FiniteGroupoid, x: int) -> tuple[list[int], list[list[int]]]:
    """Arrows fixing the unit x, with their local multiplication table.

    Returns (arrows, table) where table[i][j] is the local index of
    arrows[i] . arrows[j]; this is a finite group with identity x.
    """
    if x not in G.units:
        raise ValueError(f"{x} is not a unit")
    arrows = [g for g in G.arrows() if G.src[g] == x and G.rng[g] == x]
    index = {g: i for i, g in enumerate(arrows)}
    table = [[index[G.comp[(a, b)]] for b in arrows] for a in arrows]
    return arrows, table


def disjoint_union(parts: list[FiniteGroupoid]) -> FiniteGroupoid:
    """Disjoint union; labels are prefixed with the part index to stay unique."""
    units: list[int] = []
    src: list[int] = []
    rng: list[int] = []
    inv: list[int] = []
    labels: list[str] = []
    comp: dict[tuple[int, int], int] = {}
    offset = 0
    for k, P in enumerate(parts):
        units.extend(x + offset for x in P.units)
        src.extend(x + offset for x in P.src)
        rng.extend(x + offset for x in P.rng)
        inv.extend(x + offset for x in P.inv)
        if len(parts) == 1:
            labels.extend(P.labels)
        else:
            labels.extend(f"{k}:{lab}" for lab in P.labels)
        for (a, b), c in P.comp.items():
            comp[(a + offset, b + offset)] = c + offset
        offset += P.n
    return FiniteGroupoid(n=offset, units=frozenset(units), src=tuple(src),
                          rng=tuple(rng), comp=comp, inv=tuple(inv), labels=tuple(labels))
