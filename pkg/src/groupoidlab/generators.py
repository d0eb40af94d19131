"""Groupoid constructions: group actions, bundles, and a seeded random corpus.

Random instances are disjoint unions of transformation groupoids of coset
actions of the built-in small groups — never random composition tables, so
every generated instance is a groupoid by construction and the generators
double as an axiom-validation corpus.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import core, groups
from .core import FiniteGroupoid
from .groups import FiniteGroup


@dataclass(frozen=True)
class GroupAction:
    """A left action of a finite group on labelled points: act[g][x] is g.x."""

    group: FiniteGroup
    points: tuple[str, ...]
    act: tuple[tuple[int, ...], ...]


def action_violations(a: GroupAction) -> list[str]:
    g, m = a.group, len(a.points)
    out = []
    if len(a.act) != g.order or any(len(row) != m for row in a.act):
        return ["action table has wrong shape"]
    for x in range(m):
        if a.act[g.identity][x] != x:
            out.append(f"identity moves point {a.points[x]}")
    for i in range(g.order):
        for j in range(g.order):
            for x in range(m):
                if a.act[i][a.act[j][x]] != a.act[g.table[i][j]][x]:
                    out.append(f"action not compatible at ({i},{j},{a.points[x]})")
                    return out
    return out


def group_action(group: FiniteGroup, points, act) -> GroupAction:
    a = GroupAction(group=group, points=tuple(points),
                    act=tuple(tuple(row) for row in act))
    bad = action_violations(a)
    if bad:
        raise ValueError(f"not a group action: {bad[0]}")
    return a


def trivial_action(group: FiniteGroup, points) -> GroupAction:
    pts = tuple(points)
    return group_action(group, pts, [range(len(pts)) for _ in range(group.order)])


def transformation_groupoid(a: GroupAction) -> FiniteGroupoid:
    """Arrows (g, x) from x to g.x, composing as (g1, g2.x) . (g2, x) = (g1 g2, x)."""
    g, m = a.group, len(a.points)

    def idx(gi: int, x: int) -> int:
        return gi * m + x

    e = g.identity
    n = g.order * m
    units = frozenset(idx(e, x) for x in range(m))
    src = tuple(idx(e, i % m) for i in range(n))
    rng = tuple(idx(e, a.act[i // m][i % m]) for i in range(n))
    inv = tuple(idx(g.inverse(i // m), a.act[i // m][i % m]) for i in range(n))
    labels = tuple(f"({g.labels[i // m]},{a.points[i % m]})" for i in range(n))
    comp = {}
    for x in range(m):
        for g2 in range(g.order):
            y = a.act[g2][x]
            for g1 in range(g.order):
                comp[(idx(g1, y), idx(g2, x))] = idx(g.table[g1][g2], x)
    return FiniteGroupoid(n=n, units=units, src=src, rng=rng, comp=comp,
                          inv=inv, labels=labels)


def group_bundle(fibers) -> FiniteGroupoid:
    """Disjoint union of one-object groupoids: fibers is [(unit label, group), ...]."""
    pairs = list(fibers.items()) if isinstance(fibers, dict) else list(fibers)
    units = []
    src = []
    rng = []
    inv = []
    labels = []
    comp = {}
    offset = 0
    for unit_label, g in pairs:
        u = offset + g.identity
        units.append(u)
        for i in range(g.order):
            src.append(u)
            rng.append(u)
            inv.append(offset + g.inverse(i))
            labels.append(f"{g.labels[i]}@{unit_label}")
        for i in range(g.order):
            for j in range(g.order):
                comp[(offset + i, offset + j)] = offset + g.table[i][j]
        offset += g.order
    return FiniteGroupoid(n=offset, units=frozenset(units), src=tuple(src),
                          rng=tuple(rng), comp=comp, inv=tuple(inv), labels=tuple(labels))


def pair_groupoid(m: int) -> FiniteGroupoid:
    """Exactly one arrow (i,j) from j to i for each ordered pair of m points."""
    n = m * m
    units = frozenset(i * m + i for i in range(m))
    src = tuple((i % m) * m + (i % m) for i in range(n))
    rng = tuple((i // m) * m + (i // m) for i in range(n))
    inv = tuple((i % m) * m + (i // m) for i in range(n))
    labels = tuple(f"({i // m},{i % m})" for i in range(n))
    comp = {}
    for i in range(m):
        for j in range(m):
            for k in range(m):
                comp[(i * m + j, j * m + k)] = i * m + k
    return FiniteGroupoid(n=n, units=units, src=src, rng=rng, comp=comp,
                          inv=inv, labels=labels)


def trivial_groupoid(m: int) -> FiniteGroupoid:
    """m isolated units and nothing else."""
    return FiniteGroupoid(n=m, units=frozenset(range(m)), src=tuple(range(m)),
                          rng=tuple(range(m)), comp={(i, i): i for i in range(m)},
                          inv=tuple(range(m)), labels=tuple(f"u{i}" for i in range(m)))


# --- named models ---------------------------------------------------------

def klein_cross() -> FiniteGroupoid:
    """The Klein four-group moving a five-point cross.

    s flips the two x-arm points, t flips the two y-arm points, and the
    center is globally fixed; 20 arrows, mixed isotropy, one fixed point.
    """
    k = groups.klein()
    points = ("c", "x+", "x-", "y+", "y-")
    act = [
        (0, 1, 2, 3, 4),   # e
        (0, 2, 1, 3, 4),   # s
        (0, 1, 2, 4, 3),   # t
        (0, 2, 1, 4, 3),   # st
    ]
    return transformation_groupoid(group_action(k, points, act))


def s3_point() -> FiniteGroupoid:
    return group_bundle([("p", groups.sym3())])


def s3_a3_bundle() -> FiniteGroupoid:
    return group_bundle([("p", groups.sym3()), ("q", groups.alt3())])


# --- seeded random corpus -------------------------------------------------

def _coset_action(g: FiniteGroup, sub: frozenset[int]) -> GroupAction:
    """Left translation on the cosets of a subgroup; points named by minimal reps."""
    seen = {}
    order = []
    for x in range(g.order):
        rep = min(g.table[x][h] for h in sub)
        if rep not in seen:
            seen[rep] = len(order)
            order.append(rep)
    points = [f"{g.labels[r]}H" for r in order]
    act = []
    for a in range(g.order):
        row = []
        for r in order:
            y = g.table[a][r]
            row.append(seen[min(g.table[y][h] for h in sub)])
        act.append(row)
    return group_action(g, points, act)


def random_groupoid(seed: int, size_budget: int = 60) -> FiniteGroupoid:
    """Deterministic random instance with at most size_budget arrows.

    Components are coset-action transformation groupoids of library groups;
    the same seed and budget always reproduce the same instance.
    """
    if size_budget < 1:
        raise ValueError("size budget must allow at least one arrow")
    rng = random.Random(seed)
    lib = groups.library()
    parts: list[FiniteGroupoid] = []
    remaining = size_budget
    attempts = 0
    while remaining >= 1 and attempts < 16:
        g = lib[rng.randrange(len(lib))]
        subs = groups.subgroups(g)
        sub = subs[rng.randrange(len(subs))]
        cost = g.order * (g.order // len(sub))
        if cost > remaining:
            attempts += 1
            continue
        parts.append(transformation_groupoid(_coset_action(g, sub)))
        remaining -= cost
        attempts = 0
    if not parts:
        parts = [trivial_groupoid(1)]
    return core.disjoint_union(parts)


NAMED_MODELS = {
    "klein-cross": klein_cross,
    "s3": s3_point,
    "s3-a3-bundle": s3_a3_bundle,
}
