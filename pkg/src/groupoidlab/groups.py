"""Small finite groups as literal multiplication tables, plus subgroup machinery.

The library covers cyclic groups to order 12, the Klein four-group, the
symmetric and alternating groups on three letters, the dihedral group of the
square, and the quaternion group — enough shapes to exercise abelian and
non-abelian fibers with different commutator subgroups.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import lcm


@dataclass(frozen=True)
class FiniteGroup:
    name: str
    labels: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]  # table[i][j] = i * j
    identity: int

    @property
    def order(self) -> int:
        return len(self.labels)

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def inverse(self, i: int) -> int:
        return self.table[i].index(self.identity)

    def order_of(self, i: int) -> int:
        k, x = 1, i
        while x != self.identity:
            x = self.table[x][i]
            k += 1
        return k

    def exponent(self) -> int:
        return lcm(*(self.order_of(i) for i in range(self.order)))

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name}, order={self.order})"


def finite_group(name: str, labels: list[str], table: list[list[int]]) -> FiniteGroup:
    tbl = tuple(tuple(row) for row in table)
    identity = None
    for i in range(len(labels)):
        if all(tbl[i][j] == j and tbl[j][i] == j for j in range(len(labels))):
            identity = i
            break
    if identity is None:
        raise ValueError(f"{name}: table has no identity")
    return FiniteGroup(name=name, labels=tuple(labels), table=tbl, identity=identity)


def group_violations(g: FiniteGroup) -> list[str]:
    """Exhaustive group-axiom check, for tests and generated tables."""
    n = g.order
    out = []
    for i, j in itertools.product(range(n), repeat=2):
        if not (0 <= g.table[i][j] < n):
            out.append(f"entry ({i},{j}) out of range")
    for i, j, k in itertools.product(range(n), repeat=3):
        if g.table[g.table[i][j]][k] != g.table[i][g.table[j][k]]:
            out.append(f"associativity fails at ({i},{j},{k})")
            break
    for i in range(n):
        if g.identity not in g.table[i]:
            out.append(f"no inverse for {i}")
    return out


def is_abelian(g: FiniteGroup) -> bool:
    return all(g.table[i][j] == g.table[j][i]
               for i in range(g.order) for j in range(i))


# --- library -------------------------------------------------------------

def _from_permutations(name: str, perms: list[tuple[str, tuple[int, ...]]]) -> FiniteGroup:
    """Build a group from permutations under (p * q)(x) = p(q(x))."""
    labels = [lab for lab, _ in perms]
    index = {perm: i for i, (_, perm) in enumerate(perms)}
    pts = range(len(perms[0][1]))
    table = [[index[tuple(p[q[x]] for x in pts)] for _, q in perms] for _, p in perms]
    return finite_group(name, labels, table)


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError("cyclic group order must be positive")
    labels = ["e"] + [f"g{k}" if k > 1 else "g" for k in range(1, n)]
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return finite_group(f"C{n}", labels, table)


def klein() -> FiniteGroup:
    # e, s, t, st with s^2 = t^2 = e and st = ts.
    labels = ["e", "s", "t", "st"]
    table = [[0, 1, 2, 3],
             [1, 0, 3, 2],
             [2, 3, 0, 1],
             [3, 2, 1, 0]]
    return finite_group("V4", labels, table)


def sym3() -> FiniteGroup:
    # s = (0 1 2), t = (0 1); satisfies s^3 = t^2 = e and s*t = t*s^2.
    return _from_permutations("S3", [
        ("e", (0, 1, 2)),
        ("s", (1, 2, 0)),
        ("s2", (2, 0, 1)),
        ("t", (1, 0, 2)),
        ("ts", (0, 2, 1)),
        ("ts2", (2, 1, 0)),
    ])


def alt3() -> FiniteGroup:
    return _from_permutations("A3", [
        ("e", (0, 1, 2)),
        ("s", (1, 2, 0)),
        ("s2", (2, 0, 1)),
    ])


def dihedral4() -> FiniteGroup:
    # Symmetries of the square on corners 0..3: r rotates, f reflects.
    r = (1, 2, 3, 0)
    f = (3, 2, 1, 0)

    def compose(p, q):
        return tuple(p[q[x]] for x in range(4))

    r2, r3 = compose(r, r), compose(r, compose(r, r))
    return _from_permutations("D4", [
        ("e", (0, 1, 2, 3)),
        ("r", r),
        ("r2", r2),
        ("r3", r3),
        ("f", f),
        ("fr", compose(f, r)),
        ("fr2", compose(f, r2)),
        ("fr3", compose(f, r3)),
    ])


def quaternion8() -> FiniteGroup:
    # Units {±1, ±i, ±j, ±k}; encoded as (sign, axis) with axis in 1,i,j,k.
    labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    axis = [0, 0, 1, 1, 2, 2, 3, 3]   # 0 = real, 1 = i, 2 = j, 3 = k
    sign = [1, -1, 1, -1, 1, -1, 1, -1]
    # axis multiplication: (axis, axis) -> (sign, axis)
    ax_mul = {(0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
              (1, 0): (1, 1), (2, 0): (1, 2), (3, 0): (1, 3),
              (1, 1): (-1, 0), (2, 2): (-1, 0), (3, 3): (-1, 0),
              (1, 2): (1, 3), (2, 3): (1, 1), (3, 1): (1, 2),
              (2, 1): (-1, 3), (3, 2): (-1, 1), (1, 3): (-1, 2)}
    index = {(s, a): i for i, (s, a) in enumerate(zip(sign, axis))}
    table = []
    for i in range(8):
        row = []
        for j in range(8):
            s, a = ax_mul[(axis[i], axis[j])]
            row.append(index[(s * sign[i] * sign[j], a)])
        table.append(row)
    return finite_group("Q8", labels, table)


LIBRARY_BUILDERS = {
    **{f"C{n}": (lambda n=n: cyclic(n)) for n in range(1, 13)},
    "V4": klein,
    "S3": sym3,
    "A3": alt3,
    "D4": dihedral4,
    "Q8": quaternion8,
}


def library() -> list[FiniteGroup]:
    """All built-in groups, in a fixed order."""
    return [build() for build in LIBRARY_BUILDERS.values()]


def direct_product(a: FiniteGroup, b: FiniteGroup) -> FiniteGroup:
    labels = [f"({la},{lb})" for la in a.labels for lb in b.labels]
    nb = b.order
    table = [[a.table[i // nb][j // nb] * nb + b.table[i % nb][j % nb]
              for j in range(a.order * nb)] for i in range(a.order * nb)]
    return finite_group(f"{a.name}x{b.name}", labels, table)


# --- subgroup machinery --------------------------------------------------

def closure(g: FiniteGroup, seed) -> frozenset[int]:
    """Subgroup generated by the seed elements."""
    out = {g.identity} | set(seed)
    frontier = list(out)
    while frontier:
        nxt = []
        for x in frontier:
            for y in list(out):
                for z in (g.table[x][y], g.table[y][x]):
                    if z not in out:
                        out.add(z)
                        nxt.append(z)
        frontier = nxt
    return frozenset(out)


def subgroups(g: FiniteGroup) -> list[frozenset[int]]:
    """All subgroups, sorted by size then membership tuple."""
    found = {frozenset([g.identity])}
    frontier = list(found)
    while frontier:
        nxt = []
        for sub in frontier:
            for x in range(g.order):
                if x not in sub:
                    bigger = closure(g, sub | {x})
                    if bigger not in found:
                        found.add(bigger)
                        nxt.append(bigger)
        frontier = nxt
    return sorted(found, key=lambda s: (len(s), tuple(sorted(s))))


def is_normal_subgroup(g: FiniteGroup, sub: frozenset[int]) -> bool:
    for a in range(g.order):
        ai = g.inverse(a)
        for h in sub:
            if g.table[g.table[a][h]][ai] not in sub:
                return False
    return True


def normal_subgroups(g: FiniteGroup) -> list[frozenset[int]]:
    return [s for s in subgroups(g) if is_normal_subgroup(g, s)]


def commutator_subgroup(g: FiniteGroup) -> frozenset[int]:
    comms = set()
    for a in range(g.order):
        for b in range(g.order):
            ab = g.table[a][b]
            ba = g.table[b][a]
            comms.add(g.table[ab][g.inverse(ba)])
    return closure(g, comms)
