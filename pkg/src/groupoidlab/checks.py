"""Machine verification of the structural identities, instance by instance.

Each check pairs an oracle computed one way (enumeration, group theory) with
the same quantity computed another way (exact linear algebra), so a pass is
two independent computations agreeing — not a tautology.  Reports are plain
data, ready for JSON.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import abelian, algebra, core, generators, groups, quotients
from .core import FiniteGroupoid
from .linalg import Echelon, same_span

DET_TOLERANCE = 1e-6
NUMERIC_TOLERANCE = 1e-9
EXHAUSTIVE_NORMAL_LIMIT = 24


@dataclass
class CheckResult:
    name: str
    instance: str
    ok: bool
    seconds: float
    witness: object = None

    def to_json(self) -> dict:
        out = {"name": self.name, "instance": self.instance,
               "status": "pass" if self.ok else "fail",
               "seconds": round(self.seconds, 6)}
        if not self.ok:
            out["witness"] = self.witness
        return out


@dataclass
class CheckReport:
    results: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def to_json(self) -> dict:
        return {
            "status": "pass" if self.ok else "fail",
            "counts": {"pass": sum(r.ok for r in self.results),
                       "fail": sum(not r.ok for r in self.results)},
            "total_seconds": round(sum(r.seconds for r in self.results), 6),
            "checks": [r.to_json() for r in self.results],
        }


def _run(name: str, instance: str, fn: Callable[[], object]) -> CheckResult:
    """Execute one check; fn returns a witness on failure, None on success."""
    start = time.perf_counter()
    try:
        witness = fn()
        ok = witness is None
    except Exception as exc:   # a crash is a failing check, not a crashed report
        witness = {"error": repr(exc)}
        ok = False
    return CheckResult(name=name, instance=instance, ok=ok,
                       seconds=time.perf_counter() - start, witness=witness)


# --- per-instance checks ---------------------------------------------------

def _check_axioms(G: FiniteGroupoid):
    bad = core.validate(G)
    if bad:
        return [{"kind": v.kind, "message": v.message} for v in bad[:3]]
    return None


def _normal_subgroupoids_for(G: FiniteGroupoid) -> list[quotients.NormalSubgroupoid]:
    if G.n <= EXHAUSTIVE_NORMAL_LIMIT:
        return quotients.enumerate_normal_subgroupoids(G)
    return [quotients.normal_subgroupoid(G, G.units),
            quotients.interior_isotropy(G)]


def _carrier_labels(G: FiniteGroupoid, members) -> list[str]:
    return [G.labels[g] for g in sorted(members)]


def _check_quotient_family(G: FiniteGroupoid):
    """Exactness, kernel-diagonal triviality, and the injectivity criterion
    for every available normal subgroupoid."""
    witnesses = []
    units = frozenset(G.units)
    for H in _normal_subgroupoids_for(G):
        qr = quotients.quotient(G, H)
        pre = quotients.quotient_preimage_of_units(G, qr)
        if pre != H.members:
            witnesses.append({"check": "exactness",
                              "carrier": _carrier_labels(G, H.members),
                              "preimage": _carrier_labels(G, pre)})
            break
        hom = algebra.quotient_hom_from_result(G, qr)
        kernel = hom.kernel()
        ech = Echelon()
        for row in kernel:
            ech.insert(row)
        kernel_rank = ech.rank
        for d in algebra.diagonal_basis(G):
            if not ech.insert(d):
                witnesses.append({"check": "kernel-diagonal",
                                  "carrier": _carrier_labels(G, H.members)})
                break
        if witnesses:
            break
        if (kernel_rank == 0) != (H.members == units):
            witnesses.append({"check": "injectivity-criterion",
                              "carrier": _carrier_labels(G, H.members),
                              "kernel_rank": kernel_rank})
            break
    return witnesses or None


def _check_character_count(G: FiniteGroupoid):
    chars = len(algebra.enumerate_characters(G))
    dim = algebra.abelianization_dim(G)
    if chars != dim:
        return {"characters": chars, "abelianization_dim": dim}
    return None


def _check_pi_kernel(G: FiniteGroupoid):
    pi = algebra.pi_hom(G)
    kernel = pi.kernel()
    ideal = algebra.commutator_ideal(G)
    if not same_span(kernel, ideal.rows):
        return {"kernel_rank": len(kernel), "ideal_rank": ideal.rank}
    return None


def _gelfand_witness(B: FiniteGroupoid):
    gm = algebra.gelfand_transform(B)
    if gm.size != B.n:
        return {"reason": "not square", "rows": gm.size, "dim": B.n}
    bad = algebra.gelfand_multiplicativity_violations(gm)
    if bad:
        a, b, r = bad[0]
        return {"reason": "not multiplicative", "pair": [B.labels[a], B.labels[b]], "row": r}
    det = np.linalg.det(np.array(gm.to_complex(), dtype=complex)) if gm.size else 1.0
    if abs(det) <= DET_TOLERANCE:
        return {"reason": "numerically singular", "abs_det": abs(det)}
    return None


def _check_gelfand(G: FiniteGroupoid):
    targets = [("abelianization", quotients.abelianize_groupoid(G).g_ab)]
    if core.is_group_bundle(G):
        try:
            abelian.dual_bundle(G)
            targets.append(("self", G))
        except ValueError:
            pass   # non-abelian fibers: the transform does not apply to G itself
    for tag, B in targets:
        w = _gelfand_witness(B)
        if w is not None:
            w["target"] = tag
            return w
    return None


def _check_fiber_duality(G: FiniteGroupoid):
    for x in sorted(core.fixed_points(G).members):
        a, _ = algebra.abelianized_fiber(G, x)
        chars = abelian.characters(a)
        if len(chars) != a.order:
            return {"unit": G.labels[x], "characters": len(chars), "order": a.order}
        dual = abelian.char_group_structure(chars)
        if abelian.invariant_factors(dual).factors != abelian.invariant_factors(a).factors:
            return {"unit": G.labels[x],
                    "factors": list(abelian.invariant_factors(a).factors),
                    "dual_factors": list(abelian.invariant_factors(dual).factors)}
    return None


def instance_checks(G: FiniteGroupoid, instance: str) -> list[CheckResult]:
    return [
        _run("axioms", instance, lambda: _check_axioms(G)),
        _run("quotient-family", instance, lambda: _check_quotient_family(G)),
        _run("character-count", instance, lambda: _check_character_count(G)),
        _run("pi-kernel", instance, lambda: _check_pi_kernel(G)),
        _run("gelfand", instance, lambda: _check_gelfand(G)),
        _run("fiber-duality", instance, lambda: _check_fiber_duality(G)),
    ]


# --- fixed regressions ------------------------------------------------------

def _regression_s3():
    s3 = generators.s3_point()
    a3 = frozenset(s3.label_index(l) for l in ("e@p", "s@p", "s2@p"))
    qr = quotients.quotient(s3, a3)
    dim = algebra.abelianization_dim(s3)
    if qr.quotient.n != 2 or dim != 2:
        return {"quotient_size": qr.quotient.n, "abelianization_dim": dim}
    return None


def _regression_s3_a3():
    G = generators.s3_a3_bundle()
    ab = quotients.abelianize_groupoid(G)
    dim = algebra.abelianization_dim(G)
    if ab.g_ab.n != 5 or dim != 5:
        return {"g_ab_size": ab.g_ab.n, "abelianization_dim": dim}
    return None


def _regression_klein_cross():
    G = generators.klein_cross()
    chars = algebra.enumerate_characters(G)
    center = G.label_index("(e,c)")
    if len(chars) != 4:
        return {"characters": len(chars)}
    for phi in chars:
        if phi.unit != center or any(G.src[g] != center for g in phi.support):
            return {"bad_support_unit": G.labels[phi.unit]}
    return None


def _regression_pair():
    G = generators.pair_groupoid(2)
    chars = algebra.enumerate_characters(G)
    rank = algebra.commutator_ideal(G).rank
    if chars or rank != G.n:
        return {"characters": len(chars), "ideal_rank": rank}
    return None


def regression_checks() -> list[CheckResult]:
    return [
        _run("regression:s3-quotient", "named", _regression_s3),
        _run("regression:s3-a3-bundle", "named", _regression_s3_a3),
        _run("regression:klein-cross-characters", "named", _regression_klein_cross),
        _run("regression:pair-groupoid", "named", _regression_pair),
    ]


# --- the duality family -----------------------------------------------------

def _partitions(n: int) -> list[tuple[int, ...]]:
    if n == 0:
        return [()]
    out = []

    def rec(remaining: int, cap: int, acc: list[int]):
        if remaining == 0:
            out.append(tuple(acc))
            return
        for part in range(min(remaining, cap), 0, -1):
            acc.append(part)
            rec(remaining - part, part, acc)
            acc.pop()

    rec(n, n, [])
    return out


def _prime_factorization(n: int) -> list[tuple[int, int]]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1
    if n > 1:
        out.append((n, 1))
    return out


def abelian_groups_of_order(n: int):
    """All abelian groups of order n up to isomorphism.

    Yields (expected_invariant_factors, group); the expectation comes from
    the prime-power partitions directly, independent of the matrix route.
    """
    import itertools
    primes = _prime_factorization(n)
    partition_lists = [_partitions(e) for _, e in primes]
    for combo in itertools.product(*partition_lists):
        # per-prime cyclic orders, descending
        per_prime = [[p ** part for part in parts]
                     for (p, _), parts in zip(primes, combo)]
        depth = max((len(c) for c in per_prime), default=0)
        expected = []
        for i in range(depth):
            d = 1
            for chain in per_prime:
                if i < len(chain):
                    d *= chain[i]
            expected.append(d)
        expected = tuple(sorted(expected))
        cyclic_orders = sorted(itertools.chain.from_iterable(per_prime))
        g = groups.cyclic(1)
        for m in cyclic_orders:
            g = groups.direct_product(g, groups.cyclic(m))
        yield expected, abelian.abelianized(g, name=f"A{n}:" + "x".join(map(str, cyclic_orders)))


def _duality_family(max_order: int = 64):
    checked = 0
    for n in range(1, max_order + 1):
        for expected, a in abelian_groups_of_order(n):
            dec = abelian.invariant_factors(a)
            if dec.factors != expected:
                return {"group": a.name, "factors": list(dec.factors),
                        "expected": list(expected)}
            chars = abelian.characters(a)
            if len(chars) != a.order:
                return {"group": a.name, "characters": len(chars), "order": a.order}
            dual = abelian.char_group_structure(chars)
            if abelian.invariant_factors(dual).factors != dec.factors:
                return {"group": a.name,
                        "dual_factors": list(abelian.invariant_factors(dual).factors),
                        "factors": list(dec.factors)}
            checked += 1
    if checked < max_order:   # sanity: at least one group per order
        return {"reason": "family enumeration came up short", "checked": checked}
    return None


def duality_family_check(max_order: int = 64) -> CheckResult:
    return _run(f"duality-family(order<={max_order})", "family",
                lambda: _duality_family(max_order))


# --- corpus drivers ---------------------------------------------------------

def corpus_budget(seed: int, cap: int = 60) -> int:
    """Instance size budget for a corpus seed: cycles through 1..cap."""
    return 1 + seed % cap


def _corpus_instance(args: tuple[int, int]) -> list[CheckResult]:
    seed, budget = args
    G = generators.random_groupoid(seed, budget)
    return instance_checks(G, instance=f"seed={seed},budget={budget}")


def corpus_report(seed: int, count: int, cap: int = 60, jobs: int = 1) -> CheckReport:
    """Run the full invariant suite over generated instances plus the fixed checks."""
    tasks = [(s, corpus_budget(s, cap)) for s in range(seed, seed + count)]
    report = CheckReport()
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for results in pool.map(_corpus_instance, tasks):
                report.results.extend(results)
    else:
        for task in tasks:
            report.results.extend(_corpus_instance(task))
    report.results.extend(regression_checks())
    report.results.append(duality_family_check())
    return report


def file_report(G: FiniteGroupoid, instance: str) -> CheckReport:
    return CheckReport(results=instance_checks(G, instance))
