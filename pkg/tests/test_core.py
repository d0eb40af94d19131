"""Groupoid tables, axiom validation, and structural subsets."""

import dataclasses

import pytest

from groupoidlab import core, generators


def _kinds(violations):
    return {v.kind for v in violations}


class TestValidate:
    def test_named_models_are_valid(self, klein_cross, s3, s3_a3, pair2):
        for G in (klein_cross, s3, s3_a3, pair2,
                  generators.trivial_groupoid(3), generators.pair_groupoid(4)):
            assert core.validate(G) == []

    def test_empty_groupoid_is_valid(self):
        G = generators.group_bundle([])
        assert G.n == 0
        assert core.validate(G) == []

    def test_out_of_range_src_is_malformed(self, klein_cross):
        bad = dataclasses.replace(klein_cross,
                                  src=(99,) + klein_cross.src[1:])
        assert _kinds(core.validate(bad)) == {core.MALFORMED}

    def test_missing_composable_pair_is_malformed(self, klein_cross):
        comp = dict(klein_cross.comp)
        pair = next((a, b) for (a, b) in comp
                    if not klein_cross.is_unit(a) and not klein_cross.is_unit(b))
        del comp[pair]
        bad = dataclasses.replace(klein_cross, comp=comp)
        assert _kinds(core.validate(bad)) == {core.MALFORMED}

    def test_non_composable_entry_is_malformed(self, klein_cross):
        G = klein_cross
        a = next(g for g in G.arrows() if G.src[g] != G.rng[g])
        comp = dict(G.comp)
        comp[(a, a)] = a   # src(a) != rng(a), so (a, a) is not composable
        bad = dataclasses.replace(G, comp=comp)
        assert _kinds(core.validate(bad)) == {core.MALFORMED}

    def test_fake_unit_breaks_unit_law(self, klein_cross):
        G = klein_cross
        moving = next(g for g in G.arrows() if G.src[g] != G.rng[g])
        bad = dataclasses.replace(G, units=G.units | {moving})
        kinds = _kinds(core.validate(bad))
        assert kinds == {core.UNIT_LAW}

    def test_wrong_unit_product_breaks_identity_law(self, klein_cross):
        G = klein_cross
        c = G.label_index("(e,c)")
        s = G.label_index("(s,c)")
        comp = dict(G.comp)
        comp[(c, c)] = s
        bad = dataclasses.replace(G, comp=comp)
        assert core.IDENTITY_LAW in _kinds(core.validate(bad))

    def test_product_at_wrong_unit_breaks_compatibility(self, klein_cross):
        G = klein_cross
        s_c = G.label_index("(s,c)")
        s_far = G.label_index("(s,x+)")
        comp = dict(G.comp)
        comp[(s_c, s_c)] = s_far
        bad = dataclasses.replace(G, comp=comp)
        assert core.COMPATIBILITY in _kinds(core.validate(bad))

    def test_scrambled_product_breaks_associativity(self, s3):
        G = s3
        s = G.label_index("s@p")
        t = G.label_index("t@p")
        e = G.label_index("e@p")
        comp = dict(G.comp)
        comp[(s, t)] = e   # wrong element of the same one-object fiber
        bad = dataclasses.replace(G, comp=comp)
        assert core.ASSOCIATIVITY in _kinds(core.validate(bad))

    def test_wrong_inverse_breaks_inverse_law(self, s3):
        G = s3
        s = G.label_index("s@p")
        inv = list(G.inv)
        inv[s] = s   # s has order three, so it is not its own inverse
        bad = dataclasses.replace(G, inv=tuple(inv))
        assert core.INVERSE_LAW in _kinds(core.validate(bad))


class TestSubsets:
    def test_klein_cross_isotropy_has_twelve_arrows(self, klein_cross):
        iso = core.isotropy(klein_cross)
        assert len(iso.members) == 12
        labels = {klein_cross.labels[g] for g in iso.members}
        assert {"(e,c)", "(s,c)", "(t,c)", "(st,c)", "(s,y+)", "(t,x+)"} <= labels

    def test_pair_groupoid_isotropy_is_units(self, pair2):
        assert core.isotropy(pair2).members == frozenset(pair2.units)
        assert core.is_effective(pair2)

    def test_klein_cross_is_not_effective(self, klein_cross):
        assert not core.is_effective(klein_cross)

    def test_fixed_points(self, klein_cross, s3_a3, pair2):
        fp = core.fixed_points(klein_cross)
        assert {klein_cross.labels[x] for x in fp.members} == {"(e,c)"}
        assert core.fixed_points(s3_a3).members == frozenset(s3_a3.units)
        assert core.fixed_points(pair2).members == frozenset()

    def test_group_bundle_detection(self, s3_a3, klein_cross):
        assert core.is_group_bundle(s3_a3)
        assert not core.is_group_bundle(klein_cross)

    def test_unit_components(self, klein_cross, s3_a3):
        comps = core.unit_components(klein_cross)
        assert sorted(len(c) for c in comps) == [1, 2, 2]
        assert sorted(len(c) for c in core.unit_components(s3_a3)) == [1, 1]

    def test_units_form_a_bisection_and_isotropy_does_not(self, klein_cross):
        assert core.is_bisection(klein_cross, klein_cross.units)
        assert not core.is_bisection(klein_cross, core.isotropy(klein_cross))

    def test_bisection_with_moving_arrows(self, pair2):
        units = sorted(pair2.units)
        off = [g for g in pair2.arrows() if g not in pair2.units]
        assert core.is_bisection(pair2, off)           # the flip
        assert not core.is_bisection(pair2, [units[0], off[0]] + [off[1]])


class TestRestriction:
    def test_restrict_to_fixed_point(self, klein_cross):
        sub = core.restrict(klein_cross, core.fixed_points(klein_cross))
        assert sub.n == 4
        assert core.validate(sub) == []
        assert core.is_group_bundle(sub)

    def test_restrict_to_invariant_component(self, klein_cross):
        G = klein_cross
        arm = [x for x in G.units if G.labels[x] in ("(e,x+)", "(e,x-)")]
        sub = core.restrict(G, arm)
        assert core.validate(sub) == []
        assert sub.n == 8   # Klein group times two points

    def test_restrict_to_non_invariant_set_raises(self, klein_cross):
        x_plus = klein_cross.label_index("(e,x+)")
        with pytest.raises(core.NotInvariantError) as err:
            core.restrict(klein_cross, [x_plus])
        assert err.value.witness is not None

    def test_invariance_witness(self, klein_cross):
        assert core.invariance_witness(klein_cross, klein_cross.units) is None
        x_plus = klein_cross.label_index("(e,x+)")
        w = core.invariance_witness(klein_cross, [x_plus])
        assert w is not None and klein_cross.src[w] == x_plus


class TestDisjointUnion:
    def test_union_sizes_and_validity(self, s3, pair2):
        u = core.disjoint_union([s3, pair2])
        assert u.n == s3.n + pair2.n
        assert core.validate(u) == []
        assert len(u.units) == len(s3.units) + len(pair2.units)

    def test_union_labels_are_prefixed(self, s3, pair2):
        u = core.disjoint_union([s3, pair2])
        assert "0:e@p" in u.labels and "1:(0,1)" in u.labels

    def test_single_part_keeps_labels(self, s3):
        u = core.disjoint_union([s3])
        assert u.labels == s3.labels


class TestIsotropyFiber:
    def test_fiber_at_fixed_point_matches_acting_group(self, klein_cross):
        c = klein_cross.label_index("(e,c)")
        arrows, table = core.isotropy_fiber(klein_cross, c)
        assert len(arrows) == 4
        from groupoidlab import groups
        assert table == [list(r) for r in groups.klein().table]

    def test_fiber_at_free_point_is_trivial(self, pair2):
        x = sorted(pair2.units)[0]
        arrows, table = core.isotropy_fiber(pair2, x)
        assert arrows == [x] and table == [[0]]
