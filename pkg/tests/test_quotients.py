"""Normal subgroupoids, quotients, and fixed-point abelianization."""

import pytest

from groupoidlab import core, generators, groups, quotients


def _labels(G, members):
    return {G.labels[g] for g in members}


class TestIsNormal:
    def test_isotropy_is_always_normal(self, klein_cross, s3, s3_a3, pair2):
        for G in (klein_cross, s3, s3_a3, pair2):
            assert quotients.is_normal(G, core.isotropy(G))

    def test_units_are_always_normal(self, klein_cross, pair2):
        for G in (klein_cross, pair2):
            assert quotients.is_normal(G, G.units)

    def test_missing_units_rejected(self, klein_cross):
        check = quotients.is_normal(klein_cross, [klein_cross.label_index("(e,c)")])
        assert not check
        assert check.kind == "missing-unit"

    def test_moving_arrow_rejected(self, pair2):
        carrier = set(pair2.units) | {next(g for g in pair2.arrows()
                                           if pair2.src[g] != pair2.rng[g])}
        check = quotients.is_normal(pair2, carrier)
        assert not check and check.kind == "not-isotropy"

    def test_not_closed_under_composition_rejected(self, s3):
        G = s3
        carrier = set(G.units) | {G.label_index("s@p")}   # s.s = s2 escapes
        check = quotients.is_normal(G, carrier)
        assert not check
        assert check.kind in ("not-composition-closed", "not-inverse-closed")

    def test_conjugation_failure_rejected(self, s3):
        G = s3
        carrier = set(G.units) | {G.label_index("t@p")}   # {e, t} is a subgroup
        check = quotients.is_normal(G, carrier)
        assert not check and check.kind == "not-conjugation-closed"
        assert check.witness is not None

    def test_a3_inside_s3_is_normal(self, s3):
        carrier = {s3.label_index(l) for l in ("e@p", "s@p", "s2@p")}
        assert quotients.is_normal(s3, carrier)


class TestEnumeration:
    def test_counts_on_named_models(self, s3, pair2, klein_cross, s3_a3):
        assert len(quotients.enumerate_normal_subgroupoids(s3)) == 3
        assert len(quotients.enumerate_normal_subgroupoids(pair2)) == 1
        assert len(quotients.enumerate_normal_subgroupoids(klein_cross)) == 20
        assert len(quotients.enumerate_normal_subgroupoids(s3_a3)) == 6
        assert len(quotients.enumerate_normal_subgroupoids(
            generators.trivial_groupoid(3))) == 1

    def test_every_enumerated_carrier_is_normal(self, klein_cross):
        for H in quotients.enumerate_normal_subgroupoids(klein_cross):
            assert quotients.is_normal(klein_cross, H.members)

    def test_extremes_always_present(self, s3_a3):
        carriers = {H.members for H in quotients.enumerate_normal_subgroupoids(s3_a3)}
        assert frozenset(s3_a3.units) in carriers
        assert core.isotropy(s3_a3).members in carriers


class TestQuotient:
    def test_s3_by_a3_has_two_arrows(self, s3):
        carrier = {s3.label_index(l) for l in ("e@p", "s@p", "s2@p")}
        qr = quotients.quotient(s3, carrier)
        assert qr.quotient.n == 2
        assert core.validate(qr.quotient) == []

    def test_quotient_by_units_is_identity_sized(self, klein_cross):
        qr = quotients.quotient(klein_cross, klein_cross.units)
        assert qr.quotient.n == klein_cross.n
        assert core.validate(qr.quotient) == []

    def test_klein_cross_by_isotropy_is_the_effective_quotient(self, klein_cross):
        # each arm keeps the effective C2 swap (4 arrows per arm), the fixed
        # center keeps only its unit: 4 + 4 + 1
        qr = quotients.quotient(klein_cross, core.isotropy(klein_cross))
        assert qr.quotient.n == 9
        assert core.is_effective(qr.quotient)

    def test_klein_cross_by_central_fiber(self, klein_cross):
        # the central Klein four-group plus all units: only the center
        # collapses (4 arrows become 1), the 16 free arrows survive
        carrier = {g for g in klein_cross.arrows()
                   if klein_cross.labels[g].endswith(",c)")} | set(klein_cross.units)
        qr = quotients.quotient(klein_cross, carrier)
        assert qr.quotient.n == 17
        assert not core.is_effective(qr.quotient)

    def test_class_map_is_a_surjection_onto_quotient(self, s3_a3):
        for H in quotients.enumerate_normal_subgroupoids(s3_a3):
            qr = quotients.quotient(s3_a3, H)
            assert len(qr.class_map) == s3_a3.n
            assert set(qr.class_map) == set(range(qr.quotient.n))

    def test_quotient_preserves_validity(self, corpus40):
        for _, G in corpus40[:12]:
            for H in quotients.enumerate_normal_subgroupoids(G):
                qr = quotients.quotient(G, H)
                assert core.validate(qr.quotient) == []

    def test_preimage_of_units_recovers_carrier(self, corpus40):
        for _, G in corpus40[:12]:
            for H in quotients.enumerate_normal_subgroupoids(G):
                qr = quotients.quotient(G, H)
                assert quotients.quotient_preimage_of_units(G, qr) == H.members

    def test_rejects_non_normal_carrier(self, s3):
        with pytest.raises(ValueError):
            quotients.quotient(s3, set(s3.units) | {s3.label_index("t@p")})


class TestCommutatorAndAbelianization:
    def test_commutator_of_s3_fiber_is_a3(self, s3):
        comm = quotients.commutator_subgroupoid(s3)
        assert _labels(s3, comm.members) == {"e@p", "s@p", "s2@p"}

    def test_commutator_of_abelian_bundle_is_units(self):
        G = generators.group_bundle([("u", groups.klein())])
        comm = quotients.commutator_subgroupoid(G)
        assert comm.members == frozenset(G.units)

    def test_klein_cross_abelianization(self, klein_cross):
        ab = quotients.abelianize_groupoid(klein_cross)
        assert ab.g_fix.n == 4
        assert ab.g_ab.n == 4
        assert core.is_group_bundle(ab.g_ab)
        assert core.validate(ab.g_ab) == []

    def test_s3_a3_abelianization(self, s3_a3):
        ab = quotients.abelianize_groupoid(s3_a3)
        assert ab.g_fix.n == 9
        assert ab.g_ab.n == 5   # S3 drops to C2, A3 survives

    def test_pair_groupoid_abelianization_is_empty(self, pair2):
        ab = quotients.abelianize_groupoid(pair2)
        assert ab.g_fix.n == 0
        assert ab.g_ab.n == 0

    def test_abelianization_has_commutative_fibers(self, corpus40):
        for _, G in corpus40[:20]:
            ab = quotients.abelianize_groupoid(G)
            assert core.is_group_bundle(ab.g_ab)
            for (a, b), c in ab.g_ab.comp.items():
                assert ab.g_ab.comp[(b, a)] == c
