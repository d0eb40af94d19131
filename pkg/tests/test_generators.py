"""Model constructions and the seeded corpus."""

import pytest

from groupoidlab import core, document, generators, groups


class TestTransformationGroupoid:
    def test_arrow_count_is_group_times_points(self):
        a = generators.trivial_action(groups.sym3(), ["x", "y"])
        G = generators.transformation_groupoid(a)
        assert G.n == 12
        assert len(G.units) == 2
        assert core.validate(G) == []

    def test_swap_action_gives_the_pair_groupoid_shape(self):
        a = generators.group_action(groups.cyclic(2), ["0", "1"], [(0, 1), (1, 0)])
        G = generators.transformation_groupoid(a)
        assert G.n == 4
        assert core.is_effective(G)
        assert len(core.unit_components(G)) == 1

    def test_fixed_points_match_the_action(self, klein_cross):
        fixed = core.fixed_points(klein_cross)
        assert {klein_cross.labels[x] for x in fixed.members} == {"(e,c)"}

    def test_invalid_action_rejected(self):
        with pytest.raises(ValueError):
            # an involution cannot act as a three-cycle
            generators.group_action(groups.cyclic(2), ["0", "1", "2"],
                                    [(0, 1, 2), (1, 2, 0)])
        with pytest.raises(ValueError):
            generators.group_action(groups.cyclic(3), ["0"], [(0,), (0,)])  # wrong shape

    def test_trivial_group_gives_trivial_groupoid(self):
        a = generators.trivial_action(groups.cyclic(1), ["x", "y", "z"])
        G = generators.transformation_groupoid(a)
        assert G.n == 3 and G.units == frozenset(range(3))


class TestBundlesAndPairs:
    def test_group_bundle_shape(self, s3_a3):
        assert s3_a3.n == 9
        assert core.is_group_bundle(s3_a3)
        assert core.validate(s3_a3) == []

    def test_empty_bundle(self):
        G = generators.group_bundle([])
        assert G.n == 0 and core.validate(G) == []

    def test_pair_groupoid_properties(self):
        G = generators.pair_groupoid(3)
        assert G.n == 9 and len(G.units) == 3
        assert core.validate(G) == []
        assert core.is_effective(G)
        assert len(core.unit_components(G)) == 1

    def test_trivial_groupoid_is_all_units(self):
        G = generators.trivial_groupoid(4)
        assert G.units == frozenset(range(4))
        assert core.validate(G) == []


class TestNamedModels:
    def test_klein_cross_shape(self, klein_cross):
        assert klein_cross.n == 20
        assert len(klein_cross.units) == 5
        assert core.validate(klein_cross) == []

    def test_s3_shape(self, s3):
        assert s3.n == 6 and len(s3.units) == 1

    def test_model_registry(self):
        assert set(generators.NAMED_MODELS) == {"klein-cross", "s3", "s3-a3-bundle"}
        for build in generators.NAMED_MODELS.values():
            assert core.validate(build()) == []


class TestRandomCorpus:
    def test_deterministic_in_seed(self):
        for seed in (0, 3, 17, 59):
            a = generators.random_groupoid(seed, 30)
            b = generators.random_groupoid(seed, 30)
            assert document.encode_groupoid(a) == document.encode_groupoid(b)

    def test_different_seeds_differ_somewhere(self):
        docs = {str(document.encode_groupoid(generators.random_groupoid(s, 40)))
                for s in range(12)}
        assert len(docs) > 1

    def test_respects_size_budget(self):
        for seed in range(30):
            for budget in (1, 7, 24, 60):
                G = generators.random_groupoid(seed, budget)
                assert 1 <= G.n <= max(budget, 1)

    def test_every_instance_is_valid(self):
        for seed in range(60):
            G = generators.random_groupoid(seed, 1 + seed % 60)
            assert core.validate(G) == []

    def test_degenerate_budget_gives_a_unit_point(self):
        G = generators.random_groupoid(0, 1)
        assert G.n == 1 and core.validate(G) == []
