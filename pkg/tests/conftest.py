import pytest

from groupoidlab import generators


@pytest.fixture(scope="session")
def klein_cross():
    return generators.klein_cross()


@pytest.fixture(scope="session")
def s3():
    return generators.s3_point()


@pytest.fixture(scope="session")
def s3_a3():
    return generators.s3_a3_bundle()


@pytest.fixture(scope="session")
def pair2():
    return generators.pair_groupoid(2)


@pytest.fixture(scope="session")
def corpus40():
    """The first forty corpus instances with the standard budget schedule."""
    return [(seed, generators.random_groupoid(seed, 1 + seed % 60))
            for seed in range(40)]
