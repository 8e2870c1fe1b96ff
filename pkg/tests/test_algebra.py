import numpy as np
import pytest

from quiverhom.algebra import AlgebraError, Quiver, build_algebra
from quiverhom.fixtures import FIXTURE_NAMES, fixture


def test_fixture_dimensions():
    # vertices + arrows + surviving longer paths, counted by hand
    dims = {name: fixture(name, 101).dim for name in FIXTURE_NAMES}
    assert dims == {"A3": 3 + 2 + 1, "ex57": 4 + 3, "ex572": 5 + 4 + 3, "loop": 1 + 1, "nakayama": 2 + 2, "semisimple": 3}


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_fixtures_are_associative_with_unit(name):
    A = fixture(name, 101)
    assert A.check_associative()
    one = A.one()
    rng = np.random.default_rng(0)
    x = rng.integers(0, 101, A.dim)
    assert np.all(A.multiply(one, x) % 101 == x)
    assert np.all(A.multiply(x, one) % 101 == x)


def test_left_to_right_composition():
    A = fixture("A3", 101)
    xy = A.multiply(A.element("x"), A.element("y"))
    assert np.array_equal(xy, A.element("x*y"))
    assert not A.multiply(A.element("y"), A.element("x")).any()


def test_relation_kills_path():
    A = fixture("ex57", 101)
    assert not A.multiply(A.element("a"), A.element("b")).any()


def test_opposite_is_involutive():
    for name in FIXTURE_NAMES:
        A = fixture(name, 101)
        assert A.opposite().dim == A.dim
        assert A.opposite().opposite().quiver == A.quiver


def test_non_admissible_relation_rejected():
    Q = Quiver([1, 2], [("a", 1, 2)])
    with pytest.raises(AlgebraError):
        build_algebra(Q, ["a"], p=5)


def test_infinite_dimensional_rejected():
    Q = Quiver([1], [("x", 1, 1)])
    with pytest.raises(AlgebraError):
        build_algebra(Q, [], p=5)
