import numpy as np
import pytest

from quiverhom.linalg import (FpMatrix, NoSolution, complement_columns, in_span, intersect_columns,
                              inverse, is_prime, kernel, rank, rref, solve)

P = 7


def _random(rng, r, c, p=P):
    return rng.integers(0, p, size=(r, c)).astype(np.int64)


def test_is_prime():
    assert [q for q in range(20) if is_prime(q)] == [2, 3, 5, 7, 11, 13, 17, 19]


def test_rref_pivots_and_rank():
    a = np.array([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    r, piv = rref(a, P)
    assert piv == [0, 1]
    assert rank(a, P) == 2
    assert np.all(r[2] == 0)


def test_kernel_is_annihilated_and_has_right_dimension():
    rng = np.random.default_rng(1)
    for _ in range(50):
        a = _random(rng, 4, 6)
        k = kernel(a, P)
        assert k.shape[1] == 6 - rank(a, P)
        assert np.all((a @ k) % P == 0)


def test_solve_and_inverse():
    rng = np.random.default_rng(2)
    for _ in range(30):
        a = _random(rng, 5, 5)
        x = _random(rng, 5, 2)
        b = (a @ x) % P
        y = solve(a, b, P)
        assert y is not None and np.all((a @ y - b) % P == 0)
        if rank(a, P) == 5:
            assert np.all((a @ inverse(a, P)) % P == np.eye(5, dtype=np.int64))


def test_solve_reports_inconsistency():
    a = np.array([[1, 0], [0, 0]])
    assert solve(a, np.array([[0], [1]]), P) is None
    with pytest.raises(NoSolution):
        FpMatrix(a, P).solve(FpMatrix([[0], [1]], P))


def test_span_helpers():
    u = np.array([[1, 0], [0, 1], [0, 0]])
    w = np.array([[1], [1], [1]])
    c = complement_columns(u, 3, P)
    assert c.shape[1] == 1 and rank(np.hstack([u, c]), P) == 3
    assert intersect_columns(u, w, P).shape[1] == 0
    assert in_span(u, np.array([3, 4, 0]), P)
    assert not in_span(u, np.array([0, 0, 1]), P)


def test_fpmatrix_arithmetic():
    a = FpMatrix([[1, 2], [3, 4]], 5)
    assert a @ a.inverse() == FpMatrix.identity(2, 5)
    assert (a - a) == FpMatrix.zeros(2, 2, 5)
    assert (a + a.T).shape == (2, 2)
    with pytest.raises(ValueError):
        a @ FpMatrix([[1]], 7)
