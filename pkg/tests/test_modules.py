import numpy as np
import pytest

from quiverhom.fixtures import FIXTURE_NAMES, fixture
from quiverhom.modules import (Module, ModuleError, ShortExactSequence, cokernel, decompose,
                               direct_sum, dualize, hom_dim, image, is_isomorphic, kernel,
                               random_map, random_module, regular_module, standard_module,
                               submodules)


def test_standard_modules_on_A3():
    A = fixture("A3", 101)
    dims = {k: [standard_module(A, k, v).dims for v in "123"]
            for k in ("simple", "projective", "injective")}
    assert dims["simple"] == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    # paths start at v, so P(1) has a basis element at every vertex
    assert dims["projective"] == [(1, 1, 1), (0, 1, 1), (0, 0, 1)]
    assert dims["injective"] == [(1, 0, 0), (1, 1, 0), (1, 1, 1)]


def test_bad_module_rejected():
    A = fixture("ex57", 101)
    one = np.ones((1, 1), dtype=np.int64)
    # a and b both nonzero violates a*b = 0
    with pytest.raises(ModuleError):
        Module(A, [1, 1, 1, 0], [one, one, None])


def test_hom_dimensions_on_A3():
    A = fixture("A3", 101)
    P = [standard_module(A, "projective", v) for v in "123"]
    # Hom(P(v), P(w)) is spanned by the paths w -> v
    grid = [[hom_dim(P[i], P[j]) for j in range(3)] for i in range(3)]
    assert grid == [[1, 0, 0], [1, 1, 0], [1, 1, 1]]


def test_kernel_image_cokernel_exact():
    rng = np.random.default_rng(5)
    A = fixture("ex572", 101)
    for _ in range(20):
        M, N = random_module(A, rng), random_module(A, rng)
        f = random_map(M, N, rng)
        K, k = kernel(f)
        I, _, _ = image(f)
        Q, q = cokernel(f)
        assert K.dim + I.dim == M.dim and I.dim + Q.dim == N.dim
        assert (f @ k).is_zero()
        assert (q @ f).is_zero()


def test_short_exact_sequence_certificate():
    A = fixture("A3", 101)
    M = standard_module(A, "projective", "2")
    for U, inc in submodules(M):
        Q, proj = cokernel(inc)
        s = ShortExactSequence(inc, proj)
        assert s.check()


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_regular_module_decomposes_into_projectives(name):
    A = fixture(name, 101)
    parts = decompose(regular_module(A))
    assert sum(m for _, m in parts) == A.n
    for v in range(A.n):
        P = standard_module(A, "projective", v)
        assert any(is_isomorphic(P, X) for X, _ in parts)


def test_decompose_recovers_direct_sum():
    A = fixture("ex572", 101)
    rng = np.random.default_rng(9)
    S = standard_module(A, "simple", "3")
    P = standard_module(A, "projective", "1")
    M, _, _ = direct_sum([S, P, S])
    M2 = random_module(A, rng)
    parts = decompose(M)
    assert sorted(m for _, m in parts) == [1, 2]
    assert sum(X.dim * m for X, m in decompose(M2)) == M2.dim


def test_duality():
    A = fixture("A3", 101)
    for v in "123":
        D = dualize(standard_module(A, "projective", v))
        assert D.algebra.quiver == A.opposite().quiver
        assert is_isomorphic(D, standard_module(A.opposite(), "injective", v))


def test_isomorphism_distinguishes():
    A = fixture("loop", 101)
    k = standard_module(A, "simple", "1")
    kk, _, _ = direct_sum([k, k])
    assert not is_isomorphic(kk, regular_module(A))
    assert is_isomorphic(direct_sum([k])[0], k)
