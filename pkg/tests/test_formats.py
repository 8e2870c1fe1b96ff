import numpy as np
import pytest

from quiverhom.fixtures import FIXTURE_TEXTS, fixture
from quiverhom.formats import FormatError, parse_algebra, parse_module, print_algebra, print_module
from quiverhom.modules import is_isomorphic, random_module


@pytest.mark.parametrize("name", list(FIXTURE_TEXTS))
def test_algebra_round_trip(name):
    af = parse_algebra(FIXTURE_TEXTS[name], p=5)
    again = parse_algebra(print_algebra(af))
    assert again.canonical() == af.canonical()
    assert again.build().dim == af.build().dim


def test_relation_with_coefficients_round_trips():
    text = """field 7
vertices 1 2 3
arrow a: 1 -> 2
arrow b: 2 -> 3
arrow c: 1 -> 2
arrow d: 2 -> 3
relation a*b - 2 c*d
"""
    af = parse_algebra(text)
    assert parse_algebra(print_algebra(af)).canonical() == af.canonical()
    # a*b and c*d become proportional, so paths 1 -> 3 span one dimension
    A = af.build()
    assert len(A.between(0, 2)) == 3


@pytest.mark.parametrize("bad, line", [
    ("vertices 1 2\narrow a: 1 -> 3\n", 2),
    ("vertices 1 2\narrow a 1 2\n", 2),
    ("vertices 1 2\narrow a: 1 -> 2\nrelation a\n", 3),
    ("vertices 1 2\narrow a: 1 -> 2\narrow b: 1 -> 2\nrelation a*b\n", 4),
    ("vertices 1 1\n", 1),
    ("field x\n", 1),
    ("vertices 1\nfrobnicate\n", 2),
])
def test_algebra_errors_carry_line_numbers(bad, line):
    with pytest.raises(FormatError) as exc:
        parse_algebra(bad)
    assert exc.value.line == line


def test_module_round_trip():
    rng = np.random.default_rng(3)
    for name in FIXTURE_TEXTS:
        A = fixture(name, 101)
        for _ in range(5):
            M = random_module(A, rng)
            N = parse_module(print_module(M), A)
            assert N.dims == M.dims and is_isomorphic(M, N)


def test_module_errors():
    A = fixture("A3", 101)
    with pytest.raises(FormatError):
        parse_module("matrix x\n1\n", A)
    with pytest.raises(FormatError):
        parse_module("dim 1=1 2=1\nmatrix x\n1 2\n", A)
    with pytest.raises(FormatError):
        parse_module("dim 9=1\n", A)
