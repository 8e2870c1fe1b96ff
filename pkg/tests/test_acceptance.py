"""Every acceptance criterion at its stated tolerance, one pass/fail line each."""
import pytest

from conftest import ACCEPTANCE_LINES
from quiverhom.selftest import CRITERIA


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    result = CRITERIA[number](seed=0, p=101)
    ACCEPTANCE_LINES.append(result.line())
    print(result.line())
    assert result.passed, result.detail
