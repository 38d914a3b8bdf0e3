"""Acceptance criteria; one pass/fail line per criterion (see ``-s``)."""

import pytest

from powersemi.acceptance import CRITERIA


@pytest.mark.parametrize("criterion", CRITERIA, ids=[c.__name__ for c in CRITERIA])
def test_criterion(criterion):
    result = criterion()
    print(result.line())
    assert result.passed, result.detail
