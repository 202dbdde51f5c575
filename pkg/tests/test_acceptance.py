"""One test per exit criterion, each printing its pass/fail line."""

import pytest

from prnwords.acceptance import CRITERIA, run_criterion


@pytest.mark.parametrize("number", [c[0] for c in CRITERIA], ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, seed, capsys):
    result = run_criterion(number, seed=seed)
    with capsys.disabled():
        print("\n" + result.line())
    assert result.passed, result.detail
