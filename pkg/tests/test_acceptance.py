"""The ten acceptance criteria, one verdict line each.

Every criterion prints its [PASS]/[FAIL] line so a verbose run reads as a
checklist; the assertion carries the same detail on failure. Run just this
file for the full gate:

    pytest tests/test_acceptance.py -v -s
"""

import pytest

from trigasket.acceptance import CRITERIA, SUITES, run_criterion, run_suite

_IDS = [f"{num:02d}-{fn.__name__}" for num, fn in CRITERIA]


@pytest.mark.parametrize(("number", "fn"), CRITERIA, ids=_IDS)
def test_criterion(number, fn):
    result = fn()
    print(result.line())
    assert result.passed, result.line()


def test_criteria_numbering_is_complete():
    assert [num for num, _ in CRITERIA] == list(range(1, 11))
    assert SUITES["all"] == tuple(range(1, 11))
    covered = set()
    for name, nums in SUITES.items():
        if name != "all":
            covered.update(nums)
    assert covered == set(range(1, 11))


def test_run_criterion_rejects_unknown():
    with pytest.raises(ValueError):
        run_criterion(11)
    with pytest.raises(ValueError):
        run_suite("everything")
