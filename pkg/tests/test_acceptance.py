"""The eight acceptance criteria at full size.

Each criterion prints one PASS/FAIL line; the lines are also repeated in the
pytest terminal summary.  Run directly with ``python3 tests/test_acceptance.py``.
"""
import sys

import pytest

from realhurwitz.battery import run_all

RESULTS = []


@pytest.fixture(scope="module")
def results():
    if not RESULTS:
        RESULTS.extend(run_all(max_d=6, max_r=3, echo=print))
    return {r.number: r for r in RESULTS}


@pytest.mark.slow
@pytest.mark.parametrize("number", range(1, 9))
def test_criterion(results, number):
    res = results[number]
    print(res.line())
    assert res.passed, res.line()


if __name__ == "__main__":
    sys.exit(0 if all(r.passed for r in run_all(max_d=6, max_r=3, echo=print)) else 1)
