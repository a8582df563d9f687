import pytest

from thetasweep.verify import SUITES, run_suite


@pytest.mark.parametrize("suite", sorted(SUITES))
def test_suite_passes(suite):
    ok, checks = run_suite(suite)
    assert checks
    failing = [c for c in checks if not c[3]]
    assert ok, failing


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("nope")
