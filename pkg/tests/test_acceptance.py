"""Acceptance suite: one test per criterion, exact expectations, no tolerances.

Each criterion prints its own PASS line (visible with `pytest -s` or through
`omlkit selftest`, which runs the identical checks).
"""

import pytest

from omlkit import selftest


@pytest.mark.parametrize("name,check", selftest.CHECKS,
                         ids=[name for name, _ in selftest.CHECKS])
def test_criterion(name, check):
    detail = check()
    print(f"PASS {name}: {detail}")


def test_selftest_runner_is_green():
    import io
    stream = io.StringIO()
    assert selftest.run(stream)
    text = stream.getvalue()
    assert text.count("PASS") == len(selftest.CHECKS)
    assert "FAIL" not in text
