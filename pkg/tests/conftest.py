import os
import random
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from affine_brauer import concat  # noqa: E402


@pytest.fixture
def rng():
    return random.Random(20261015)


@pytest.fixture(params=["python", "cython"])
def backend(request):
    if request.param == "cython" and not concat.compiled_available():
        pytest.skip("compiled extension not built")
    previous = concat.BACKEND
    concat.set_backend(request.param)
    yield request.param
    concat.set_backend(previous)


def pytest_terminal_summary(terminalreporter):
    from report import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
