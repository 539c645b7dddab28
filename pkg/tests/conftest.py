import functools
import sys
from pathlib import Path

import pytest

from momentcx.moment_complex import WeightConfiguration, build_complex

DATA = Path(__file__).parent / "data"

P1 = [0, 1]
P2 = [0, 1, 2]
P3 = [0, 1, 2, 3]
SQUARE = [(0, 0), (1, 0), (0, 1), (1, 1)]
DESK = {"P1": P1, "P2": P2, "P3": P3, "square": SQUARE}


@functools.lru_cache(maxsize=None)
def _complex(weights):
    return build_complex(WeightConfiguration.from_weights(list(weights)))


def cx_of(weights):
    return _complex(tuple(weights))


@pytest.fixture(params=sorted(DESK))
def desk_complex(request):
    return cx_of(DESK[request.param])


@pytest.fixture
def data_dir():
    return DATA


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        terminalreporter.write_line(results[number][1])
