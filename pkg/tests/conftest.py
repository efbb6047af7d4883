import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from kiteratio.graph import make_complete, make_cycle, make_kite, make_path, make_pineapple, make_star  # noqa: E402


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def zoo():
    """A mix of connected graphs from every constructor."""
    return [
        make_path(2), make_path(5), make_path(9),
        make_cycle(5), make_cycle(8),
        make_complete(4), make_complete(7),
        make_star(3), make_star(6),
        make_kite(2, 3), make_kite(3, 3), make_kite(5, 4), make_kite(4, 6),
        make_pineapple(4, 2), make_pineapple(3, 5),
    ]


# one line per acceptance criterion, printed after the run
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])
