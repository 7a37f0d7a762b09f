from __future__ import annotations

import sys
from pathlib import Path

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from pbwpoly.poset import LSequence  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

# filled by test_acceptance; one line per criterion
ACCEPTANCE_LINES: dict[int, str] = {}


@st.composite
def sequences(draw, n_max: int = 5, n_min: int = 1) -> LSequence:
    n = draw(st.integers(n_min, n_max))
    i = draw(st.integers(1, n))
    raw = sorted(draw(st.lists(st.integers(i - 1, n), min_size=i, max_size=i)))
    return LSequence(i, n, tuple(raw))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])
