import sys
from pathlib import Path

import numpy as np
import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from kroc import LabeledSample  # noqa: E402

# labels of the nine-example worked case, listed by descending score
WORKED_LABELS = [1, 0, 0, 1, 0, 1, 0, 0, 0]


@pytest.fixture
def worked_sample():
    return LabeledSample(np.linspace(0.9, 0.1, 9), WORKED_LABELS)


@st.composite
def samples(draw, max_size=60, max_levels=None):
    """Two-class samples; small integer score range forces frequent ties."""
    n = draw(st.integers(2, max_size))
    labels = draw(st.lists(st.integers(0, 1), min_size=n, max_size=n))
    if 1 not in labels:
        labels[draw(st.integers(0, n - 1))] = 1
    if 0 not in labels:
        labels[draw(st.integers(0, n - 1))] = 0
        if 1 not in labels:
            labels[0] = 1 - labels[-1]
    levels = max_levels or draw(st.integers(1, 3 * n))
    scores = draw(st.lists(st.integers(0, levels), min_size=n, max_size=n))
    return LabeledSample(np.array(scores, dtype=float) / 7.0, labels)


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion():
    """Record one acceptance line; the test still asserts ``ok`` itself."""

    def record(number: int, name: str, ok: bool, detail: str = "") -> bool:
        status = "PASS" if ok else "FAIL"
        ACCEPTANCE_LINES.append(f"[{status}] criterion {number}: {name}" + (f" ({detail})" if detail else ""))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
