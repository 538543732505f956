import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

ACCEPTANCE: dict[str, list[tuple[bool, str]]] = {}


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)


@pytest.fixture
def criterion(request):
    """Record (passed, detail) for an acceptance criterion; summarized at the end of the run."""
    name = request.node.get_closest_marker("criterion").args[0]

    def record(passed, detail=""):
        ACCEPTANCE.setdefault(name, []).append((bool(passed), detail))
        print(f"{name}: {'PASS' if passed else 'FAIL'}  {detail}")
        return passed

    return record


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(name): acceptance criterion this test measures")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE):
        results = ACCEPTANCE[name]
        ok = all(p for p, _ in results)
        details = "; ".join(d for _, d in results if d)
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {details}")
