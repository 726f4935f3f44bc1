from collections import defaultdict

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", deadline=None, derandomize=True, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

ALPHA_GRID = np.linspace(0.01, 0.99, 99)
STICKY_GRID = np.linspace(0.2, 0.99, 80)


@pytest.fixture(scope="session")
def alpha_grid():
    return ALPHA_GRID


@pytest.fixture(scope="session")
def sticky_grid():
    return STICKY_GRID


@pytest.fixture(scope="session")
def figure_dir(tmp_path_factory):
    """All six figures written once through the CLI with default settings."""
    from stickybounds.cli import main

    out = tmp_path_factory.mktemp("figures")
    for n in range(1, 7):
        assert main(["figure", "--id", str(n), "--out", str(out)]) == 0
    return out


# -- acceptance summary ----------------------------------------------------------
# Tests marked @pytest.mark.criterion(n) are grouped; one line per criterion is
# printed at the end of the run regardless of output capturing.

_criteria = defaultdict(list)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        if hasattr(rep, "wasxfail"):
            status = "xfail"
        else:
            status = rep.outcome
        _criteria[mark.args[0]].append((item.name, status))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        results = _criteria[n]
        ok = all(s == "passed" for _, s in results)
        counts = defaultdict(int)
        for _, s in results:
            counts[s] += 1
        detail = ", ".join(f"{c} {s}" for s, c in sorted(counts.items()))
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'} ({detail})")
