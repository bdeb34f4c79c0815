import pytest

SWEEP_N_MAX = 300


def sweep_cells(n_max=SWEEP_N_MAX):
    """Every (n, a) with 1 <= n <= n_max and 2 <= a <= max(2, 2n)."""
    for n in range(1, n_max + 1):
        for a in range(2, max(2, 2 * n) + 1):
            yield n, a


_acceptance = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    criterion = item.get_closest_marker("criterion")
    if criterion and report.when == "call":
        _acceptance.append((criterion.args[0], item.name, report.outcome))


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(id): acceptance criterion number")


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number, name, outcome in sorted(_acceptance):
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"AC{number:02d} {verdict}  {name}")
