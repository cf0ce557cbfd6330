import pytest

from relating.graph import complete_graph, cycle_graph, path_graph

_ACCEPTANCE_LINES = []


@pytest.fixture
def p3():
    return path_graph(3)


@pytest.fixture
def c5():
    return cycle_graph(5)


@pytest.fixture
def k3():
    return complete_graph(3)


@pytest.fixture
def acceptance_report():
    def record(number, name, passed, detail=""):
        status = "PASS" if passed else "FAIL"
        _ACCEPTANCE_LINES.append(f"[{status}] criterion {number}: {name} {detail}".rstrip())

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
