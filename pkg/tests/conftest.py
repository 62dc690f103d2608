import pytest

from leavitt.corpus import GRAPHS

ACCEPTANCE = []


@pytest.fixture(params=sorted(GRAPHS))
def corpus_graph(request):
    return GRAPHS[request.param]


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE:
        terminalreporter.write_line(line)
