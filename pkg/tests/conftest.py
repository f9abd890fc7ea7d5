import pytest

from starinv.ring import parse_element, parse_ring


@pytest.fixture
def el():
    """el(ring_spec, text) -> element."""

    def make(ring, text):
        return parse_element(parse_ring(ring), text)

    return make


QI_T = "mat:2:Qi:transpose"
Q2 = "mat:2:Q:transpose"
EX43 = "[[1,i],[0,0]]"


# one line per acceptance criterion, printed in the terminal summary
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
