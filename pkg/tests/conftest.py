import pytest

from cwcodes import Codeword, span_basis


def words(*texts):
    return [Codeword.from_string(t) for t in texts]


def code(*texts):
    return span_basis(words(*texts))


@pytest.fixture
def D():
    """The 2-dim weight-4 length-6 code {000000, 111100, 001111, 110011}."""
    return code("111100", "001111")


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
