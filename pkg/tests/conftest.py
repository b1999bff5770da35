import sys

import pytest

from corpus import general_corpus, shift_corpus


@pytest.fixture(scope="session")
def shift_cases():
    return shift_corpus()


@pytest.fixture(scope="session")
def gen_corpus():
    return general_corpus()


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.format_line(num))
