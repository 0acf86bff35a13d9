import random

import pytest

from datrinfer import dump, parse_theory
from helpers import VERBS, VERB_QUERIES


@pytest.fixture
def verbs():
    return parse_theory(VERBS)


@pytest.fixture
def verb_data(verbs):
    data, failures = dump(verbs, VERB_QUERIES)
    assert not failures
    return data


@pytest.fixture
def rng():
    return random.Random(1234)


def pytest_terminal_summary(terminalreporter):
    from helpers import ACCEPTANCE_LINES
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
