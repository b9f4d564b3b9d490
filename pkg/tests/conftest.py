import pytest

from gradalg.fixtures import extra_family, fixture_family

FAMILY = fixture_family()
EXTRA = extra_family()
EVERYTHING = {**FAMILY, **EXTRA}


def pytest_generate_tests(metafunc):
    if "fixture_name" in metafunc.fixturenames:
        metafunc.parametrize("fixture_name", sorted(FAMILY))
    if "any_name" in metafunc.fixturenames:
        metafunc.parametrize("any_name", sorted(EVERYTHING))


@pytest.fixture
def alg(fixture_name):
    return FAMILY[fixture_name]


@pytest.fixture
def any_alg(any_name):
    return EVERYTHING[any_name]


ACCEPTANCE: dict[str, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for key in sorted(ACCEPTANCE, key=lambda k: (int(k.rstrip("ab")), k)):
            terminalreporter.write_line(ACCEPTANCE[key])
