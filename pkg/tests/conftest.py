import pytest

from dendron.categories import gamma_category, injection_category, omega_category


@pytest.fixture(scope="session")
def omega3():
    return omega_category(3, 5)


@pytest.fixture(scope="session")
def omega2():
    return omega_category(2, 4)


@pytest.fixture(scope="session")
def gamma3():
    return gamma_category(3)


@pytest.fixture(scope="session")
def gamma4():
    return gamma_category(4)


@pytest.fixture(scope="session")
def injections4():
    return injection_category(4)


# acceptance summary: one line per criterion, from the outcomes of marked tests

_ACCEPTANCE: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(name): test belongs to the named acceptance criterion")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("acceptance")
        if mark:
            _ACCEPTANCE.setdefault(mark.args[0], {})


def pytest_runtest_makereport(item, call):
    mark = item.get_closest_marker("acceptance")
    if mark and call.when == "call":
        _ACCEPTANCE[mark.args[0]][item.name] = call.excinfo is None


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    tw = terminalreporter
    tw.section("acceptance criteria")
    for name, results in _ACCEPTANCE.items():
        if not results:
            tw.line(f"SKIP  {name}")
            continue
        failed = sorted(t for t, ok in results.items() if not ok)
        status = "FAIL" if failed else "PASS"
        tail = f"  ({len(results) - len(failed)}/{len(results)}; failing: {', '.join(failed)})" if failed else \
            f"  ({len(results)}/{len(results)})"
        tw.line(f"{status}  {name}{tail}")
