import json
from pathlib import Path

import pytest

from arkvoc import vocab as vocab_mod

FIXTURES = Path(__file__).parent / "fixtures"
GOLDENS = Path(__file__).parent / "goldens"

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "criterion(number, description): acceptance criterion this test decides"
    )


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, description = marker.args
    if report.when == "call":
        _criteria[number] = (description, "PASS" if report.passed else "FAIL")
    elif report.when == "setup" and (report.skipped or report.failed):
        _criteria[number] = (description, "SKIP" if report.skipped else "FAIL")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        description, status = _criteria[number]
        terminalreporter.write_line(f"criterion {number:2d}: {status} - {description}")


def load_fixture_vocab(name: str) -> vocab_mod.LoadResult:
    with open(FIXTURES / name, encoding="utf-8") as handle:
        return vocab_mod.load_vocabulary(json.load(handle))


@pytest.fixture
def fixtures_dir():
    return FIXTURES


@pytest.fixture
def goldens_dir():
    return GOLDENS


@pytest.fixture
def lcsh1910():
    result = load_fixture_vocab("lcsh1910.json")
    assert not result.warnings
    return result.vocabulary


@pytest.fixture
def twain1910():
    return load_fixture_vocab("twain1910.json").vocabulary


@pytest.fixture
def fast2020():
    return load_fixture_vocab("fast2020.json").vocabulary


@pytest.fixture
def letter_text():
    return (FIXTURES / "twain_letter.txt").read_text(encoding="utf-8")


@pytest.fixture
def registry_text():
    return (FIXTURES / "registry.txt").read_text(encoding="utf-8")
