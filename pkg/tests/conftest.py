from pathlib import Path

import pytest
from hypothesis import settings

from lecycle.corpus import entry_files, load_entry
from lecycle.poly import Ring

# fixed example streams keep the suite reproducible run to run
settings.register_profile("repo", derandomize=True)
settings.load_profile("repo")

ROOT = Path(__file__).resolve().parent.parent
CORPUS = ROOT / "corpus"


@pytest.fixture
def txy():
    return Ring(["t", "x", "y"])


@pytest.fixture
def xy():
    return Ring(["x", "y"])


@pytest.fixture(scope="session")
def corpus_entries():
    return [load_entry(p) for p in entry_files(CORPUS)]


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            props = dict(getattr(rep, "user_properties", []))
            if "criterion" in props and rep.when == "call" or (outcome == "error" and "criterion" in props):
                lines.append((props["criterion"], "PASS" if outcome == "passed" else "FAIL"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for text, status in sorted(lines, key=lambda x: int(x[0].split()[0])):
            terminalreporter.write_line(f"criterion {text.split()[0]}: {status}  {text.split(' ', 1)[1]}")
