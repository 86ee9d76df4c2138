import os
from pathlib import Path

import pytest

ACCEPTANCE_LINES: list[str] = []


def corpus_dir() -> Path | None:
    """Directory holding graph8.g6 / graph9.g6: ``$MLAP_CORPUS_DIR`` or ``~/corpus``."""
    for cand in (os.environ.get("MLAP_CORPUS_DIR"), Path.home() / "corpus"):
        if cand and (Path(cand) / "graph8.g6").is_file():
            return Path(cand)
    return None


@pytest.fixture
def corpus():
    d = corpus_dir()
    if d is None:
        pytest.skip("graph6 corpora for n=8,9 not found (set MLAP_CORPUS_DIR)")
    return d


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
