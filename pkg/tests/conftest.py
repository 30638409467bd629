from pathlib import Path

import pytest

from singnbe import Session, config
from singnbe.errors import KernelError, TypeCheckError
from singnbe.surface import parse

CORPUS = Path(__file__).resolve().parent.parent / "corpus"
CORPUS_FILES = sorted(CORPUS.glob("*.tt"))


def run_corpus_file(path, allow_star=False, proof_relevant=False):
    """Run a declaration file; return the session and one verdict per decl.

    A verdict is ``(decl, error)`` with ``error`` None on acceptance.
    """
    session = Session(allow_star=allow_star)
    verdicts = []
    with config.options(proof_relevant=proof_relevant):
        for d in parse(Path(path).read_text()).decls:
            try:
                session.run_decl(d)
                verdicts.append((d, None))
            except (TypeCheckError, KernelError) as err:
                verdicts.append((d, err))
    return session, verdicts


@pytest.fixture(scope="session")
def corpus_runs():
    return {p.name: run_corpus_file(p) for p in CORPUS_FILES}


@pytest.fixture(scope="session")
def corpus_judgements(corpus_runs):
    return [j for session, _ in corpus_runs.values() for j in session.judgements]


# -- acceptance report -------------------------------------------------------

ACCEPTANCE_RESULTS = {}  # criterion number -> (title, passed, detail)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_RESULTS):
        title, passed, detail = ACCEPTANCE_RESULTS[n]
        line = f"criterion {n:2d} {'PASS' if passed else 'FAIL'}  {title}"
        terminalreporter.write_line(line + (f"  ({detail})" if detail else ""))
