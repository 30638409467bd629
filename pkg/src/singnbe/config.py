"""Runtime options shared by evaluation and checking.

Options live in a context variable so that independent judgements running in
different threads (or nested ``options(...)`` blocks) never see each other's
settings.
"""

from __future__ import annotations

import contextlib
import contextvars
from dataclasses import dataclass, replace

DEFAULT_DEPTH_LIMIT = 100_000


@dataclass(frozen=True)
class Options:
    proof_relevant: bool = False  # experimental: boxes keep their content
    depth_limit: int = DEFAULT_DEPTH_LIMIT


_current: contextvars.ContextVar[Options] = contextvars.ContextVar(
    "singnbe_options", default=Options())


def current() -> Options:
    return _current.get()


@contextlib.contextmanager
def options(**changes):
    """Temporarily override fields of the active :class:`Options`."""
    token = _current.set(replace(_current.get(), **changes))
    try:
        yield _current.get()
    finally:
        _current.reset(token)
