"""Resource caps shared by the exact solvers.

Both values can be overridden through the environment so that CI runs and
interactive runs can use different budgets without code changes.
"""

from __future__ import annotations

import os
import time

DEFAULT_ORACLE_CAP = 22
DEFAULT_TIMEOUT_MS = 120_000


class ResourceLimitExceeded(RuntimeError):
    """An exact search hit its size cap or time budget.

    Callers must treat this as UNKNOWN, never as a NO answer.
    """


def oracle_cap() -> int:
    return int(os.environ.get("KERNELCUT_ORACLE_CAP", DEFAULT_ORACLE_CAP))


def timeout_ms() -> int:
    return int(os.environ.get("KERNELCUT_TIMEOUT_MS", DEFAULT_TIMEOUT_MS))


class Deadline:
    """Cheap wall-clock guard polled from inside search loops."""

    def __init__(self, ms: int | None = None):
        budget = timeout_ms() if ms is None else ms
        self.expires = time.monotonic() + budget / 1000.0
        self._ticks = 0

    def check(self) -> None:
        self._ticks += 1
        if self._ticks & 1023:
            return
        if time.monotonic() > self.expires:
            raise ResourceLimitExceeded("time budget exhausted")
