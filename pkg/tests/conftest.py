from __future__ import annotations

import time

import pytest

from whsl import classify


class ClassifyCache:
    """classify() results shared across the whole test session, with wall
    times kept for the runtime-budget assertions."""

    def __init__(self) -> None:
        self.entries: dict[int, list] = {}
        self.seconds: dict[int, float] = {}

    def get(self, alpha: int):
        if alpha not in self.entries:
            t0 = time.perf_counter()
            self.entries[alpha] = classify(alpha, workers=2)
            self.seconds[alpha] = time.perf_counter() - t0
        return self.entries[alpha]


@pytest.fixture(scope="session")
def classified() -> ClassifyCache:
    return ClassifyCache()
