"""
Phase timing on the monotonic performance counter.
"""
import time
from contextlib import contextmanager
from typing import Dict, Iterator


def elapsed_ms(start: float) -> int:
    """Whole milliseconds since a time.perf_counter() reading, rounded down."""
    return int((time.perf_counter() - start) * 1000)


class PhaseTimer:
    """
    Collects wall-clock durations of named phases in integer milliseconds.

    Example:
        timer = PhaseTimer()
        with timer.phase("index"):
            build_index(dag, chains)
        timer.ms("index")
    """

    def __init__(self) -> None:
        self._seconds: Dict[str, float] = {}

    @contextmanager
    def phase(self, name: str) -> Iterator[None]:
        start = time.perf_counter()
        try:
            yield
        finally:
            self._seconds[name] = self._seconds.get(name, 0.0) + time.perf_counter() - start

    def ms(self, name: str) -> int:
        # truncated so the sum of nested phases never exceeds their parent
        return int(self._seconds.get(name, 0.0) * 1000)

    def as_dict(self) -> Dict[str, int]:
        return {name: self.ms(name) for name in self._seconds}
