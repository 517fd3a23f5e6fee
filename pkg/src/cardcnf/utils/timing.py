"""Wall-clock timing helpers."""

import time
from types import TracebackType


class Stopwatch:
    """Context manager measuring elapsed wall time in milliseconds.

    Example:
        with Stopwatch() as watch:
            run()
        print(watch.elapsed_ms)
    """

    def __init__(self) -> None:
        self._start: float | None = None
        self._stop: float | None = None

    def __enter__(self) -> "Stopwatch":
        self._start = time.perf_counter()
        self._stop = None
        return self

    def __exit__(
        self,
        exc_type: type[BaseException] | None,
        exc: BaseException | None,
        tb: TracebackType | None,
    ) -> None:
        self._stop = time.perf_counter()

    @property
    def elapsed_ms(self) -> float:
        """Elapsed milliseconds; still running watches report time so far."""
        if self._start is None:
            return 0.0
        end = self._stop if self._stop is not None else time.perf_counter()
        return (end - self._start) * 1000.0
