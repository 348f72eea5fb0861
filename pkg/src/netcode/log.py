import abc
import json
import sys
import time


class Logger:
    @abc.abstractmethod
    def on_session_start(self, name, **context):
        pass

    @abc.abstractmethod
    def log_progress(self, **record):
        pass

    @abc.abstractmethod
    def on_session_end(self, **summary):
        pass


class Silent(Logger):
    def on_session_start(self, name, **context):
        pass

    def log_progress(self, **record):
        pass

    def on_session_end(self, **summary):
        pass


class LogAndPrint(Logger):
    """
    Accumulates one dict per session and prints it after every event.

    >>> logger = LogAndPrint()
    >>> logger.on_session_start("solve", field="2")
    {"session": "solve", "step": 0, "field": "2"}
    """

    def __init__(self, stream=None):
        self.stream = stream if stream is not None else sys.stderr
        self.session_process = {}
        self._started_at = None

    def _emit(self):
        print(json.dumps(self.session_process, default=str), file=self.stream)

    def on_session_start(self, name, **context):
        self._started_at = time.perf_counter()
        self.session_process = {"session": name, "step": 0, **context}
        self._emit()

    def log_progress(self, **record):
        self.session_process.update(record)
        self.session_process["step"] = self.session_process.get("step", 0) + 1
        self._emit()

    def on_session_end(self, **summary):
        self.session_process.update(summary)
        if self._started_at is not None:
            self.session_process["elapsed"] = round(
                time.perf_counter() - self._started_at, 6
            )
        self.session_process["done"] = True
        self._emit()


def get_logger(verbose=None):
    from .config import settings

    if verbose is None:
        verbose = settings.verbose
    return LogAndPrint() if verbose else Silent()


def or_silent(logger):
    return Silent() if logger is None else logger
