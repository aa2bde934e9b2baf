"""Base class for verification suites."""

from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any

if TYPE_CHECKING:
    from ..runner import VerificationRunner

_LOGGER = logging.getLogger(__name__)


@dataclass
class SuiteResult:
    """Outcome of one suite: how many checks ran and which ones failed."""

    name: str
    checks: int = 0
    failures: list[str] = field(default_factory=list)
    details: dict[str, Any] = field(default_factory=dict)
    duration: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, failure: str) -> bool:
        """Count one check, remembering ``failure`` when it does not hold."""
        self.checks += 1
        if not ok:
            self.failures.append(failure)
        return ok

    def to_json(self, timings: bool = False) -> dict[str, Any]:
        data = {
            "name": self.name,
            "passed": self.passed,
            "checks": self.checks,
            "failures": list(self.failures),
            "details": self.details,
        }
        if timings:
            data["duration"] = round(self.duration, 3)
        return data


class BaseSuite(ABC):
    """Base class for the suites behind ``verify``.

    Suites are plain synchronous computations; the runner schedules each in
    a worker thread and collects the results.
    """

    suite_name: str = ""

    def __init__(self, runner: "VerificationRunner") -> None:
        """Initialize the suite.

        Args:
            runner: The runner holding the validated options and action history
        """
        self.runner = runner

    @property
    def name(self) -> str:
        """Return the suite name used on the command line and in reports."""
        return self.suite_name or self.__class__.__name__

    @property
    def options(self) -> dict[str, Any]:
        return self.runner.options

    @abstractmethod
    def run(self) -> SuiteResult:
        """Run every check of the suite and return the collected result."""
        raise NotImplementedError

    def new_result(self) -> SuiteResult:
        return SuiteResult(self.name)

    def _log_action(self, action: str, reasoning: str = "") -> None:
        """Log an action with reasoning."""
        self.runner._log_action(self.name, action, reasoning)
