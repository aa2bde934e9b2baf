"""Verification runner: schedules the selected suites and keeps an action history."""

from __future__ import annotations

import asyncio
import logging
import threading
import time
from dataclasses import dataclass, field
from datetime import datetime
from typing import Any

from .config import validate_verify_options
from .const import CONF_SUITES, MAX_ACTION_HISTORY
from .exceptions import CarterLinkageError
from .suites import SUITE_HANDLERS, SuiteResult

_LOGGER = logging.getLogger(__name__)


@dataclass
class VerificationReport:
    results: list[SuiteResult]
    action_history: list[dict[str, Any]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_json(self, timings: bool = False) -> dict[str, Any]:
        """Machine-readable report, identical across runs unless ``timings`` is set."""
        data: dict[str, Any] = {
            "passed": self.passed,
            "suites": [r.to_json(timings) for r in self.results],
        }
        if timings:
            data["action_history"] = self.action_history
        return data

    def to_text(self) -> str:
        lines = []
        for r in self.results:
            status = "PASS" if r.passed else "FAIL"
            lines.append(f"{status}  {r.name:<12} {r.checks:>6} checks  {r.duration:7.2f}s")
            lines.extend(f"      - {failure}" for failure in r.failures)
        lines.append("all suites passed" if self.passed else "verification FAILED")
        return "\n".join(lines)


class VerificationRunner:
    """Runs verification suites concurrently, reporting them in name order."""

    def __init__(self, options: dict[str, Any]) -> None:
        """Initialize the runner.

        Args:
            options: Raw verify options, validated against VERIFY_OPTIONS_SCHEMA
        """
        self.options = validate_verify_options(options)
        self._action_history: list[dict[str, Any]] = []
        self._last_action_time: datetime | None = None
        self._lock = threading.Lock()

    @property
    def suite_names(self) -> list[str]:
        return sorted(set(self.options[CONF_SUITES]))

    @property
    def action_history(self) -> list[dict[str, Any]]:
        with self._lock:
            return list(self._action_history)

    def _log_action(self, suite: str, action: str, reasoning: str = "") -> None:
        """Log an action to history with optional reasoning.

        Args:
            suite: Name of the suite taking the action
            action: Short action description (e.g., "Reduced D5(a1)")
            reasoning: What the action found or why it was taken
        """
        now = datetime.now()
        with self._lock:
            elapsed = None
            if self._last_action_time:
                elapsed = round((now - self._last_action_time).total_seconds(), 3)
            self._last_action_time = now
            self._action_history.append(
                {
                    "timestamp": now.isoformat(),
                    "suite": suite,
                    "action": action,
                    "reasoning": reasoning,
                    "seconds_since_previous": elapsed,
                }
            )
            if len(self._action_history) > MAX_ACTION_HISTORY:
                self._action_history = self._action_history[-MAX_ACTION_HISTORY:]
        _LOGGER.debug("[%s] %s (%s)", suite, action, reasoning)

    def _run_suite(self, name: str) -> SuiteResult:
        handler = SUITE_HANDLERS[name](self)
        start = time.perf_counter()
        try:
            result = handler.run()
        except CarterLinkageError as err:
            _LOGGER.error("Suite %s aborted: %s", name, err)
            result = SuiteResult(name)
            result.check(False, f"aborted: {err}")
        result.duration = time.perf_counter() - start
        self._log_action(
            name,
            "Suite passed" if result.passed else "Suite failed",
            f"{result.checks} checks, {len(result.failures)} failures",
        )
        if result.passed:
            _LOGGER.info("Suite %s passed (%d checks)", name, result.checks)
        else:
            _LOGGER.warning("Suite %s failed %d of %d checks", name, len(result.failures), result.checks)
        return result

    async def async_run(self) -> VerificationReport:
        """Run every selected suite in a worker thread and gather the results."""
        results = await asyncio.gather(
            *(asyncio.to_thread(self._run_suite, name) for name in self.suite_names)
        )
        ordered = sorted(results, key=lambda r: r.name)
        return VerificationReport(ordered, self.action_history)

    def run(self) -> VerificationReport:
        return asyncio.run(self.async_run())
