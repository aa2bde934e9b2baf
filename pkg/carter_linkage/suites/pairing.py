"""Pairing of roots of D_{l+1} outside D_l by δ = μ_max - φ + τ."""

from __future__ import annotations

from ..const import PAIRING_RANKS, SUITE_PAIRING
from ..linkage import pairing_check
from .base import BaseSuite, SuiteResult


class PairingSuite(BaseSuite):
    """Every root of D_{l+1} outside D_l meets a partner with the opposite label, 4 ≤ l ≤ 7."""

    suite_name = SUITE_PAIRING

    def run(self) -> SuiteResult:
        result = self.new_result()
        for l in PAIRING_RANKS:
            report = pairing_check(l)
            result.check(report.checked > 0, f"D{l}: no roots outside the span")
            for failure in report.failures:
                result.check(False, f"D{l}: {failure}")
            result.details[f"D{l}"] = report.checked
            self._log_action(f"Pairing D{l} ⊂ D{l + 1}", f"{report.checked} roots checked")
        return result
