"""Exhaustive check of the linkage criterion 𝓑∨(γ∇) < 2."""

from __future__ import annotations

from ..const import CATALOG_D_RANKS, CONF_CRITERION_DIAGRAMS, SUITE_CRITERION
from ..diagram import d_catalog, get_diagram
from ..linkage import criterion_check
from .base import BaseSuite, SuiteResult


class CriterionSuite(BaseSuite):
    """For every root of every ambient: 𝓑∨ < 2 outside the span, = 2 inside."""

    suite_name = SUITE_CRITERION

    def run(self) -> SuiteResult:
        result = self.new_result()
        names = self.options.get(CONF_CRITERION_DIAGRAMS) or []
        diagrams = [get_diagram(n) for n in names] if names else d_catalog(CATALOG_D_RANKS)
        checked = {}
        for d in diagrams:
            report = criterion_check(d)
            result.check(bool(report.results), f"{d.name}: no ambient to check")
            for entry in report.results:
                result.check(entry.passed, f"{d.name} in {entry.ambient}: {'; '.join(entry.failures[:3])}")
            checked[d.name] = {
                r.ambient: {"roots": r.roots_checked, "realizations": r.realizations} for r in report.results
            }
            self._log_action(f"Criterion {d.name}", f"ambients {', '.join(checked[d.name])}")
        result.details["roots_checked"] = checked
        return result
