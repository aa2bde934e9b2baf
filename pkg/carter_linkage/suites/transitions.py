"""Transition matrices for every pair {D_l(a_k), D_l}."""

from __future__ import annotations

from ..const import SUITE_TRANSITIONS, TRANSITION_RANKS
from ..diagram import catalog, get_diagram
from ..export import own_gamma_set
from ..transition import find_transition, verify_transition
from .base import BaseSuite, SuiteResult


class TransitionsSuite(BaseSuite):
    """Find M for each homogeneous pair and verify its identities and label transport."""

    suite_name = SUITE_TRANSITIONS

    def run(self) -> SuiteResult:
        result = self.new_result()
        found = {}
        for l in TRANSITION_RANKS:
            dynkin = get_diagram(f"D{l}")
            for d in catalog(f"D{l}"):
                if d.is_dynkin:
                    continue
                t = find_transition(own_gamma_set(d), dynkin)
                if not result.check(t is not None, f"{d.name} -> {dynkin.name}: no transition"):
                    continue
                report = verify_transition(t)
                result.check(report.passed, f"{t.name}: failed {', '.join(report.failures)}")
                found[t.name] = t.to_json()
                self._log_action(
                    f"Transition {t.name}",
                    f"vertex {t.moved_vertex + 1}, t = {list(t.coefficients)}, "
                    f"|𝓛| {report.from_total}/{report.to_total}",
                )
        result.details["transitions"] = found
        return result
