"""Ovsienko reduction of every catalog partial Cartan matrix."""

from __future__ import annotations

from ..const import E_RANKS, REDUCE_RANKS, SUITE_REDUCE_ALL
from ..diagram import catalog, d_catalog
from ..exceptions import CarterLinkageError
from ..flation import UnitForm, certificate_holds, ovsienko_reduce
from .base import BaseSuite, SuiteResult


class ReduceAllSuite(BaseSuite):
    """Each diagram reduces to the Dynkin diagram of its class with an exact certificate."""

    suite_name = SUITE_REDUCE_ALL

    def run(self) -> SuiteResult:
        result = self.new_result()
        diagrams = d_catalog(REDUCE_RANKS) + catalog(f"E{E_RANKS[0]}")
        reached = {}
        for d in diagrams:
            form = UnitForm.of(d)
            try:
                reduction = ovsienko_reduce(form)
            except CarterLinkageError as err:
                result.check(False, f"{d.name}: {err}")
                continue
            reached[d.name] = reduction.type_names
            result.check(
                list(reduction.types) == [d.class_type],
                f"{d.name}: reduced to {reduction.type_names}, expected {d.class_type}",
            )
            result.check(certificate_holds(form, reduction), f"{d.name}: certificate fails")
            self._log_action(
                f"Reduced {d.name}", f"{len(reduction.steps)} inflations to {reduction.type_names}"
            )
        result.details["types"] = reached
        return result
