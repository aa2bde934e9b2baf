"""The 14 pairs of E8 roots with opposite labels over D7."""

from __future__ import annotations

from ..const import (
    E8_D7_PAIR_COUNT,
    E8_D7_PAIR_SUM,
    E8_D7_POSITIVE_PAIRS,
    SUITE_E8D7,
)
from ..exceptions import PairCountError
from ..linkage import e8_d7_pairs, to_two_row
from .base import BaseSuite, SuiteResult


class E8D7Suite(BaseSuite):
    """Compare the positive pairs with the tabulated coordinates and labels."""

    suite_name = SUITE_E8D7

    def run(self) -> SuiteResult:
        result = self.new_result()
        try:
            pairs = e8_d7_pairs()
        except PairCountError as err:
            result.check(False, str(err))
            return result
        result.check(len(pairs) == E8_D7_PAIR_COUNT, f"{len(pairs)} pairs")
        positive = [p for p in pairs if p.is_positive]
        found = [
            (to_two_row(p.eta.coords), to_two_row(p.lam.coords), p.label.labels) for p in positive
        ]
        result.check(
            len(found) == len(E8_D7_POSITIVE_PAIRS),
            f"{len(found)} positive pairs, expected {len(E8_D7_POSITIVE_PAIRS)}",
        )
        for row, (got, expected) in enumerate(zip(found, E8_D7_POSITIVE_PAIRS), start=1):
            result.check(got == expected, f"row {row}: found {got}, expected {expected}")
            total = tuple(a + b for a, b in zip(got[0], got[1]))
            result.check(total == E8_D7_PAIR_SUM, f"row {row}: sum {total}")
        result.details["positive_pairs"] = [
            {"eta": list(e), "lambda": list(lam), "label": list(u)} for e, lam, u in found
        ]
        self._log_action("E8/D7 pairs compared", f"{len(positive)} positive of {len(pairs)}")
        return result
